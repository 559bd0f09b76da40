#include "cli.hpp"

#include "dsavoid/bounds.hpp"
#include "dsavoid/constructors.hpp"
#include "dsavoid/errors.hpp"
#include "dsavoid/instance_io.hpp"
#include "dsavoid/lists.hpp"
#include "dsavoid/oracle.hpp"
#include "dsavoid/solver.hpp"
#include "dsavoid/sweep.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace dsavoid::cli {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::size_t parse_size(const std::string& text)
{
    std::size_t pos = 0;
    std::size_t value = 0;
    try {
        value = std::stoul(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != text.size() || text.empty()) throw Error(ErrorKind::InvalidArgument, "not a nonnegative integer: " + text);
    return value;
}

// "1,0,0;0,1,0" -> elements of the cyclic-product group.
std::vector<Element> parse_elements(const FiniteGroup& g, const std::string& text)
{
    std::vector<Element> out;
    for (const auto& tuple : split(text, ';')) {
        std::vector<std::size_t> coords;
        for (const auto& c : split(tuple, ',')) coords.push_back(parse_size(c));
        out.push_back(g.encode(coords));
    }
    return out;
}

std::vector<std::size_t> parse_sizes(const std::string& text)
{
    std::vector<std::size_t> out;
    for (const auto& item : split(text, ',')) out.push_back(parse_size(item));
    return out;
}

// hypercube:D | bipartite:T | remove:T:K | file:PATH
ColoredGraph build_family(const std::string& spec)
{
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "file") return colored_graph_of(read_instance(rest));
    const auto args = parse_sizes(rest);
    if (kind == "hypercube" && args.size() == 1) return hypercube(static_cast<int>(args[0]));
    if (kind == "bipartite" && args.size() == 1) return complete_bipartite_pow2(static_cast<int>(args[0]));
    if (kind == "remove" && args.size() == 2) {
        return remove_standard_matchings(complete_bipartite_pow2(static_cast<int>(args[0])), static_cast<int>(args[1]));
    }
    throw Error(ErrorKind::InvalidArgument, "unknown family spec '" + spec + "'");
}

void emit(const InstanceFile& file, const std::string& path, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << to_json(file).dump(1) << '\n';
    } else {
        write_instance(path, file);
    }
}

json cycle_json(const FourCycle& c)
{
    return json::array({c.u(), c.v(), c.z(), c.t()});
}

std::vector<std::array<Vertex, 4>> plan_tuples(const std::vector<FourCycle>& cycles)
{
    std::vector<std::array<Vertex, 4>> out;
    for (const auto& c : cycles) out.push_back(c.vertices);
    return out;
}

json check_json(const PermutationCheck& check)
{
    json out = {{"ok_a", check.ok_a}, {"ok_b", check.ok_b}, {"ok_c", check.ok_c}};
    json a = json::array();
    for (const auto& w : check.a_witnesses) a.push_back({{"anchor", w.anchor}, {"matching", w.matching_color}, {"conflicts", w.conflicts}});
    json b = json::array();
    for (const auto& w : check.b_witnesses) b.push_back({{"vertex", w.vertex}, {"conflicts", w.conflicts}});
    json c = json::array();
    for (const auto& w : check.c_witnesses) c.push_back({{"edge", w.edge}, {"disallowed", w.disallowed}, {"total", w.total}});
    out["a_witnesses"] = std::move(a);
    out["b_witnesses"] = std::move(b);
    out["c_witnesses"] = std::move(c);
    return out;
}

json record_json(const SelectionRecord& r)
{
    json out = {{"conflict", r.conflict},
                {"total_cycles", r.total_cycles},
                {"not_allowed", r.not_allowed},
                {"filter1_hits", r.filter1_hits},
                {"filter2_hits", r.filter2_hits},
                {"eliminated_filter1", r.eliminated_filter1},
                {"eliminated_filter2", r.eliminated_filter2},
                {"survivors", r.survivors}};
    if (r.chosen) out["chosen"] = cycle_json(*r.chosen);
    return out;
}

struct Options {
    // shared
    std::string input;
    std::string output;
    std::uint64_t seed = 0;
    // construct
    std::string family;
    int d = 0;
    int t = 0;
    int k = 0;
    std::string remove_colors;
    std::string left;
    std::string right;
    std::string orders;
    std::string gens;
    std::string commuting;
    std::string half;
    // analyze / gen-lists
    std::string beta;
    bool distance2 = false;
    int max_list = 0;
    // solve
    std::string mode = "auto";
    std::string gamma;
    std::string tau;
    std::string epsilon;
    std::size_t trials = 1000;
    bool exhaustive = false;
    int max_exhaustive_d = 8;
    bool literal_c = false;
    std::uint64_t solve_budget = 10'000'000;
    // oracle
    std::uint64_t budget = 100'000'000;
    // bounds
    std::int64_t n = 0;
    std::int64_t s = 0;
    std::string c;
    bool as_json = false;
    // sweep
    std::vector<std::string> families;
    std::string beta_grid = "0";
    std::size_t seeds = 10;
    std::uint64_t base_seed = 0;
    bool no_timing = false;
};

int cmd_construct(const Options& o, std::ostream& out)
{
    ColoredGraph cg;
    if (o.family == "hypercube") {
        cg = hypercube(o.d);
    } else if (o.family == "bipartite") {
        cg = complete_bipartite_pow2(o.t);
    } else if (o.family == "remove-matchings") {
        std::optional<std::vector<Color>> colors;
        if (!o.remove_colors.empty()) {
            colors.emplace();
            for (auto c : parse_sizes(o.remove_colors)) colors->push_back(static_cast<Color>(c));
        }
        cg = remove_standard_matchings(complete_bipartite_pow2(o.t), o.k, colors);
    } else if (o.family == "product") {
        cg = cartesian_product(build_family(o.left), build_family(o.right));
    } else if (o.family == "cayley-involutions" || o.family == "cayley-abelian") {
        CayleySpec spec{FiniteGroup::cyclic_product(parse_sizes(o.orders)), {}, {}, {}};
        spec.generators = parse_elements(spec.group, o.gens);
        spec.commuting = parse_elements(spec.group, o.commuting);
        spec.half = parse_elements(spec.group, o.half);
        cg = o.family == "cayley-involutions" ? cayley_involutions(spec) : cayley_abelian(spec);
        cg.family.params["orders"] = o.orders;
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown family '" + o.family + "'");
    }
    emit(instance_from_colored(cg), o.output, out);
    return kExitOk;
}

int cmd_analyze(const Options& o, std::ostream& out)
{
    const InstanceFile file = read_instance(o.input);
    const ColoredGraph cg = colored_graph_of(file);
    const Graph& g = cg.graph;

    json report;
    report["n"] = g.vertex_count();
    report["d"] = cg.d;
    report["edges"] = g.edge_count();
    report["s"] = {{"measured", cg.measured_s}, {"claimed", file.claimed_s.value_or(cg.measured_s)}};
    report["certified"] = cg.measured_s >= file.claimed_s.value_or(cg.measured_s);

    json matchings = json::array();
    for (const auto& m : standard_matchings(g, cg.h)) matchings.push_back({{"color", m.color}, {"size", m.edges.size()}});
    report["matchings"] = std::move(matchings);

    const auto census = oracle_cycle_census(g, cg.h);
    bool agrees = true;
    std::size_t lo = census.empty() ? 0 : census.front();
    std::size_t hi = lo;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        agrees = agrees && census[e] == two_colored_cycles_through(g, cg.h, e).size();
        lo = std::min(lo, census[e]);
        hi = std::max(hi, census[e]);
    }
    report["cycle_census"] = {{"min", lo}, {"max", hi}, {"agrees_with_enumeration", agrees}};

    if (file.lists) {
        report["lists"] = {{"support", file.lists->support().size()},
                           {"conflicts_under_h", conflict_edges(g, cg.h, *file.lists).size()},
                           {"distance2_support", is_distance_t_matching(g, file.lists->support(), 2)}};
        if (!o.beta.empty()) {
            const auto sparsity = validate_beta_sparse(cg, *file.lists, parse_ratio(o.beta));
            report["lists"]["beta"] = format_ratio(parse_ratio(o.beta));
            report["lists"]["beta_sparse"] = sparsity.ok;
            report["lists"]["violations"] = sparsity.violations.size();
        }
    }
    out << report.dump(1) << '\n';
    return kExitOk;
}

int cmd_gen_lists(const Options& o, std::ostream& out)
{
    InstanceFile file = read_instance(o.input);
    const ColoredGraph cg = colored_graph_of(file);
    if (o.distance2 == !o.beta.empty()) {
        throw Error(ErrorKind::InvalidArgument, "pass exactly one of --beta or --distance2");
    }
    file.lists = o.distance2 ? generate_distance2(cg, o.seed, o.max_list) : generate_sparse(cg, parse_ratio(o.beta), o.seed);
    file.solution.reset();
    file.plan.reset();
    file.report.reset();
    emit(file, o.output, out);
    return kExitOk;
}

LemmaParams solve_params(const Options& o, const ColoredGraph& cg)
{
    const LemmaParams defaults = bounds::default_params(cg.d, cg.s());
    return params_for(cg, o.gamma.empty() ? defaults.gamma : parse_ratio(o.gamma),
                      o.tau.empty() ? defaults.tau : parse_ratio(o.tau),
                      o.epsilon.empty() ? defaults.epsilon : parse_ratio(o.epsilon));
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err)
{
    InstanceFile file = read_instance(o.input);
    const ColoredGraph cg = colored_graph_of(file);
    const ListAssignment L = file.lists.value_or(ListAssignment(cg.d));

    std::string mode = o.mode;
    if (mode == "auto") {
        bool small_lists = true;
        for (const auto& [e, lst] : L.entries()) small_lists = small_lists && static_cast<int>(lst.size()) <= cg.s() - 1;
        mode = small_lists && is_distance_t_matching(cg.graph, L.support(), 2) ? "theorem2" : "theorem1";
    }

    json report = {{"mode", mode}};
    std::optional<EdgeColoring> solution;
    std::vector<FourCycle> cycles;
    if (mode == "theorem2") {
        const Theorem2Result res = solve_theorem2(cg, L, o.solve_budget);
        report["ok"] = res.ok;
        report["nodes"] = res.nodes;
        report["permutations_tried"] = res.permutations_tried;
        if (res.rho) report["rho"] = res.rho->images();
        report["phase"] = res.ok ? "none" : "theorem2";
        if (!res.ok) report["reason"] = res.reason;
        if (res.ok) solution = res.coloring;
        cycles = res.cycles;
    } else if (mode == "theorem1") {
        const LemmaParams p = solve_params(o, cg);
        report["gamma"] = format_ratio(p.gamma);
        report["tau"] = format_ratio(p.tau);
        report["epsilon"] = format_ratio(p.epsilon);
        SearchStrategy strategy = RandomSearch{o.trials, o.seed};
        if (o.exhaustive) strategy = ExhaustiveSearch{o.max_exhaustive_d};
        CheckOptions options;
        options.literal_condition_c = o.literal_c;
        const PipelineResult res = solve_pipeline(cg, L, p, strategy, options);
        report["ok"] = res.ok;
        report["phase"] = std::string(to_string(res.failed_phase));
        report["reason"] = res.reason;
        report["trials_used"] = res.search.trials;
        report["permutation_check"] = check_json(res.search.check);
        if (res.search.rho) report["rho"] = res.search.rho->images();
        if (res.pswap) {
            json records = json::array();
            for (const auto& r : res.pswap->plan.records) records.push_back(record_json(r));
            report["records"] = std::move(records);
            cycles = res.pswap->plan.cycles;
        }
        if (res.ok) solution = res.coloring;
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown mode '" + o.mode + "'");
    }

    if (solution && !verify_solution(cg, *solution, L)) {
        report["ok"] = false;
        report["phase"] = "verify";
        solution.reset();
    }
    file.solution.reset();
    file.plan.reset();
    if (solution) {
        file.solution = solution->colors();
        file.plan = plan_tuples(cycles);
    }
    file.report = report;
    emit(file, o.output, out);
    if (!solution) {
        err << "solve failed (" << report.value("phase", std::string("?")) << "): " << report.value("reason", std::string()) << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err)
{
    const InstanceFile file = read_instance(o.input);
    const ColoredGraph cg = colored_graph_of(file);
    if (!file.solution) throw Error(ErrorKind::InvalidInstance, "instance has no solution to verify");
    const ListAssignment L = file.lists.value_or(ListAssignment(cg.d));
    const auto verdict = check_solution(cg, EdgeColoring(*file.solution, cg.d), L);
    if (!verdict.ok) {
        err << "not verified: " << verdict.problem << '\n';
        return kExitFailure;
    }
    out << "verified: proper " << cg.d << "-edge coloring avoiding all lists\n";
    return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err)
{
    InstanceFile file = read_instance(o.input);
    const Graph g = graph_of(file);
    const ListAssignment L = file.lists.value_or(ListAssignment(file.d));
    const OracleResult res = oracle_avoidable(g, file.d, L, o.budget);
    json report = {{"nodes_explored", res.nodes_explored}};
    switch (res.status) {
    case OracleStatus::Avoidable: report["status"] = "avoidable"; break;
    case OracleStatus::NotAvoidable: report["status"] = "not_avoidable"; break;
    case OracleStatus::BudgetExceeded: report["status"] = "budget_exceeded"; break;
    }
    if (!o.output.empty()) {
        file.solution.reset();
        file.plan.reset();
        if (res.witness) file.solution = res.witness->colors();
        file.report = json{{"oracle", report}};
        emit(file, o.output, out);
    } else {
        out << report.dump() << '\n';
    }
    if (!res.avoidable()) {
        err << "oracle: " << report["status"].get<std::string>() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_bounds(const Options& o, std::ostream& out)
{
    using namespace bounds;
    if (o.n < 1 || o.d < 1 || o.s < 1 || o.s > o.d) throw Error(ErrorKind::InvalidArgument, "need n >= 1 and 1 <= s <= d");
    const int d = static_cast<int>(o.d);
    const int s = static_cast<int>(o.s);
    const LemmaParams defaults = default_params(d, s);
    const Ratio gamma = o.gamma.empty() ? defaults.gamma : parse_ratio(o.gamma);
    const Ratio tau = o.tau.empty() ? defaults.tau : parse_ratio(o.tau);
    const Ratio epsilon = o.epsilon.empty() ? defaults.epsilon : parse_ratio(o.epsilon);

    const BigFloat threshold = beta_threshold_log2(o.n, o.d, o.s);
    const BigFloat beta = o.beta.empty() ? boost::multiprecision::pow(BigFloat(2), threshold) : to_big(parse_ratio(o.beta));
    const BoundReport margin = lemma2_margin(o.d, o.s, gamma, tau, epsilon);
    const auto [c1, c2] = corollary_constants(Ratio(s, d));

    json report;
    report["n"] = o.n;
    report["d"] = o.d;
    report["s"] = o.s;
    report["beta_threshold_log2"] = to_decimal(threshold);
    report["beta_log2"] = to_decimal(log2(beta));
    report["gamma"] = format_ratio(gamma);
    report["tau"] = format_ratio(tau);
    report["epsilon"] = format_ratio(epsilon);
    report["lemma2_margin"] = {{"exact", margin.exact->str()}, {"satisfied", margin.satisfied}};
    try {
        const BoundReport lhs = lemma1_lhs(o.n, o.d, o.s, beta, to_big(gamma), to_big(tau));
        report["lemma1"] = {{"term1_log2", to_decimal(lhs.component("term1"))},
                            {"term2_log2", to_decimal(lhs.component("term2"))},
                            {"sum_log2", to_decimal(lhs.value)},
                            {"satisfied", lhs.satisfied}};
    } catch (const Error& e) {
        report["lemma1"] = {{"error", e.what()}};
    }
    report["corollary_constants"] = {{"kappa", format_ratio(Ratio(s, d))}, {"c1", c1.str()}, {"c2", c2.str()}};
    if (!o.c.empty()) {
        const BigFloat c = to_big(parse_ratio(o.c));
        if (o.s >= 11) {
            report["corollary4"] = corollary45_check(o.n, o.d, o.s, c, CorollaryVariant::ConstantOverS);
            report["corollary5"] = corollary45_check(o.n, o.d, o.s, c, CorollaryVariant::PowerOfS);
        } else {
            report["corollary4"] = "hypothesis s >= 11 violated";
            report["corollary5"] = "hypothesis s >= 11 violated";
        }
    }

    if (o.as_json) {
        out << report.dump(1) << '\n';
        return kExitOk;
    }
    for (const auto& [key, value] : report.items()) {
        if (value.is_object()) {
            for (const auto& [sub, v] : value.items()) out << key << '.' << sub << '\t' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
        } else {
            out << key << '\t' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
    }
    return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err)
{
    SweepConfig config;
    for (const auto& spec : o.families) config.instances.push_back({spec, build_family(spec)});
    for (const auto& b : split(o.beta_grid, ',')) config.betas.push_back(parse_ratio(b));
    config.seeds = o.seeds;
    config.base_seed = o.base_seed;
    if (!o.gamma.empty()) config.gamma = parse_ratio(o.gamma);
    if (!o.tau.empty()) config.tau = parse_ratio(o.tau);
    if (!o.epsilon.empty()) config.epsilon = parse_ratio(o.epsilon);
    config.trials = o.trials;
    config.timing = !o.no_timing;

    const auto rows = run_sweep(config);
    if (o.output.empty() || o.output == "-") {
        write_sweep_csv(out, rows);
    } else {
        std::ofstream file(o.output);
        if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + o.output);
        write_sweep_csv(file, rows);
    }
    for (const auto& [beta, counts] : success_by_beta(rows)) {
        err << "beta=" << format_ratio(beta) << " verified " << counts.first << "/" << counts.second << '\n';
    }
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Proper edge colorings avoiding sparse forbidden-color lists"};
    app.require_subcommand(1);
    Options o;

    auto* construct = app.add_subcommand("construct", "build a (d,s)-edge colorable graph with its standard coloring");
    construct->add_option("--family", o.family, "hypercube|bipartite|remove-matchings|product|cayley-involutions|cayley-abelian")->required();
    construct->add_option("--d", o.d, "hypercube dimension");
    construct->add_option("--t", o.t, "K_{2^t,2^t} exponent");
    construct->add_option("--k", o.k, "number of standard matchings to remove");
    construct->add_option("--remove-colors", o.remove_colors, "explicit colors to remove, comma separated");
    construct->add_option("--left", o.left, "product factor: hypercube:D|bipartite:T|remove:T:K|file:PATH");
    construct->add_option("--right", o.right, "product factor");
    construct->add_option("--orders", o.orders, "cyclic factor orders, e.g. 2,2,2");
    construct->add_option("--gens", o.gens, "S as coordinate tuples, e.g. 1,0,0;0,1,0");
    construct->add_option("--commuting", o.commuting, "S_c as coordinate tuples");
    construct->add_option("--half", o.half, "S_k as coordinate tuples");
    construct->add_option("-o,--out", o.output, "output file (default stdout)");

    auto* analyze = app.add_subcommand("analyze", "recompute s, matchings and the cycle census");
    analyze->add_option("-i,--in", o.input)->required();
    analyze->add_option("--beta", o.beta, "also validate lists for beta-sparseness");

    auto* gen = app.add_subcommand("gen-lists", "attach a generated list assignment");
    gen->add_option("-i,--in", o.input)->required();
    gen->add_option("--beta", o.beta, "greedy-random beta-sparse lists");
    gen->add_flag("--distance2", o.distance2, "lists on a distance-2 matching");
    gen->add_option("--max-list", o.max_list, "largest list size for --distance2");
    gen->add_option("--seed", o.seed);
    gen->add_option("-o,--out", o.output);

    auto* solve = app.add_subcommand("solve", "find a proper coloring avoiding the lists");
    solve->add_option("-i,--in", o.input)->required();
    solve->add_option("--mode", o.mode, "theorem1|theorem2|auto")->check(CLI::IsMember({"theorem1", "theorem2", "auto"}));
    solve->add_option("--gamma", o.gamma);
    solve->add_option("--tau", o.tau);
    solve->add_option("--epsilon", o.epsilon);
    solve->add_option("--trials", o.trials, "random permutation trials");
    solve->add_option("--seed", o.seed);
    solve->add_flag("--exhaustive", o.exhaustive, "enumerate all d! permutations");
    solve->add_option("--max-exhaustive-d", o.max_exhaustive_d);
    solve->add_flag("--literal-c", o.literal_c, "read condition (c) as allowed >= (1 - tau) s");
    solve->add_option("--budget", o.solve_budget, "backtracking node budget (theorem2)");
    solve->add_option("-o,--out", o.output);

    auto* verify = app.add_subcommand("verify", "check the stored solution");
    verify->add_option("-i,--in", o.input)->required();

    auto* oracle = app.add_subcommand("oracle", "exact avoidability by exhaustive search");
    oracle->add_option("-i,--in", o.input)->required();
    oracle->add_option("--budget", o.budget);
    oracle->add_option("-o,--out", o.output, "write the witness as the solution");

    auto* bnd = app.add_subcommand("bounds", "evaluate the closed-form thresholds");
    bnd->add_option("--n", o.n)->required();
    bnd->add_option("--d", o.d)->required();
    bnd->add_option("--s", o.s)->required();
    bnd->add_option("--beta", o.beta);
    bnd->add_option("--gamma", o.gamma);
    bnd->add_option("--tau", o.tau);
    bnd->add_option("--epsilon", o.epsilon);
    bnd->add_option("--c", o.c);
    bnd->add_flag("--json", o.as_json);

    auto* sweep = app.add_subcommand("sweep", "seeded two-phase solver runs over a beta grid, as CSV");
    sweep->add_option("--family", o.families, "hypercube:D|bipartite:T|remove:T:K|file:PATH (repeatable)")->required();
    sweep->add_option("--beta-grid", o.beta_grid, "comma separated rationals");
    sweep->add_option("--seeds", o.seeds);
    sweep->add_option("--base-seed", o.base_seed);
    sweep->add_option("--gamma", o.gamma);
    sweep->add_option("--tau", o.tau);
    sweep->add_option("--epsilon", o.epsilon);
    sweep->add_option("--trials", o.trials);
    sweep->add_flag("--no-timing", o.no_timing, "write wall_ms as 0");
    sweep->add_option("--out", o.output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*construct) return cmd_construct(o, out);
        if (*analyze) return cmd_analyze(o, out);
        if (*gen) return cmd_gen_lists(o, out);
        if (*solve) return cmd_solve(o, out, err);
        if (*verify) return cmd_verify(o, out, err);
        if (*oracle) return cmd_oracle(o, out, err);
        if (*bnd) return cmd_bounds(o, out);
        if (*sweep) return cmd_sweep(o, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed instance: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitInvalid;
}

} // namespace dsavoid::cli
