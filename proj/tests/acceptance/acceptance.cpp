// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "dsavoid/bounds.hpp"
#include "dsavoid/constructors.hpp"
#include "dsavoid/errors.hpp"
#include "dsavoid/lists.hpp"
#include "dsavoid/oracle.hpp"
#include "dsavoid/solver.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace dsavoid;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> failures;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            pass = false;
            if (failures.size() < 5) failures.push_back(what);
        }
    }
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool census_matches(const ColoredGraph& cg)
{
    const auto census = oracle_cycle_census(cg.graph, cg.h);
    for (EdgeId e = 0; e < cg.graph.edge_count(); ++e) {
        if (census[e] != two_colored_cycles_through(cg.graph, cg.h, e).size()) return false;
    }
    return true;
}

CayleySpec cyclic_spec(std::vector<std::size_t> orders, const std::vector<std::vector<std::size_t>>& gens,
                       const std::vector<std::vector<std::size_t>>& commuting,
                       const std::vector<std::vector<std::size_t>>& half)
{
    CayleySpec spec{FiniteGroup::cyclic_product(std::move(orders)), {}, {}, {}};
    for (const auto& g : gens) spec.generators.push_back(spec.group.encode(g));
    for (const auto& g : commuting) spec.commuting.push_back(spec.group.encode(g));
    for (const auto& g : half) spec.half.push_back(spec.group.encode(g));
    return spec;
}

// 1: exact s for every family, census cross-checked.
void criterion1(Outcome& out)
{
    const auto start = Clock::now();
    std::size_t checked = 0;
    auto expect = [&](const std::string& name, const ColoredGraph& cg, int s) {
        ++checked;
        out.require(cg.s() == s, name + ": s=" + std::to_string(cg.s()) + " expected " + std::to_string(s));
        out.require(cg.certified(), name + ": not certified");
        out.require(census_matches(cg), name + ": census mismatch");
    };
    for (int d = 1; d <= 6; ++d) expect("Q" + std::to_string(d), hypercube(d), d);
    for (int t = 1; t <= 3; ++t) expect("K_2^" + std::to_string(t), complete_bipartite_pow2(t), 1 << t);
    const auto k44 = complete_bipartite_pow2(2);
    const auto k88 = complete_bipartite_pow2(3);
    for (int k : {1, 2}) expect("K44-" + std::to_string(k), remove_standard_matchings(k44, k), 4 - k);
    expect("K88-3", remove_standard_matchings(k88, 3), 5);

    struct Pair {
        std::string name;
        ColoredGraph a, b;
    };
    for (const auto& [name, a, b] : {Pair{"Q1xQ1", hypercube(1), hypercube(1)}, Pair{"Q2xQ1", hypercube(2), hypercube(1)},
                                     Pair{"K44xQ1", k44, hypercube(1)}}) {
        const auto p = cartesian_product(a, b);
        expect(name, p, std::min(a.d + b.s(), b.d + a.s()));
        out.require(p.claimed_s == std::min(a.d + b.s(), b.d + a.s()), name + ": claimed s");
    }
    const auto q2q1 = cartesian_product(hypercube(2), hypercube(1));
    out.require(q2q1.graph.edge_count() == 12 && q2q1.s() == hypercube(3).s(), "Q2xQ1 is not cube-shaped");

    const std::vector<std::vector<std::size_t>> units{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const auto cay_q3 = cayley_involutions(cyclic_spec({2, 2, 2}, units, units, {}));
    expect("Cay(Z2^3)", cay_q3, 3);
    const auto q3 = hypercube(3);
    out.require(cay_q3.graph.edges() == q3.graph.edges() && cay_q3.h == q3.h, "Cay(Z2^3) differs from Q3");
    const std::vector<std::vector<std::size_t>> k4gens{{1, 0}, {0, 1}, {1, 1}};
    const auto k4 = cayley_involutions(cyclic_spec({2, 2}, k4gens, k4gens, {}));
    expect("Cay(Z2^2)", k4, 3);
    out.require(k4.graph.vertex_count() == 4 && k4.graph.edge_count() == 6, "Cay(Z2^2) is not K4");
    expect("CayAb(Z4)", cayley_abelian(cyclic_spec({4}, {}, {}, {{1}})), 2);
    expect("CayAb(Z4xZ2)", cayley_abelian(cyclic_spec({4, 2}, {}, {}, {{1, 0}, {0, 1}})), 3);

    const double secs = seconds_since(start);
    out.require(secs < 60.0, "runtime over 60 s");
    out.detail << checked << " constructions, census exact, " << secs << " s";
}

// 2: exact inequality chain.
void criterion2(Outcome& out)
{
    using namespace bounds;
    const auto start = Clock::now();
    std::size_t pairs = 0;
    for (int s = 11; s <= 256; ++s) {
        for (int d = s; d <= 256; ++d) {
            const auto p = default_params(d, s);
            const auto m = lemma2_margin(d, s, p.gamma, p.tau, p.epsilon);
            ++pairs;
            out.require(m.satisfied && *m.exact > 0, "margin not positive at s=" + std::to_string(s) + " d=" + std::to_string(d));
        }
    }
    const auto p10 = default_params(10, 10);
    const auto m10 = lemma2_margin(10, 10, p10.gamma, p10.tau, p10.epsilon);
    out.require(*m10.exact == BigRational(-12890625, 100000000), "margin at s=d=10 is " + m10.exact->str());

    std::size_t grid = 0;
    for (std::int64_t logn : {4, 8, 12, 16, 20}) {
        for (std::int64_t s : {11, 16, 32, 128}) {
            for (std::int64_t d : {s, 2 * s}) {
                const std::int64_t n = std::int64_t{1} << logn;
                const auto p = default_params(static_cast<int>(d), static_cast<int>(s));
                const BigFloat beta = boost::multiprecision::pow(BigFloat(2), beta_threshold_log2(n, d, s));
                const auto r = lemma1_lhs(n, d, s, beta, to_big(p.gamma), to_big(p.tau));
                ++grid;
                const std::string at = " at n=2^" + std::to_string(logn) + " s=" + std::to_string(s) + " d=" + std::to_string(d);
                out.require(r.component("term1") < BigFloat(-1), "term1 >= 1/2" + at);
                out.require(r.component("term2") < BigFloat(-3), "term2 >= 1/8" + at);
                out.require(r.satisfied, "sum >= 1" + at);
            }
        }
    }
    out.require(beta_threshold_log2(16, 4, 4) == BigFloat(-651), "beta_threshold(16,4,4) != 2^-651");

    const double secs = seconds_since(start);
    out.require(secs < 30.0, "runtime over 30 s");
    out.detail << pairs << " margin pairs, " << grid << " lemma-1 grid points, margin(10,10) = -0.12890625, " << secs << " s";
}

// 3: distance-2 solver on 100 seeds per graph.
void criterion3(Outcome& out)
{
    const auto start = Clock::now();
    struct Named {
        std::string name;
        ColoredGraph cg;
    };
    const std::vector<Named> graphs{{"Q3", hypercube(3)}, {"Q4", hypercube(4)}, {"K44", complete_bipartite_pow2(2)},
                                    {"K88", complete_bipartite_pow2(3)}};
    for (const auto& [name, cg] : graphs) {
        std::size_t ok = 0, recolored = 0;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const auto L = generate_distance2(cg, seed, cg.s() - 1);
            const auto res = solve_theorem2(cg, L);
            const bool good = res.ok && verify_solution(cg, *res.coloring, L);
            if (good) {
                ++ok;
                recolored += *res.rho == Permutation::identity(cg.d) ? 0 : 1;
            } else {
                out.require(false, name + " seed " + std::to_string(seed) + ": " + res.reason);
            }
        }
        out.detail << name << " " << ok << "/100 (" << recolored << " after recoloring), ";
    }
    const double secs = seconds_since(start);
    out.require(secs < 120.0, "runtime over 2 min");
    out.detail << secs << " s";
}

// 4: oracle equivalence on arbitrary lists of size <= 2.
void criterion4(Outcome& out)
{
    const auto q3 = hypercube(3);
    const auto k44 = complete_bipartite_pow2(2);
    std::size_t avoidable = 0, solver_successes = 0, t2_runs = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const ColoredGraph& cg = seed % 2 == 0 ? q3 : k44;
        std::mt19937_64 rng(seed);
        ListAssignment L(cg.d);
        auto random_list = [&](EdgeId e) {
            const int size = 1 + static_cast<int>(rng() % 2);
            for (int i = 0; i < size; ++i) L.add(e, 1 + static_cast<Color>(rng() % static_cast<std::uint64_t>(cg.d)));
        };
        if (seed % 3 == 2) {
            // arbitrary lists on a distance-2 support
            for (EdgeId e : generate_distance2(cg, seed, 1).support()) random_list(e);
        } else {
            // density sweeps from sparse to every edge listed
            const std::uint64_t per_mille = 50 + 950 * (seed % 10) / 9;
            for (EdgeId e = 0; e < cg.graph.edge_count(); ++e) {
                if (rng() % 1000 < per_mille) random_list(e);
            }
        }
        const auto oracle = oracle_avoidable(cg.graph, cg.d, L);
        const std::string at = "seed " + std::to_string(seed);
        out.require(oracle.status != OracleStatus::BudgetExceeded, at + ": oracle budget exceeded");
        if (oracle.avoidable()) {
            ++avoidable;
            out.require(oracle.witness && verify_solution(cg, *oracle.witness, L), at + ": oracle witness fails");
        }

        const auto p = params_for(cg, Ratio(1, 2), Ratio(1, 2), Ratio(1, 2));
        const auto pipe = solve_pipeline(cg, L, p, ExhaustiveSearch{});
        if (pipe.ok) {
            ++solver_successes;
            out.require(verify_solution(cg, *pipe.coloring, L), at + ": pipeline output fails verification");
            out.require(oracle.avoidable(), at + ": pipeline succeeded on an oracle-infeasible instance");
        }
        try {
            const auto t2 = solve_theorem2(cg, L);
            ++t2_runs;
            if (t2.ok) {
                ++solver_successes;
                out.require(verify_solution(cg, *t2.coloring, L), at + ": distance-2 output fails verification");
                out.require(oracle.avoidable(), at + ": distance-2 solver succeeded on an oracle-infeasible instance");
            }
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::PreconditionViolated) throw;
        }
    }
    out.detail << "50 instances, " << avoidable << " avoidable by oracle, " << solver_successes << " solver successes ("
               << t2_runs << " distance-2 eligible), all consistent";
}

// 5: swap-plan invariants on 200 seeded instances.
void criterion5(Outcome& out)
{
    const std::vector<std::pair<std::string, ColoredGraph>> graphs{
        {"Q4", hypercube(4)}, {"Q6", hypercube(6)}, {"K88", complete_bipartite_pow2(3)}};
    std::size_t successes = 0, phase1 = 0;
    std::vector<std::size_t> per_family(graphs.size(), 0);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t which = seed % graphs.size();
        const auto& [name, cg] = graphs[which];
        const int s = cg.s();
        // beta * s = gamma * s = 1; epsilon * s = s - 1 is an integer
        const Ratio beta(1, s);
        const auto p = params_for(cg, Ratio(1, s), Ratio(3, 4), Ratio(s - 1, s), beta);
        const auto L = generate_sparse(cg, beta, seed);
        const std::string at = name + " seed " + std::to_string(seed);
        out.require(validate_beta_sparse(cg, L, beta).ok, at + ": lists not sparse");

        const auto res = solve_pipeline(cg, L, p, RandomSearch{500, seed});
        if (res.search.outcome == SearchOutcome::Found) ++phase1;
        if (!res.ok) continue;
        ++successes;
        ++per_family[which];

        const auto hprime = apply_permutation(cg.h, *res.search.rho);
        out.require(res.search.check.ok(), at + ": phase 1 check not passed");
        const auto& plan = res.pswap->plan;
        out.require(cycles_edge_disjoint(plan.cycles), at + ": plan not edge-disjoint");
        const auto conflicts = conflict_edges(cg.graph, hprime, L);
        std::set<EdgeId> conflict_set(conflicts.begin(), conflicts.end());
        out.require(plan.cycles.size() == conflicts.size(), at + ": cycle count differs from conflict count");
        for (const auto& c : plan.cycles) {
            std::size_t hits = 0;
            for (EdgeId e : c.edges) hits += conflict_set.count(e);
            out.require(hits == 1, at + ": cycle with " + std::to_string(hits) + " conflict edges");
        }
        const Ratio cap = Ratio(2) * p.gamma * Ratio(s) + p.epsilon * Ratio(s) + Ratio(1);
        for (Vertex v = 0; v < cg.graph.vertex_count(); ++v) {
            out.require(Ratio(plan.vertex_used[v]) <= cap, at + ": vertex " + std::to_string(v) + " over used-edge cap");
        }
        out.require(is_proper(cg.graph, *res.coloring) && verify_solution(cg, *res.coloring, L), at + ": output not verified");
    }
    out.detail << "success " << successes << "/200 (phase 1 " << phase1 << "/200; Q4 " << per_family[0] << ", Q6 "
               << per_family[1] << ", K88 " << per_family[2] << "), invariants held on every success";
}

// 6: swap algebra.
void criterion6(Outcome& out)
{
    std::vector<ColoredGraph> graphs{hypercube(4), complete_bipartite_pow2(3), remove_standard_matchings(complete_bipartite_pow2(3), 2),
                                     cartesian_product(complete_bipartite_pow2(2), hypercube(2))};
    std::vector<EdgeColoring> current;
    for (const auto& cg : graphs) current.push_back(cg.h);
    std::mt19937_64 rng(2024);
    std::size_t swaps = 0;
    while (swaps < 10000) {
        const std::size_t i = rng() % graphs.size();
        const auto& g = graphs[i].graph;
        const EdgeId e = rng() % g.edge_count();
        const auto cycles = two_colored_cycles_through(g, current[i], e);
        if (cycles.empty()) continue;
        const auto& c = cycles[rng() % cycles.size()];
        const auto next = swap_cycle(current[i], c);
        ++swaps;
        out.require(is_proper(g, next), "improper after swap");
        for (Vertex v : c.vertices) {
            out.require(vertex_color_set(g, next, v) == vertex_color_set(g, current[i], v), "vertex color set changed");
        }
        FourCycle back = c;
        std::swap(back.color_a, back.color_b);
        out.require(swap_cycle(next, back) == current[i], "double swap is not the identity");
        current[i] = next;
    }
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (Vertex v = 0; v < graphs[i].graph.vertex_count(); ++v) {
            out.require(vertex_color_set(graphs[i].graph, current[i], v) == vertex_color_set(graphs[i].graph, graphs[i].h, v),
                        "cumulative vertex color set drift");
        }
    }
    out.detail << swaps << " swaps, properness and vertex color sets preserved, double swap exact";
}

// 7: Z6 regression.
void criterion7(Outcome& out)
{
    const auto z6 = cayley_abelian(cyclic_spec({6}, {}, {}, {{1}}));
    out.require(z6.measured_s == 1, "measured s = " + std::to_string(z6.measured_s));
    out.require(z6.claimed_s == 2, "claimed s = " + std::to_string(z6.claimed_s));
    out.require(!z6.certified(), "Z6 construction certified");
    out.detail << "cayley_abelian(Z6) measured s = " << z6.measured_s << ", claimed " << z6.claimed_s << ", flagged uncertified";
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"constructor s-values", criterion1}, {"inequality suite", criterion2}, {"distance-2 end-to-end", criterion3},
        {"oracle equivalence", criterion4},   {"swap-plan properties", criterion5}, {"swap algebra", criterion6},
        {"Z6 discrepancy", criterion7}};
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome out;
        try {
            criteria[i].second(out);
        } catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): " << (out.pass ? "PASS" : "FAIL") << " | "
                  << out.detail.str();
        for (const auto& f : out.failures) std::cout << " | " << f;
        std::cout << std::endl;
        failed += out.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
