#include "doctest.h"

#include "cli.hpp"

#include "dsavoid/constructors.hpp"
#include "dsavoid/errors.hpp"
#include "dsavoid/instance_io.hpp"
#include "dsavoid/sweep.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

using namespace dsavoid;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli_run(std::vector<std::string> args)
{
    args.insert(args.begin(), "dsavoid");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json read_json(const std::string& path)
{
    std::ifstream in(path);
    return json::parse(in);
}

void write_json(const std::string& path, const json& doc)
{
    std::ofstream(path) << doc.dump();
}

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("instance round trip preserves s and matchings")
{
    for (const auto& cg : {hypercube(3), complete_bipartite_pow2(2), remove_standard_matchings(complete_bipartite_pow2(3), 3)}) {
        auto file = instance_from_colored(cg);
        auto doc = to_json(file);
        CHECK(doc["format"] == "dsgraph-v1");
        auto back = colored_graph_of(instance_from_json(json::parse(doc.dump())));
        CHECK(back.graph.edges() == cg.graph.edges());
        CHECK(back.h == cg.h);
        CHECK(back.s() == cg.s());
        CHECK(back.family.name == cg.family.name);
        const auto a = standard_matchings(cg.graph, cg.h);
        const auto b = standard_matchings(back.graph, back.h);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].edges == b[i].edges);
        CHECK(to_json(instance_from_json(doc)) == doc);
    }
}

TEST_CASE("lists, solution and plan round trip")
{
    auto cg = hypercube(3);
    auto file = instance_from_colored(cg);
    ListAssignment L(3);
    L.set(2, {1, 3});
    file.lists = L;
    file.solution = cg.h.colors();
    file.plan = std::vector<std::array<Vertex, 4>>{{0, 1, 3, 2}};
    file.report = json{{"ok", true}};
    auto doc = to_json(file);
    CHECK(doc["lists"]["2"] == json::array({1, 3}));
    auto back = instance_from_json(doc);
    CHECK(*back.lists == L);
    CHECK(*back.solution == cg.h.colors());
    CHECK(back.plan->at(0) == std::array<Vertex, 4>{0, 1, 3, 2});
}

TEST_CASE("invalid instances name the broken invariant")
{
    auto doc = to_json(instance_from_colored(hypercube(2)));
    auto broken = [&](auto mutate) {
        json d = doc;
        mutate(d);
        return kind_of([&] { instance_from_json(d); });
    };
    CHECK(broken([](json& d) { d["format"] = "other"; }) == ErrorKind::InvalidInstance);
    CHECK(broken([](json& d) { d["edges"][0] = json::array({1, 0}); }) == ErrorKind::InvalidInstance);
    CHECK(broken([](json& d) { std::swap(d["edges"][0], d["edges"][1]); }) == ErrorKind::InvalidInstance);
    CHECK(broken([](json& d) { d["coloring"].push_back(1); }) == ErrorKind::InvalidInstance);
    CHECK(broken([](json& d) { d["coloring"][0] = 3; }) == ErrorKind::InvalidInstance);
    CHECK(broken([](json& d) { d["lists"] = json{{"9", {1}}}; }) == ErrorKind::InvalidInstance);
    CHECK(broken([](json& d) { d["lists"] = json{{"0", {5}}}; }) == ErrorKind::InvalidInstance);
    CHECK(broken([](json& d) { d.erase("n"); }) == ErrorKind::InvalidInstance);
    try {
        json d = doc;
        d["coloring"].push_back(1);
        instance_from_json(d);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("coloring") != std::string::npos);
    }
}

TEST_CASE("sweep rows are deterministic with timing off")
{
    SweepConfig config;
    config.instances.push_back({"hypercube:3", hypercube(3)});
    config.betas = {Ratio(0), Ratio(1, 3)};
    config.seeds = 3;
    config.gamma = Ratio(1, 3);
    config.tau = Ratio(2, 3);
    config.epsilon = Ratio(1, 3);
    config.trials = 20;
    config.timing = false;
    auto rows = run_sweep(config);
    REQUIRE(rows.size() == 6);
    for (const auto& r : rows) {
        if (r.verified) CHECK((r.phase1 && r.phase2));
        if (r.beta == Ratio(0)) {
            CHECK(r.phase1);
            CHECK(r.trials_used == 1);
            CHECK(r.verified);
        }
    }
    std::ostringstream a, b;
    write_sweep_csv(a, rows);
    write_sweep_csv(b, run_sweep(config));
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("family,n,d,s,beta,gamma,tau,epsilon,seed,phase1,phase2,verified,trials_used,wall_ms\n", 0) == 0);
    auto summary = success_by_beta(rows);
    CHECK(summary[Ratio(0)] == std::pair<std::size_t, std::size_t>{3, 3});
}

} // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("construct then analyze reports s")
{
    auto r = cli_run({"construct", "--family", "hypercube", "--d", "3", "-o", "cli_q3.json"});
    REQUIRE(r.code == cli::kExitOk);
    r = cli_run({"analyze", "-i", "cli_q3.json"});
    REQUIRE(r.code == cli::kExitOk);
    auto report = json::parse(r.out);
    CHECK(report["s"]["measured"] == 3);
    CHECK(report["cycle_census"]["agrees_with_enumeration"] == true);
    CHECK(report["matchings"].size() == 3);
}

TEST_CASE("distance-2 lists, theorem2 solve and verify end to end")
{
    REQUIRE(cli_run({"construct", "--family", "hypercube", "--d", "3", "-o", "cli_t2.json"}).code == 0);
    REQUIRE(cli_run({"gen-lists", "-i", "cli_t2.json", "--distance2", "--max-list", "2", "--seed", "1", "-o", "cli_t2.json"}).code == 0);
    auto r = cli_run({"solve", "-i", "cli_t2.json", "--mode", "theorem2", "-o", "cli_t2_solved.json"});
    REQUIRE(r.code == cli::kExitOk);
    auto doc = read_json("cli_t2_solved.json");
    CHECK(doc.contains("solution"));
    CHECK(doc.contains("plan"));
    CHECK(doc["report"]["mode"] == "theorem2");
    r = cli_run({"verify", "-i", "cli_t2_solved.json"});
    CHECK(r.code == cli::kExitOk);
    r = cli_run({"oracle", "-i", "cli_t2.json"});
    CHECK(r.code == cli::kExitOk);
    CHECK(json::parse(r.out)["status"] == "avoidable");
}

TEST_CASE("auto mode picks theorem2 for distance-2 lists")
{
    REQUIRE(cli_run({"construct", "--family", "bipartite", "--t", "3", "-o", "cli_auto.json"}).code == 0);
    REQUIRE(cli_run({"gen-lists", "-i", "cli_auto.json", "--distance2", "--max-list", "7", "--seed", "4", "-o", "cli_auto.json"}).code == 0);
    REQUIRE(cli_run({"solve", "-i", "cli_auto.json", "-o", "cli_auto_solved.json"}).code == 0);
    CHECK(read_json("cli_auto_solved.json")["report"]["mode"] == "theorem2");
}

TEST_CASE("theorem1 mode with desk parameters")
{
    REQUIRE(cli_run({"construct", "--family", "hypercube", "--d", "4", "-o", "cli_t1.json"}).code == 0);
    REQUIRE(cli_run({"gen-lists", "-i", "cli_t1.json", "--beta", "1/4", "--seed", "2", "-o", "cli_t1.json"}).code == 0);
    auto r = cli_run({"analyze", "-i", "cli_t1.json", "--beta", "1/4"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["lists"]["beta_sparse"] == true);
    r = cli_run({"solve", "-i", "cli_t1.json", "--mode", "theorem1", "--gamma", "1/4", "--tau", "1/2", "--epsilon", "1/2",
                 "--trials", "500", "--seed", "3", "-o", "cli_t1_solved.json"});
    auto doc = read_json("cli_t1_solved.json");
    CHECK(doc["report"]["mode"] == "theorem1");
    if (r.code == cli::kExitOk) {
        CHECK(cli_run({"verify", "-i", "cli_t1_solved.json"}).code == cli::kExitOk);
    } else {
        CHECK(r.code == cli::kExitFailure);
        CHECK_FALSE(doc.contains("solution"));
    }
}

TEST_CASE("verify names the conflicting edge")
{
    REQUIRE(cli_run({"construct", "--family", "hypercube", "--d", "3", "-o", "cli_bad.json"}).code == 0);
    auto doc = read_json("cli_bad.json");
    doc["lists"] = json{{"5", {doc["coloring"][5]}}};
    doc["solution"] = doc["coloring"];
    write_json("cli_bad.json", doc);
    auto r = cli_run({"verify", "-i", "cli_bad.json"});
    CHECK(r.code == cli::kExitFailure);
    CHECK(r.err.find("5") != std::string::npos);

    doc.erase("solution");
    write_json("cli_bad.json", doc);
    CHECK(cli_run({"verify", "-i", "cli_bad.json"}).code == cli::kExitInvalid);
}

TEST_CASE("invalid input exits 2")
{
    CHECK(cli_run({"analyze", "-i", "does_not_exist.json"}).code == cli::kExitInvalid);
    CHECK(cli_run({"frobnicate"}).code == cli::kExitInvalid);
    CHECK(cli_run({"construct", "--family", "hypercube", "--d", "0"}).code == cli::kExitInvalid);
    std::ofstream("cli_garbage.json") << "{\"format\": \"dsgraph-v1\", \"n\": 2, \"d\": 1, \"edges\": [[1, 0]]}";
    auto r = cli_run({"analyze", "-i", "cli_garbage.json"});
    CHECK(r.code == cli::kExitInvalid);
    CHECK(r.err.find("edges") != std::string::npos);
    CHECK(cli_run({"gen-lists", "-i", "cli_q3.json", "--distance2", "--max-list", "3"}).code == cli::kExitInvalid);
}

TEST_CASE("construct covers every family")
{
    CHECK(cli_run({"construct", "--family", "remove-matchings", "--t", "3", "--k", "3"}).code == 0);
    auto r = cli_run({"construct", "--family", "product", "--left", "bipartite:2", "--right", "hypercube:1"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["s"]["measured"] == 5);
    r = cli_run({"construct", "--family", "cayley-involutions", "--orders", "2,2", "--gens", "1,0;0,1;1,1", "--commuting", "1,0;0,1;1,1"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["s"]["measured"] == 3);
    r = cli_run({"construct", "--family", "cayley-abelian", "--orders", "6", "--half", "1"});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["s"]["measured"] == 1);
    CHECK(doc["s"]["claimed"] == 2);
}

TEST_CASE("bounds subcommand")
{
    auto r = cli_run({"bounds", "--n", "16", "--d", "4", "--s", "4", "--json"});
    REQUIRE(r.code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["beta_threshold_log2"].get<std::string>().rfind("-651", 0) == 0);
    r = cli_run({"bounds", "--n", "1024", "--d", "11", "--s", "11", "--c", "1/100"});
    CHECK(r.code == 0);
    CHECK(r.out.find("lemma2_margin.exact\t81/512") != std::string::npos);
}

TEST_CASE("sweep subcommand is reproducible")
{
    std::vector<std::string> args = {"sweep", "--family", "hypercube:3", "--family", "bipartite:2", "--beta-grid", "0,1/4",
                                     "--seeds", "2", "--gamma", "1/3", "--tau", "1/2", "--epsilon", "1/2",
                                     "--trials", "20", "--no-timing"};
    auto a = cli_run(args);
    auto b = cli_run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.err.find("beta=0 verified 4/4") != std::string::npos);
}

} // TEST_SUITE
