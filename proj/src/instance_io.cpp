#include "dsavoid/instance_io.hpp"

#include "dsavoid/errors.hpp"

#include <fstream>
#include <string>

namespace dsavoid {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& what)
{
    throw Error(ErrorKind::InvalidInstance, what);
}

std::vector<Color> color_array(const json& doc, const char* key, std::size_t edges, int d)
{
    const json& arr = doc.at(key);
    if (!arr.is_array()) invalid(std::string(key) + " must be an array");
    if (arr.size() != edges) {
        invalid(std::string(key) + " length " + std::to_string(arr.size()) + " differs from edge count " +
                std::to_string(edges));
    }
    std::vector<Color> out;
    out.reserve(arr.size());
    for (const auto& c : arr) {
        if (!c.is_number_integer()) invalid(std::string(key) + " entries must be integers");
        const auto value = c.get<long long>();
        if (value < 1 || value > d) invalid(std::string(key) + " uses color " + std::to_string(value) + " outside 1..d");
        out.push_back(static_cast<Color>(value));
    }
    return out;
}

} // namespace

json to_json(const InstanceFile& file)
{
    json doc;
    doc["format"] = kInstanceFormat;
    doc["n"] = file.n;
    doc["d"] = file.d;
    json edges = json::array();
    for (auto [u, v] : file.edges) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    if (file.coloring) doc["coloring"] = *file.coloring;
    if (file.claimed_s || file.measured_s) {
        json s = json::object();
        if (file.claimed_s) s["claimed"] = *file.claimed_s;
        if (file.measured_s) s["measured"] = *file.measured_s;
        doc["s"] = std::move(s);
    }
    if (file.family) {
        doc["family"] = {{"name", file.family->name}, {"params", file.family->params}};
        if (file.claimed_s) doc["family"]["claimed_s"] = *file.claimed_s;
        if (file.measured_s) doc["family"]["measured_s"] = *file.measured_s;
    }
    if (file.lists) {
        json lists = json::object();
        for (const auto& [e, lst] : file.lists->entries()) lists[std::to_string(e)] = lst;
        doc["lists"] = std::move(lists);
    }
    if (file.solution) doc["solution"] = *file.solution;
    if (file.plan) {
        json plan = json::array();
        for (const auto& c : *file.plan) plan.push_back(c);
        doc["plan"] = std::move(plan);
    }
    if (file.report) doc["report"] = *file.report;
    return doc;
}

InstanceFile instance_from_json(const json& doc)
{
    if (!doc.is_object()) invalid("document must be a JSON object");
    if (!doc.contains("format") || doc["format"] != kInstanceFormat) invalid("format tag must be \"dsgraph-v1\"");
    if (!doc.contains("n") || !doc["n"].is_number_unsigned()) invalid("n must be a nonnegative integer");
    if (!doc.contains("d") || !doc["d"].is_number_integer() || doc["d"].get<long long>() < 0) {
        invalid("d must be a nonnegative integer");
    }
    if (!doc.contains("edges") || !doc["edges"].is_array()) invalid("edges must be an array");

    InstanceFile file;
    file.n = doc["n"].get<std::size_t>();
    file.d = doc["d"].get<int>();
    for (const auto& pair : doc["edges"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_number_unsigned()) {
            invalid("each edge must be a pair of nonnegative integers");
        }
        const auto u = pair[0].get<std::size_t>();
        const auto v = pair[1].get<std::size_t>();
        if (u >= v) invalid("edges must be canonical (u < v)");
        if (v >= file.n) invalid("edge endpoint " + std::to_string(v) + " is not below n");
        if (!file.edges.empty() && file.edges.back() >= std::make_pair(u, v)) {
            invalid("edges must be sorted lexicographically without repeats");
        }
        file.edges.emplace_back(u, v);
    }
    const std::size_t m = file.edges.size();

    if (doc.contains("coloring")) file.coloring = color_array(doc, "coloring", m, file.d);
    if (doc.contains("solution")) file.solution = color_array(doc, "solution", m, file.d);
    if (doc.contains("s")) {
        const json& s = doc["s"];
        if (s.contains("claimed")) file.claimed_s = s["claimed"].get<int>();
        if (s.contains("measured")) file.measured_s = s["measured"].get<int>();
    }
    if (doc.contains("family")) {
        const json& fam = doc["family"];
        if (!fam.is_object() || !fam.contains("name") || !fam["name"].is_string()) invalid("family needs a name");
        Family f;
        f.name = fam["name"].get<std::string>();
        if (fam.contains("params")) {
            for (const auto& [key, value] : fam["params"].items()) {
                if (!value.is_string()) invalid("family params must be strings");
                f.params[key] = value.get<std::string>();
            }
        }
        file.family = std::move(f);
    }
    if (doc.contains("lists")) {
        const json& lists = doc["lists"];
        if (!lists.is_object()) invalid("lists must be an object keyed by edge index");
        ListAssignment L(file.d);
        for (const auto& [key, value] : lists.items()) {
            std::size_t e = 0;
            try {
                std::size_t pos = 0;
                e = std::stoul(key, &pos);
                if (pos != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                invalid("list key '" + key + "' is not an edge index");
            }
            if (e >= m) invalid("list key " + key + " is not a valid edge index");
            if (!value.is_array()) invalid("list of edge " + key + " must be an array");
            for (const auto& c : value) {
                if (!c.is_number_integer()) invalid("list colors must be integers");
                const auto color = c.get<long long>();
                if (color < 1 || color > file.d) invalid("list of edge " + key + " has color outside 1..d");
                L.add(e, static_cast<Color>(color));
            }
        }
        file.lists = std::move(L);
    }
    if (doc.contains("plan")) {
        std::vector<std::array<Vertex, 4>> plan;
        for (const auto& c : doc["plan"]) {
            if (!c.is_array() || c.size() != 4) invalid("plan entries must be 4-vertex tuples");
            std::array<Vertex, 4> cyc{};
            for (std::size_t i = 0; i < 4; ++i) {
                cyc[i] = c[i].get<Vertex>();
                if (cyc[i] >= file.n) invalid("plan vertex outside 0..n-1");
            }
            plan.push_back(cyc);
        }
        file.plan = std::move(plan);
    }
    if (doc.contains("report")) file.report = doc["report"];
    return file;
}

InstanceFile read_instance(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInstance, "cannot open " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& err) {
        throw Error(ErrorKind::InvalidInstance, path.string() + ": " + err.what());
    }
    return instance_from_json(doc);
}

void write_instance(const std::filesystem::path& path, const InstanceFile& file)
{
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
    out << to_json(file).dump(1) << '\n';
}

InstanceFile instance_from_colored(const ColoredGraph& cg)
{
    InstanceFile file;
    file.n = cg.graph.vertex_count();
    file.d = cg.d;
    for (const Edge& e : cg.graph.edges()) file.edges.emplace_back(e.u, e.v);
    file.coloring = cg.h.colors();
    file.claimed_s = cg.claimed_s;
    file.measured_s = cg.measured_s;
    file.family = cg.family;
    return file;
}

Graph graph_of(const InstanceFile& file)
{
    return Graph(file.n, file.edges);
}

ColoredGraph colored_graph_of(const InstanceFile& file)
{
    if (!file.coloring) invalid("instance has no coloring");
    Family fam = file.family.value_or(Family{"file", {}});
    try {
        ColoredGraph cg = make_colored_graph(graph_of(file), EdgeColoring(*file.coloring, file.d),
                                             file.claimed_s.value_or(1), std::move(fam));
        return cg;
    } catch (const Error& err) {
        invalid(std::string("coloring rejected: ") + err.what());
    }
}

} // namespace dsavoid
