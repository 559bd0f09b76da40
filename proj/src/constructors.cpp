#include "dsavoid/constructors.hpp"

#include "dsavoid/errors.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace dsavoid {

namespace {

[[noreturn]] void spec_violation(const std::string& what)
{
    throw Error(ErrorKind::SpecViolation, what);
}

void check_element(const FiniteGroup& g, Element a, const char* set_name)
{
    if (a >= g.size()) {
        spec_violation(std::string("element ") + std::to_string(a) + " of " + set_name + " is not in the group");
    }
}

// Builds a graph from an edge -> color map whose keys are already (min, max).
ColoredGraph from_edge_colors(std::size_t n, const std::map<Edge, Color>& colored, int d, int claimed_s,
                              Family family)
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(colored.size());
    for (const auto& [e, c] : colored) edges.emplace_back(e.u, e.v);
    Graph g(n, std::move(edges));
    // Graph canonical order equals std::map order on (u, v).
    std::vector<Color> colors;
    colors.reserve(colored.size());
    for (const auto& [e, c] : colored) colors.push_back(c);
    return make_colored_graph(std::move(g), EdgeColoring(std::move(colors), d), claimed_s, std::move(family));
}

void add_colored_edge(std::map<Edge, Color>& colored, Vertex a, Vertex b, Color c)
{
    const Edge key{std::min(a, b), std::max(a, b)};
    auto [it, inserted] = colored.emplace(key, c);
    if (!inserted && it->second != c) {
        spec_violation("edge (" + std::to_string(key.u) + "," + std::to_string(key.v) +
                       ") receives two different colors");
    }
}

} // namespace

ColoredGraph make_colored_graph(Graph g, EdgeColoring h, int claimed_s, Family family)
{
    if (h.size() != g.edge_count() || !h.total()) {
        spec_violation("standard coloring must color every edge");
    }
    if (!h.in_range()) spec_violation("standard coloring uses a color outside 1..d");
    if (!is_proper(g, h)) spec_violation("standard coloring is not proper");
    if (g.vertex_count() > 0) {
        const auto deg = g.regular_degree();
        if (!deg || static_cast<int>(*deg) != h.d()) {
            spec_violation("graph is not " + std::to_string(h.d()) + "-regular");
        }
    }
    ColoredGraph cg;
    cg.d = h.d();
    cg.claimed_s = claimed_s;
    cg.measured_s = compute_s(g, h);
    cg.graph = std::move(g);
    cg.h = std::move(h);
    cg.family = std::move(family);
    return cg;
}

ColoredGraph hypercube(int d, const ConstructorLimits& limits)
{
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "hypercube dimension must be >= 1");
    if (d > limits.max_hypercube_dim) {
        throw Error(ErrorKind::ResourceLimit, "hypercube dimension " + std::to_string(d) + " exceeds cap " +
                                                  std::to_string(limits.max_hypercube_dim));
    }
    const std::size_t n = std::size_t{1} << d;
    std::map<Edge, Color> colored;
    for (Vertex x = 0; x < n; ++x) {
        for (int i = 0; i < d; ++i) {
            const Vertex y = x ^ (std::size_t{1} << i);
            if (x < y) colored.emplace(Edge{x, y}, i + 1);
        }
    }
    return from_edge_colors(n, colored, d, d, Family{"hypercube", {{"d", std::to_string(d)}}});
}

ColoredGraph complete_bipartite_pow2(int t, const ConstructorLimits& limits)
{
    if (t < 0) throw Error(ErrorKind::InvalidArgument, "t must be >= 0");
    if (t > limits.max_bipartite_log) {
        throw Error(ErrorKind::ResourceLimit, "K_{2^t,2^t} with t=" + std::to_string(t) + " exceeds cap " +
                                                  std::to_string(limits.max_bipartite_log));
    }
    const std::size_t d = std::size_t{1} << t;
    std::map<Edge, Color> colored;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            colored.emplace(Edge{i, d + j}, static_cast<Color>((i ^ j) + 1));
        }
    }
    return from_edge_colors(2 * d, colored, static_cast<int>(d), static_cast<int>(d),
                            Family{"complete_bipartite_pow2", {{"t", std::to_string(t)}}});
}

ColoredGraph remove_standard_matchings(const ColoredGraph& cg, int k, std::optional<std::vector<Color>> colors)
{
    if (cg.family.name != "complete_bipartite_pow2") {
        throw Error(ErrorKind::InvalidArgument, "remove_standard_matchings expects a complete_bipartite_pow2 graph");
    }
    if (k < 0 || k >= cg.d) {
        throw Error(ErrorKind::InvalidK, "k=" + std::to_string(k) + " must satisfy 0 <= k < d=" + std::to_string(cg.d));
    }
    std::vector<Color> removed;
    if (colors) {
        removed = *colors;
        std::sort(removed.begin(), removed.end());
        removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
        if (static_cast<int>(removed.size()) != k || colors->size() != removed.size()) {
            throw Error(ErrorKind::InvalidK, "expected " + std::to_string(k) + " distinct colors to remove");
        }
        if (!removed.empty() && (removed.front() < 1 || removed.back() > cg.d)) {
            throw Error(ErrorKind::InvalidK, "removed colors must lie in 1..d");
        }
    } else {
        for (Color c = cg.d - k + 1; c <= cg.d; ++c) removed.push_back(c);
    }

    std::vector<Color> relabel(static_cast<std::size_t>(cg.d) + 1, kUncolored);
    Color next = 1;
    for (Color c = 1; c <= cg.d; ++c) {
        if (!std::binary_search(removed.begin(), removed.end(), c)) relabel[c] = next++;
    }

    std::map<Edge, Color> colored;
    for (EdgeId e = 0; e < cg.graph.edge_count(); ++e) {
        const Color c = relabel[cg.h[e]];
        if (c != kUncolored) colored.emplace(cg.graph.edge(e), c);
    }
    Family fam{"remove_standard_matchings", cg.family.params};
    fam.params["k"] = std::to_string(k);
    std::string list;
    for (Color c : removed) list += (list.empty() ? "" : ",") + std::to_string(c);
    fam.params["removed"] = list;
    return from_edge_colors(cg.graph.vertex_count(), colored, cg.d - k, cg.d - k, std::move(fam));
}

ColoredGraph cartesian_product(const ColoredGraph& first, const ColoredGraph& second)
{
    const std::size_t n1 = first.graph.vertex_count();
    const std::size_t n2 = second.graph.vertex_count();
    std::map<Edge, Color> colored;
    for (Vertex a = 0; a < n1; ++a) {
        for (EdgeId e = 0; e < second.graph.edge_count(); ++e) {
            const Edge& ed = second.graph.edge(e);
            colored.emplace(Edge{a * n2 + ed.u, a * n2 + ed.v}, second.h[e] + first.d);
        }
    }
    for (EdgeId e = 0; e < first.graph.edge_count(); ++e) {
        const Edge& ed = first.graph.edge(e);
        for (Vertex b = 0; b < n2; ++b) colored.emplace(Edge{ed.u * n2 + b, ed.v * n2 + b}, first.h[e]);
    }
    const int claimed = std::min(first.d + second.s(), second.d + first.s());
    Family fam{"cartesian_product",
               {{"left", first.family.name}, {"right", second.family.name}, {"left_d", std::to_string(first.d)},
                {"left_s", std::to_string(first.s())}, {"right_d", std::to_string(second.d)},
                {"right_s", std::to_string(second.s())}}};
    return from_edge_colors(n1 * n2, colored, first.d + second.d, claimed, std::move(fam));
}

ColoredGraph cayley_involutions(const CayleySpec& spec)
{
    const FiniteGroup& g = spec.group;
    const auto& S = spec.generators;
    if (S.empty()) spec_violation("S must be nonempty");
    std::set<Element> distinct;
    for (Element a : S) {
        check_element(g, a, "S");
        if (a == g.identity()) spec_violation("identity element in S");
        if (g.inverse(a) != a) spec_violation("element " + std::to_string(a) + " of S is not an involution");
        if (!distinct.insert(a).second) spec_violation("element " + std::to_string(a) + " repeated in S");
    }
    std::set<Element> commuting;
    for (Element b : spec.commuting) {
        check_element(g, b, "S_c");
        if (!distinct.count(b)) spec_violation("element " + std::to_string(b) + " of S_c is not in S");
        if (!commuting.insert(b).second) spec_violation("element " + std::to_string(b) + " repeated in S_c");
        for (Element a : S) {
            if (!g.commute(a, b)) {
                spec_violation("element " + std::to_string(b) + " of S_c does not commute with " + std::to_string(a));
            }
        }
    }

    std::map<Edge, Color> colored;
    for (Vertex u = 0; u < g.size(); ++u) {
        for (std::size_t p = 0; p < S.size(); ++p) add_colored_edge(colored, u, g.mul(u, S[p]), static_cast<Color>(p + 1));
    }
    const int claimed = std::max<int>(1, static_cast<int>(commuting.size()));
    Family fam{"cayley_involutions",
               {{"group_order", std::to_string(g.size())}, {"S_size", std::to_string(S.size())},
                {"S_c_size", std::to_string(commuting.size())}}};
    return from_edge_colors(g.size(), colored, static_cast<int>(S.size()), claimed, std::move(fam));
}

std::vector<std::vector<std::size_t>> unique_factorization(const FiniteGroup& group, const std::vector<Element>& half)
{
    std::vector<std::size_t> orders;
    std::size_t combos = 1;
    for (Element s : half) {
        orders.push_back(group.order(s));
        if (combos > group.size()) break;
        combos *= orders.back();
    }
    if (orders.size() != half.size() || combos != group.size()) {
        spec_violation("product of generator orders does not equal the group order; factorization not unique");
    }
    std::vector<std::vector<std::size_t>> exps(group.size());
    std::vector<bool> seen(group.size(), false);
    std::vector<std::size_t> x(half.size(), 0);
    for (std::size_t idx = 0; idx < combos; ++idx) {
        Element g = group.identity();
        for (std::size_t i = 0; i < half.size(); ++i) g = group.mul(g, group.power(half[i], x[i]));
        if (seen[g]) spec_violation("element " + std::to_string(g) + " has two factorizations over S_k");
        seen[g] = true;
        exps[g] = x;
        for (std::size_t i = 0; i < half.size(); ++i) {
            if (++x[i] < orders[i]) break;
            x[i] = 0;
        }
    }
    return exps;
}

ColoredGraph cayley_abelian(const CayleySpec& spec)
{
    const FiniteGroup& g = spec.group;
    const auto& half = spec.half;
    if (!g.is_abelian()) spec_violation("group is not abelian");
    if (half.empty()) spec_violation("S_k must be nonempty");
    for (std::size_t i = 0; i < half.size(); ++i) {
        check_element(g, half[i], "S_k");
        if (half[i] == g.identity()) spec_violation("identity element in S_k");
        if (g.order(half[i]) % 2 != 0) {
            spec_violation("element " + std::to_string(half[i]) + " of S_k has odd order " +
                           std::to_string(g.order(half[i])));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (half[i] == half[j]) spec_violation("element " + std::to_string(half[i]) + " repeated in S_k");
            if (half[i] == g.inverse(half[j])) {
                spec_violation("S_k contains " + std::to_string(half[j]) + " and its inverse " + std::to_string(half[i]));
            }
        }
    }

    // Token numbering: s_1, s_1^{-1}, s_2, s_2^{-1}, ... skipping self-inverse duplicates.
    std::vector<Color> forward_token(half.size());
    std::vector<Color> backward_token(half.size());
    std::set<Element> generated;
    Color next = 1;
    for (std::size_t i = 0; i < half.size(); ++i) {
        forward_token[i] = next++;
        generated.insert(half[i]);
        if (g.inverse(half[i]) != half[i]) {
            backward_token[i] = next++;
            generated.insert(g.inverse(half[i]));
        } else {
            backward_token[i] = forward_token[i];
        }
    }
    if (!spec.generators.empty()) {
        std::set<Element> given(spec.generators.begin(), spec.generators.end());
        if (given != generated || given.size() != spec.generators.size()) {
            spec_violation("S is not S_k union S_k^{-1}");
        }
    }

    const auto exps = unique_factorization(g, half);
    const int d = next - 1;
    std::map<Edge, Color> colored;
    for (Vertex u = 0; u < g.size(); ++u) {
        for (std::size_t i = 0; i < half.size(); ++i) {
            const Color c = exps[u][i] % 2 == 0 ? forward_token[i] : backward_token[i];
            add_colored_edge(colored, u, g.mul(u, half[i]), c);
        }
    }
    Family fam{"cayley_abelian", {{"group_order", std::to_string(g.size())}, {"k", std::to_string(half.size())}}};
    return from_edge_colors(g.size(), colored, d, d, std::move(fam));
}

} // namespace dsavoid
