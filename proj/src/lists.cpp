#include "dsavoid/lists.hpp"

#include "dsavoid/errors.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace dsavoid {

std::span<const Color> ListAssignment::list(EdgeId e) const
{
    auto it = lists_.find(e);
    if (it == lists_.end()) return {};
    return it->second;
}

bool ListAssignment::contains(EdgeId e, Color c) const
{
    auto it = lists_.find(e);
    return it != lists_.end() && std::binary_search(it->second.begin(), it->second.end(), c);
}

void ListAssignment::add(EdgeId e, Color c)
{
    if (c < 1 || c > d_) {
        throw Error(ErrorKind::ColorOutOfRange,
                    "color " + std::to_string(c) + " on edge " + std::to_string(e) + " is outside 1.." + std::to_string(d_));
    }
    auto& lst = lists_[e];
    auto pos = std::lower_bound(lst.begin(), lst.end(), c);
    if (pos == lst.end() || *pos != c) lst.insert(pos, c);
}

void ListAssignment::set(EdgeId e, std::vector<Color> colors)
{
    lists_.erase(e);
    for (Color c : colors) add(e, c);
}

std::vector<EdgeId> ListAssignment::support() const
{
    std::vector<EdgeId> out;
    for (const auto& [e, lst] : lists_) out.push_back(e);
    return out;
}

namespace {

void check_colors(const ColoredGraph& cg, const ListAssignment& L)
{
    for (const auto& [e, lst] : L.entries()) {
        if (e >= cg.graph.edge_count()) {
            throw Error(ErrorKind::InvalidArgument, "list on nonexistent edge " + std::to_string(e));
        }
        for (Color c : lst) {
            if (c < 1 || c > cg.d) {
                throw Error(ErrorKind::ColorOutOfRange,
                            "color " + std::to_string(c) + " on edge " + std::to_string(e) + " is outside 1..d");
            }
        }
    }
}

} // namespace

std::map<std::pair<Color, Color>, std::int64_t> matching_color_counts(const ColoredGraph& cg, const ListAssignment& L,
                                                                      std::span<const EdgeId> W)
{
    std::map<std::pair<Color, Color>, std::int64_t> counts;
    for (EdgeId f : W) {
        for (Color c : L.list(f)) ++counts[{cg.h[f], c}];
    }
    return counts;
}

SparsityReport validate_beta_sparse(const ColoredGraph& cg, const ListAssignment& L, const Ratio& beta)
{
    if (beta < Ratio(0)) throw Error(ErrorKind::InvalidArgument, "beta must be >= 0");
    check_colors(cg, L);
    const Graph& g = cg.graph;
    const std::int64_t s = cg.s();
    SparsityReport report;

    for (const auto& [e, lst] : L.entries()) {
        const auto count = static_cast<std::int64_t>(lst.size());
        if (!at_most(count, beta, s)) {
            report.violations.push_back({SparsityCondition::PerEdge, e, {}, {}, {}, count, beta * Ratio(s)});
        }
    }

    std::vector<std::int64_t> per_color(static_cast<std::size_t>(cg.d) + 1);
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        std::fill(per_color.begin(), per_color.end(), 0);
        for (EdgeId e : g.incident(x)) {
            for (Color c : L.list(e)) ++per_color[c];
        }
        for (Color c = 1; c <= cg.d; ++c) {
            if (!at_most(per_color[c], beta, s)) {
                report.violations.push_back(
                    {SparsityCondition::PerVertexColor, {}, x, {}, c, per_color[c], beta * Ratio(s)});
            }
        }
    }

    if (!L.empty()) {
        for (EdgeId anchor = 0; anchor < g.edge_count(); ++anchor) {
            const auto W = t_neighborhood(g, anchor, 6);
            for (const auto& [key, count] : matching_color_counts(cg, L, W)) {
                if (!at_most(count, beta, s)) {
                    report.violations.push_back({SparsityCondition::PerNeighborhoodMatching, anchor, {}, key.first,
                                                 key.second, count, beta * Ratio(s)});
                }
            }
        }
    }

    report.ok = report.violations.empty();
    return report;
}

ListAssignment generate_sparse(const ColoredGraph& cg, const Ratio& beta, std::uint64_t seed)
{
    if (beta < Ratio(0)) throw Error(ErrorKind::InvalidArgument, "beta must be >= 0");
    const Graph& g = cg.graph;
    const std::int64_t s = cg.s();
    ListAssignment L(cg.d);
    if (!at_most(1, beta, s)) return L;

    const std::size_t m = g.edge_count();
    const std::size_t colors = static_cast<std::size_t>(cg.d) + 1;

    // Anchors whose 6-neighborhood contains e are exactly the 6-neighborhood of e.
    std::vector<std::vector<EdgeId>> anchors(m);
    for (EdgeId e = 0; e < m; ++e) anchors[e] = t_neighborhood(g, e, 6);

    std::vector<std::int64_t> vertex_count(g.vertex_count() * colors, 0);
    // (anchor, matching color, color) -> count
    std::vector<std::int64_t> nbhd_count(m * colors * colors, 0);
    auto nbhd_index = [&](EdgeId anchor, Color mc, Color c) { return (anchor * colors + mc) * colors + c; };

    std::vector<std::pair<EdgeId, Color>> pairs;
    pairs.reserve(m * static_cast<std::size_t>(cg.d));
    for (EdgeId e = 0; e < m; ++e) {
        for (Color c = 1; c <= cg.d; ++c) pairs.emplace_back(e, c);
    }
    std::mt19937_64 rng(seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);

    for (auto [e, c] : pairs) {
        const Edge& ed = g.edge(e);
        const Color mc = cg.h[e];
        if (!at_most(static_cast<std::int64_t>(L.list(e).size()) + 1, beta, s)) continue;
        if (!at_most(vertex_count[ed.u * colors + c] + 1, beta, s)) continue;
        if (!at_most(vertex_count[ed.v * colors + c] + 1, beta, s)) continue;
        const bool nbhd_ok = std::all_of(anchors[e].begin(), anchors[e].end(), [&](EdgeId a) {
            return at_most(nbhd_count[nbhd_index(a, mc, c)] + 1, beta, s);
        });
        if (!nbhd_ok) continue;
        L.add(e, c);
        ++vertex_count[ed.u * colors + c];
        ++vertex_count[ed.v * colors + c];
        for (EdgeId a : anchors[e]) ++nbhd_count[nbhd_index(a, mc, c)];
    }
    return L;
}

ListAssignment generate_distance2(const ColoredGraph& cg, std::uint64_t seed, int max_list)
{
    if (max_list < 0 || max_list > cg.s() - 1) {
        throw Error(ErrorKind::InvalidBound, "max_list=" + std::to_string(max_list) + " must lie in 0..s-1=" +
                                                 std::to_string(cg.s() - 1));
    }
    ListAssignment L(cg.d);
    if (max_list == 0) return L;

    const Graph& g = cg.graph;
    std::vector<EdgeId> order(g.edge_count());
    for (EdgeId e = 0; e < order.size(); ++e) order[e] = e;
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    // Greedy maximal distance-2 matching: an edge is blocked once any chosen
    // edge is within distance 1 of it.
    std::vector<bool> blocked(g.edge_count(), false);
    std::vector<EdgeId> support;
    for (EdgeId e : order) {
        if (blocked[e]) continue;
        support.push_back(e);
        for (EdgeId f : t_neighborhood(g, e, 1)) blocked[f] = true;
    }
    std::sort(support.begin(), support.end());

    std::vector<Color> palette(static_cast<std::size_t>(cg.d));
    for (int c = 0; c < cg.d; ++c) palette[c] = c + 1;
    for (EdgeId e : support) {
        std::uniform_int_distribution<int> size_dist(1, max_list);
        const int size = size_dist(rng);
        std::shuffle(palette.begin(), palette.end(), rng);
        L.set(e, std::vector<Color>(palette.begin(), palette.begin() + size));
    }
    return L;
}

std::vector<EdgeId> conflict_edges(const Graph& g, const EdgeColoring& f, const ListAssignment& L)
{
    std::vector<EdgeId> out;
    for (const auto& [e, lst] : L.entries()) {
        if (e < g.edge_count() && std::binary_search(lst.begin(), lst.end(), f.at(e))) out.push_back(e);
    }
    return out;
}

} // namespace dsavoid
