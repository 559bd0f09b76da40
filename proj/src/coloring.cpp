#include "dsavoid/coloring.hpp"

#include "dsavoid/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace dsavoid {

bool EdgeColoring::total() const
{
    return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == kUncolored; });
}

bool EdgeColoring::in_range() const
{
    return std::all_of(colors_.begin(), colors_.end(), [this](Color c) { return c >= 1 && c <= d_; });
}

bool is_proper(const Graph& g, const EdgeColoring& f)
{
    if (f.size() != g.edge_count()) {
        throw Error(ErrorKind::IncompleteColoring, "coloring has " + std::to_string(f.size()) +
                                                       " entries for " + std::to_string(g.edge_count()) +
                                                       " edges");
    }
    for (EdgeId e = 0; e < f.size(); ++e) {
        if (f[e] == kUncolored) {
            throw Error(ErrorKind::IncompleteColoring, "edge " + std::to_string(e) + " is uncolored");
        }
    }
    std::vector<Color> seen;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        seen.clear();
        for (EdgeId e : g.incident(x)) seen.push_back(f[e]);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    }
    return true;
}

std::optional<EdgeId> edge_with_color(const Graph& g, const EdgeColoring& f, Vertex x, Color c)
{
    for (EdgeId e : g.incident(x)) {
        if (f[e] == c) return e;
    }
    return std::nullopt;
}

std::vector<FourCycle> two_colored_cycles_through(const Graph& g, const EdgeColoring& f, EdgeId e)
{
    const Edge& uv = g.edge(e);
    const Vertex u = uv.u;
    const Vertex v = uv.v;
    const Color a = f.at(e);

    std::vector<FourCycle> out;
    for (EdgeId vz : g.incident(v)) {
        const Color b = f[vz];
        if (vz == e || b == a) continue;
        const auto tu = edge_with_color(g, f, u, b);
        if (!tu) continue;
        const Vertex z = g.other_endpoint(vz, v);
        const Vertex t = g.other_endpoint(*tu, u);
        if (z == t) continue;
        const auto zt = g.find_edge(z, t);
        if (!zt || f[*zt] != a) continue;
        out.push_back(FourCycle{{u, v, z, t}, {e, vz, *zt, *tu}, a, b});
    }
    std::sort(out.begin(), out.end(), [](const FourCycle& x, const FourCycle& y) {
        return std::pair(x.z(), x.t()) < std::pair(y.z(), y.t());
    });
    return out;
}

int compute_s(const Graph& g, const EdgeColoring& f)
{
    if (g.edge_count() == 0) return 1;
    std::size_t min_count = std::numeric_limits<std::size_t>::max();
    for (EdgeId e = 0; e < g.edge_count() && min_count > 0; ++e) {
        min_count = std::min(min_count, two_colored_cycles_through(g, f, e).size());
    }
    return static_cast<int>(min_count) + 1;
}

std::vector<Matching> standard_matchings(const Graph& g, const EdgeColoring& h)
{
    std::vector<Matching> out(static_cast<std::size_t>(h.d()));
    for (int c = 1; c <= h.d(); ++c) out[c - 1].color = c;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Color c = h.at(e);
        if (c < 1 || c > h.d()) {
            throw Error(ErrorKind::ColorOutOfRange,
                        "edge " + std::to_string(e) + " has color " + std::to_string(c));
        }
        out[c - 1].edges.push_back(e);
    }
    return out;
}

std::vector<Color> vertex_color_set(const Graph& g, const EdgeColoring& f, Vertex u)
{
    std::vector<Color> out;
    for (EdgeId e : g.incident(u)) out.push_back(f[e]);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_two_colored_under(const EdgeColoring& f, const FourCycle& c)
{
    return c.color_a != c.color_b && f.at(c.edges[0]) == c.color_a && f.at(c.edges[1]) == c.color_b &&
           f.at(c.edges[2]) == c.color_a && f.at(c.edges[3]) == c.color_b;
}

namespace {

void swap_in_place(EdgeColoring& f, const FourCycle& c)
{
    if (!is_two_colored_under(f, c)) {
        throw Error(ErrorKind::NotTwoColored, "cycle through edges " + std::to_string(c.edges[0]) + "," +
                                                  std::to_string(c.edges[1]) + "," +
                                                  std::to_string(c.edges[2]) + "," +
                                                  std::to_string(c.edges[3]) +
                                                  " does not alternate its two colors");
    }
    f.set(c.edges[0], c.color_b);
    f.set(c.edges[1], c.color_a);
    f.set(c.edges[2], c.color_b);
    f.set(c.edges[3], c.color_a);
}

} // namespace

EdgeColoring swap_cycle(const EdgeColoring& f, const FourCycle& c)
{
    EdgeColoring out = f;
    swap_in_place(out, c);
    return out;
}

EdgeColoring swap_cycles(const EdgeColoring& f, std::span<const FourCycle> cycles)
{
    if (!cycles_edge_disjoint(cycles)) {
        throw Error(ErrorKind::InvalidArgument, "swap family is not edge-disjoint");
    }
    EdgeColoring out = f;
    for (const auto& c : cycles) swap_in_place(out, c);
    return out;
}

bool cycles_edge_disjoint(std::span<const FourCycle> cycles)
{
    std::vector<EdgeId> all;
    for (const auto& c : cycles) all.insert(all.end(), c.edges.begin(), c.edges.end());
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

bool cycles_vertex_disjoint(std::span<const FourCycle> cycles)
{
    std::vector<Vertex> all;
    for (const auto& c : cycles) all.insert(all.end(), c.vertices.begin(), c.vertices.end());
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

} // namespace dsavoid
