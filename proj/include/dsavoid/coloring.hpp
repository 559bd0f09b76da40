#pragma once

#include "dsavoid/graph.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace dsavoid {

using Color = int;

inline constexpr Color kUncolored = 0;

/// Edge coloring with colors 1..d, indexed by edge index. kUncolored (0)
/// marks an edge with no color yet.
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(std::size_t edge_count, int d) : colors_(edge_count, kUncolored), d_(d) {}
    EdgeColoring(std::vector<Color> colors, int d) : colors_(std::move(colors)), d_(d) {}

    int d() const noexcept { return d_; }
    std::size_t size() const noexcept { return colors_.size(); }

    Color operator[](EdgeId e) const { return colors_[e]; }
    Color at(EdgeId e) const { return colors_.at(e); }
    void set(EdgeId e, Color c) { colors_.at(e) = c; }

    const std::vector<Color>& colors() const noexcept { return colors_; }

    bool total() const;
    bool in_range() const;

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    std::vector<Color> colors_;
    int d_ = 0;
};

/// The 4-cycle u-v-z-t-u through edge uv. color_a sits on uv and zt,
/// color_b on vz and tu.
struct FourCycle {
    std::array<Vertex, 4> vertices; // u, v, z, t
    std::array<EdgeId, 4> edges;    // uv, vz, zt, tu
    Color color_a = kUncolored;
    Color color_b = kUncolored;

    Vertex u() const { return vertices[0]; }
    Vertex v() const { return vertices[1]; }
    Vertex z() const { return vertices[2]; }
    Vertex t() const { return vertices[3]; }
    EdgeId partner() const { return edges[2]; }

    friend bool operator==(const FourCycle&, const FourCycle&) = default;
};

struct Matching {
    Color color = kUncolored;
    std::vector<EdgeId> edges;
};

// Throws IncompleteColoring if any edge is uncolored.
bool is_proper(const Graph& g, const EdgeColoring& f);

// Incident edge of x carrying color c, if any. Linear in deg(x).
std::optional<EdgeId> edge_with_color(const Graph& g, const EdgeColoring& f, Vertex x, Color c);

/// Every 2-colored 4-cycle containing e, ordered by (z, t). For e = uv
/// (u < v) and each color c != f(e), the c-edges at v and u lead to z and t;
/// the cycle exists iff zt is an edge colored f(e). Requires f proper.
std::vector<FourCycle> two_colored_cycles_through(const Graph& g, const EdgeColoring& f, EdgeId e);

/// 1 + the minimum number of 2-colored 4-cycles through any edge.
int compute_s(const Graph& g, const EdgeColoring& f);

/// Color classes 1..d of h, each sorted by edge index.
std::vector<Matching> standard_matchings(const Graph& g, const EdgeColoring& h);

/// Sorted set of colors on the edges at u.
std::vector<Color> vertex_color_set(const Graph& g, const EdgeColoring& f, Vertex u);

// Checks that the cycle's four edges still alternate color_a / color_b under f.
bool is_two_colored_under(const EdgeColoring& f, const FourCycle& c);

/// Interchanges the two colors on the cycle. Throws NotTwoColored when the
/// cycle does not alternate (color_a, color_b) under f.
EdgeColoring swap_cycle(const EdgeColoring& f, const FourCycle& c);

// Swaps every cycle of a pairwise edge-disjoint family against f. Each cycle
// must be 2-colored under f.
EdgeColoring swap_cycles(const EdgeColoring& f, std::span<const FourCycle> cycles);

bool cycles_edge_disjoint(std::span<const FourCycle> cycles);
bool cycles_vertex_disjoint(std::span<const FourCycle> cycles);

} // namespace dsavoid
