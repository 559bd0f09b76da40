#pragma once

#include "dsavoid/coloring.hpp"
#include "dsavoid/constructors.hpp"
#include "dsavoid/ratio.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace dsavoid {

/// Forbidden colors per edge. Edges without an entry have an empty list;
/// stored lists are sorted, duplicate-free and never empty.
class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(int d) : d_(d) {}

    int d() const noexcept { return d_; }

    std::span<const Color> list(EdgeId e) const;
    bool contains(EdgeId e, Color c) const;
    // Throws ColorOutOfRange for c outside 1..d.
    void add(EdgeId e, Color c);
    void set(EdgeId e, std::vector<Color> colors);

    bool empty() const noexcept { return lists_.empty(); }
    std::vector<EdgeId> support() const;
    const std::map<EdgeId, std::vector<Color>>& entries() const noexcept { return lists_; }

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

private:
    std::map<EdgeId, std::vector<Color>> lists_;
    int d_ = 0;
};

enum class SparsityCondition { PerEdge = 1, PerVertexColor = 2, PerNeighborhoodMatching = 3 };

struct SparsityViolation {
    SparsityCondition condition;
    std::optional<EdgeId> edge;            // (i): the edge; (iii): the anchor of the 6-neighborhood
    std::optional<Vertex> vertex;          // (ii)
    std::optional<Color> matching_color;   // (iii): standard matching by its h-color
    std::optional<Color> color;            // (ii), (iii): the forbidden color being counted
    std::int64_t count = 0;
    Ratio bound;
};

struct SparsityReport {
    bool ok = true;
    std::vector<SparsityViolation> violations;
};

/// Checks the three beta-sparseness conditions against the exact value
/// beta * s (s = measured s of cg):
///   (i)   |L(e)| <= beta*s for every edge;
///   (ii)  at every vertex, each color is in at most beta*s incident lists;
///   (iii) inside every edge-anchored 6-neighborhood W and for every standard
///         matching M, each color is in at most beta*s lists of M cap E(W).
/// Throws ColorOutOfRange when L uses a color outside 1..d.
SparsityReport validate_beta_sparse(const ColoredGraph& cg, const ListAssignment& L, const Ratio& beta);

// For an edge set W: (matching color, forbidden color) -> number of edges of
// that matching in W whose list holds the color.
std::map<std::pair<Color, Color>, std::int64_t> matching_color_counts(const ColoredGraph& cg,
                                                                      const ListAssignment& L,
                                                                      std::span<const EdgeId> W);

/// Greedy-random beta-sparse assignment: all (edge, color) pairs are shuffled
/// with the seed and a color is kept iff all three conditions still hold.
ListAssignment generate_sparse(const ColoredGraph& cg, const Ratio& beta, std::uint64_t seed);

/// Lists supported on a seeded greedy maximal distance-2 matching, each
/// supported edge getting a uniformly sized (1..max_list) random subset of 1..d.
/// max_list = 0 yields the empty assignment; max_list > s - 1 or negative
/// throws InvalidBound.
ListAssignment generate_distance2(const ColoredGraph& cg, std::uint64_t seed, int max_list);

/// Edges e with f(e) in L(e), in increasing order.
std::vector<EdgeId> conflict_edges(const Graph& g, const EdgeColoring& f, const ListAssignment& L);

} // namespace dsavoid
