#pragma once

#include "dsavoid/coloring.hpp"
#include "dsavoid/graph.hpp"
#include "dsavoid/group.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dsavoid {

/// Where a ColoredGraph came from: constructor name and its parameters.
struct Family {
    std::string name;
    std::map<std::string, std::string> params;
};

/// A d-regular graph with its standard coloring h.
///
/// claimed_s is what the construction promises; measured_s is compute_s(graph, h)
/// taken at construction. The solver and validators always use measured_s.
struct ColoredGraph {
    Graph graph;
    EdgeColoring h;
    int d = 0;
    int claimed_s = 1;
    int measured_s = 1;
    Family family;

    int s() const noexcept { return measured_s; }
    bool certified() const noexcept { return measured_s >= claimed_s; }
};

/// Wraps a graph and coloring, checking properness, d-regularity and colors in
/// 1..d, and measuring s. Throws SpecViolation on a broken coloring.
ColoredGraph make_colored_graph(Graph g, EdgeColoring h, int claimed_s, Family family);

struct ConstructorLimits {
    int max_hypercube_dim = 16;
    int max_bipartite_log = 10;
};

ColoredGraph hypercube(int d, const ConstructorLimits& limits = {});

// K_{d,d} with d = 2^t; u_i = i, v_j = d + j, h(u_i v_j) = (i xor j) + 1.
ColoredGraph complete_bipartite_pow2(int t, const ConstructorLimits& limits = {});

/// Deletes k color classes from a complete_bipartite_pow2 graph. Without an
/// explicit color list the k largest colors go. Remaining colors are
/// relabelled to 1..d-k in increasing order.
ColoredGraph remove_standard_matchings(const ColoredGraph& cg, int k,
                                       std::optional<std::vector<Color>> colors = std::nullopt);

// Vertex (a, b) has index a * n2 + b. Colors of the second factor are shifted by d1.
ColoredGraph cartesian_product(const ColoredGraph& first, const ColoredGraph& second);

struct CayleySpec {
    FiniteGroup group;
    std::vector<Element> generators; // S; may be left empty for the abelian construction
    std::vector<Element> commuting;  // S_c
    std::vector<Element> half;       // S_k
};

/// Cayley graph over involutions: edge {u, u*a} colored by the position of a
/// in S. Claimed s = max(1, |S_c|). Throws SpecViolation naming the failed
/// hypothesis.
ColoredGraph cayley_involutions(const CayleySpec& spec);

/// Cayley graph on an abelian cyclic-product group with half-generating set
/// S_k. Edge {u, u*s_i} gets token s_i when the s_i-exponent of u is even and
/// s_i^{-1} when odd; tokens are numbered in generator order. Claimed s = d.
ColoredGraph cayley_abelian(const CayleySpec& spec);

// Exponent vector (x_1..x_k) over S_k of every group element, indexed by
// element. Throws SpecViolation unless each element has exactly one such vector
// with 0 <= x_i < order(s_i).
std::vector<std::vector<std::size_t>> unique_factorization(const FiniteGroup& group,
                                                           const std::vector<Element>& half);

} // namespace dsavoid
