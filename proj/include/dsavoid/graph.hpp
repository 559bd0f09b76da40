#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dsavoid {

using Vertex = std::size_t;
using EdgeId = std::size_t;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with canonical edge indexing.
///
/// Edges are stored as (min, max) pairs sorted lexicographically, so an edge
/// index depends only on the edge set, never on insertion order. Loops and
/// repeated edges are rejected with ErrorKind::InvalidGraph.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    // Incident edge indices of v, in increasing edge-index order.
    std::span<const EdgeId> incident(Vertex v) const { return incident_.at(v); }
    std::size_t degree(Vertex v) const { return incident_.at(v).size(); }

    Vertex other_endpoint(EdgeId e, Vertex v) const;
    std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
    bool adjacent_edges(EdgeId e, EdgeId f) const;

    // Common degree if every vertex has it; nullopt otherwise. An empty graph
    // (no vertices) reports nullopt.
    std::optional<std::size_t> regular_degree() const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incident_;
};

inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);

// BFS distances (in edges) from a set of source vertices; kUnreachable for
// vertices outside their component. Search stops beyond max_depth.
std::vector<std::size_t> vertex_distances(const Graph& g, std::span<const Vertex> sources,
                                          std::size_t max_depth = kUnreachable);

/// Edge distance: shortest path length between an endpoint of e and an
/// endpoint of f. Adjacent (or identical) edges are at distance 0; nullopt
/// when the edges lie in different components.
std::optional<std::size_t> edge_distance(const Graph& g, EdgeId e, EdgeId f);

/// All edges at edge distance <= t from e, e included, sorted by index.
std::vector<EdgeId> t_neighborhood(const Graph& g, EdgeId e, std::size_t t);

/// True iff every pair of distinct listed edges is at distance >= t.
/// Unreachable pairs count as infinitely far apart; a repeated edge is at
/// distance 0 from itself.
bool is_distance_t_matching(const Graph& g, std::span<const EdgeId> edges, std::size_t t);

// Memoizes t-neighborhoods per (edge, t). Owned by a single computation;
// not for sharing across threads.
class NeighborhoodCache {
public:
    explicit NeighborhoodCache(const Graph& g) : g_(&g) {}

    const std::vector<EdgeId>& get(EdgeId e, std::size_t t);

private:
    const Graph* g_;
    std::map<std::pair<EdgeId, std::size_t>, std::vector<EdgeId>> cache_;
};

} // namespace dsavoid
