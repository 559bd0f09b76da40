#include "dsavoid/graph.hpp"

#include "dsavoid/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace dsavoid {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::IncompleteColoring: return "IncompleteColoring";
    case ErrorKind::NotTwoColored: return "NotTwoColored";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::InvalidK: return "InvalidK";
    case ErrorKind::SpecViolation: return "SpecViolation";
    case ErrorKind::ColorOutOfRange: return "ColorOutOfRange";
    case ErrorKind::InvalidBound: return "InvalidBound";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::DegenerateTau: return "DegenerateTau";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::InvalidInstance: return "InvalidInstance";
    }
    return "Unknown";
}

Graph::Graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n), incident_(n)
{
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= n || b >= n) {
            throw Error(ErrorKind::InvalidGraph, "edge (" + std::to_string(a) + "," +
                                                     std::to_string(b) + ") references a vertex >= n=" +
                                                     std::to_string(n));
        }
        if (a == b) {
            throw Error(ErrorKind::InvalidGraph, "loop at vertex " + std::to_string(a));
        }
        edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw Error(ErrorKind::InvalidGraph, "repeated edge (" + std::to_string(dup->u) + "," +
                                                 std::to_string(dup->v) + ")");
    }
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        incident_[edges_[e].u].push_back(e);
        incident_[edges_[e].v].push_back(e);
    }
}

Vertex Graph::other_endpoint(EdgeId e, Vertex v) const
{
    const Edge& ed = edge(e);
    if (ed.u == v) return ed.v;
    if (ed.v == v) return ed.u;
    throw Error(ErrorKind::InvalidArgument,
                "vertex " + std::to_string(v) + " is not an endpoint of edge " + std::to_string(e));
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const
{
    if (a >= n_ || b >= n_ || a == b) return std::nullopt;
    const auto& shorter = incident_[a].size() <= incident_[b].size() ? incident_[a] : incident_[b];
    const Edge key{std::min(a, b), std::max(a, b)};
    for (EdgeId e : shorter) {
        if (edges_[e] == key) return e;
    }
    return std::nullopt;
}

bool Graph::adjacent_edges(EdgeId e, EdgeId f) const
{
    const Edge& a = edge(e);
    const Edge& b = edge(f);
    return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
}

std::optional<std::size_t> Graph::regular_degree() const
{
    if (n_ == 0) return std::nullopt;
    const std::size_t deg = incident_[0].size();
    for (const auto& inc : incident_) {
        if (inc.size() != deg) return std::nullopt;
    }
    return deg;
}

std::vector<std::size_t> vertex_distances(const Graph& g, std::span<const Vertex> sources,
                                          std::size_t max_depth)
{
    std::vector<std::size_t> dist(g.vertex_count(), kUnreachable);
    std::deque<Vertex> queue;
    for (Vertex s : sources) {
        if (dist.at(s) != 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop_front();
        if (dist[x] >= max_depth) continue;
        for (EdgeId e : g.incident(x)) {
            const Vertex y = g.other_endpoint(e, x);
            if (dist[y] == kUnreachable) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

namespace {

std::vector<std::size_t> distances_from_edge(const Graph& g, EdgeId e, std::size_t max_depth)
{
    const Edge& ed = g.edge(e);
    const Vertex src[] = {ed.u, ed.v};
    return vertex_distances(g, src, max_depth);
}

} // namespace

std::optional<std::size_t> edge_distance(const Graph& g, EdgeId e, EdgeId f)
{
    const Edge& target = g.edge(f);
    const auto dist = distances_from_edge(g, e, kUnreachable);
    const std::size_t d = std::min(dist[target.u], dist[target.v]);
    if (d == kUnreachable) return std::nullopt;
    return d;
}

std::vector<EdgeId> t_neighborhood(const Graph& g, EdgeId e, std::size_t t)
{
    // An edge is within distance t iff one of its endpoints is.
    const auto dist = distances_from_edge(g, e, t);
    std::vector<EdgeId> out;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        if (dist[x] > t) continue;
        for (EdgeId f : g.incident(x)) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_distance_t_matching(const Graph& g, std::span<const EdgeId> edges, std::size_t t)
{
    if (t == 0) return true;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto dist = distances_from_edge(g, edges[i], t);
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge& other = g.edge(edges[j]);
            if (edges[j] == edges[i]) return false;
            if (std::min(dist[other.u], dist[other.v]) < t) return false;
        }
    }
    return true;
}

const std::vector<EdgeId>& NeighborhoodCache::get(EdgeId e, std::size_t t)
{
    auto key = std::make_pair(e, t);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, t_neighborhood(*g_, e, t)).first;
    return it->second;
}

} // namespace dsavoid
