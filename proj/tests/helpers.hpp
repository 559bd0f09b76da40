#pragma once

#include "dsavoid/coloring.hpp"
#include "dsavoid/constructors.hpp"
#include "dsavoid/graph.hpp"

#include <utility>
#include <vector>

namespace testutil {

inline dsavoid::Graph cycle_graph(std::size_t n)
{
    std::vector<std::pair<dsavoid::Vertex, dsavoid::Vertex>> edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return dsavoid::Graph(n, edges);
}

inline dsavoid::Graph path_graph(std::size_t n)
{
    std::vector<std::pair<dsavoid::Vertex, dsavoid::Vertex>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return dsavoid::Graph(n, edges);
}

// C_4 with canonical edges (0,1),(0,3),(1,2),(2,3); alternating colors around
// the cycle 0-1-2-3-0 give (1,2,2,1) in edge-index order.
inline dsavoid::EdgeColoring c4_alternating()
{
    return dsavoid::EdgeColoring({1, 2, 2, 1}, 2);
}

inline dsavoid::EdgeId edge_of(const dsavoid::Graph& g, dsavoid::Vertex a, dsavoid::Vertex b)
{
    return g.find_edge(a, b).value();
}

} // namespace testutil
