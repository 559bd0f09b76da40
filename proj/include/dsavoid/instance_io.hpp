#pragma once

#include "dsavoid/constructors.hpp"
#include "dsavoid/lists.hpp"

#include "json.hpp"

#include <array>
#include <filesystem>
#include <optional>
#include <vector>

namespace dsavoid {

inline constexpr const char* kInstanceFormat = "dsgraph-v1";

/// In-memory form of a dsgraph-v1 document.
///
/// Layout (keys sorted on output):
///   format    "dsgraph-v1"
///   n, d      integers
///   edges     [[u, v], ...] with u < v, lexicographically sorted
///   coloring  optional, one color in 1..d per edge
///   s         optional {"claimed": int, "measured": int}
///   family    optional {"name": str, "params": {str: str}, "claimed_s": int, "measured_s": int}
///   lists     optional {"<edge index>": [sorted colors]}
///   solution  optional color array, same shape as coloring
///   plan      optional [[u, v, z, t], ...]
///   report    optional free-form object
/// Rational parameters inside params/report are "p/q" strings.
struct InstanceFile {
    std::size_t n = 0;
    int d = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::optional<std::vector<Color>> coloring;
    std::optional<int> claimed_s;
    std::optional<int> measured_s;
    std::optional<Family> family;
    std::optional<ListAssignment> lists;
    std::optional<std::vector<Color>> solution;
    std::optional<std::vector<std::array<Vertex, 4>>> plan;
    std::optional<nlohmann::json> report;
};

nlohmann::json to_json(const InstanceFile& file);

// Throws InvalidInstance naming the violated invariant.
InstanceFile instance_from_json(const nlohmann::json& doc);

InstanceFile read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const InstanceFile& file);

InstanceFile instance_from_colored(const ColoredGraph& cg);
Graph graph_of(const InstanceFile& file);
// Requires a coloring; re-measures s.
ColoredGraph colored_graph_of(const InstanceFile& file);

} // namespace dsavoid
