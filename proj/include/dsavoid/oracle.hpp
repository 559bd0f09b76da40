#pragma once

#include "dsavoid/coloring.hpp"
#include "dsavoid/graph.hpp"
#include "dsavoid/lists.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace dsavoid {

enum class OracleStatus { Avoidable, NotAvoidable, BudgetExceeded };

struct OracleResult {
    OracleStatus status = OracleStatus::BudgetExceeded;
    std::optional<EdgeColoring> witness;
    std::uint64_t nodes_explored = 0;

    bool avoidable() const noexcept { return status == OracleStatus::Avoidable; }
};

/// Exact decision: does g have a proper d-edge coloring avoiding L?
///
/// Backtracking over edges, always branching on the uncolored edge with the
/// fewest remaining colors ({1..d} minus colors at its endpoints minus L(e)).
/// NotAvoidable is only reported after the search space is exhausted; hitting
/// node_budget yields BudgetExceeded instead of a guess. Requires d <= 63.
OracleResult oracle_avoidable(const Graph& g, int d, const ListAssignment& L,
                              std::uint64_t node_budget = 100'000'000);

/// Per-edge count of 2-colored 4-cycles, found by scanning every 4-cycle of
/// the graph directly. Independent of two_colored_cycles_through.
std::vector<std::size_t> oracle_cycle_census(const Graph& g, const EdgeColoring& f);

} // namespace dsavoid
