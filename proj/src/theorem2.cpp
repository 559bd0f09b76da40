#include "dsavoid/errors.hpp"
#include "dsavoid/solver.hpp"

#include <algorithm>

namespace dsavoid {

namespace {

class Theorem2Search {
public:
    Theorem2Search(const ColoredGraph& cg, const EdgeColoring& f, const ListAssignment& L, std::uint64_t budget)
        : conflicts_(conflict_edges(cg.graph, f, L)), used_(cg.graph.edge_count(), false), budget_(budget)
    {
        candidates_.reserve(conflicts_.size());
        for (EdgeId e : conflicts_) {
            auto cycles = two_colored_cycles_through(cg.graph, f, e);
            std::erase_if(cycles, [&](const FourCycle& c) {
                return L.contains(c.edges[0], c.color_b) || L.contains(c.edges[1], c.color_a) ||
                       L.contains(c.edges[2], c.color_b) || L.contains(c.edges[3], c.color_a);
            });
            candidates_.push_back(std::move(cycles));
        }
    }

    bool run(std::size_t i)
    {
        if (i == conflicts_.size()) return true;
        for (const auto& c : candidates_[i]) {
            if (++nodes_ > budget_) {
                exceeded_ = true;
                return false;
            }
            if (std::any_of(c.edges.begin(), c.edges.end(), [&](EdgeId f) { return used_[f]; })) continue;
            for (EdgeId f : c.edges) used_[f] = true;
            chosen_.push_back(c);
            if (run(i + 1)) return true;
            chosen_.pop_back();
            for (EdgeId f : c.edges) used_[f] = false;
            if (exceeded_) return false;
        }
        return false;
    }

    const std::vector<FourCycle>& chosen() const { return chosen_; }
    std::uint64_t nodes() const { return nodes_; }
    bool exceeded() const { return exceeded_; }

private:
    std::vector<EdgeId> conflicts_;
    std::vector<std::vector<FourCycle>> candidates_;
    std::vector<bool> used_;
    std::vector<FourCycle> chosen_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exceeded_ = false;
};

} // namespace

Theorem2Result solve_theorem2(const ColoredGraph& cg, const ListAssignment& L, std::uint64_t node_budget)
{
    const auto support = L.support();
    for (EdgeId e : support) {
        if (e >= cg.graph.edge_count()) {
            throw Error(ErrorKind::PreconditionViolated, "list on nonexistent edge " + std::to_string(e));
        }
        if (static_cast<int>(L.list(e).size()) > cg.s() - 1) {
            throw Error(ErrorKind::PreconditionViolated, "list of edge " + std::to_string(e) + " has " +
                                                             std::to_string(L.list(e).size()) + " colors, more than s-1=" +
                                                             std::to_string(cg.s() - 1));
        }
    }
    if (!is_distance_t_matching(cg.graph, support, 2)) {
        throw Error(ErrorKind::PreconditionViolated, "edges with lists do not form a distance-2 matching");
    }

    // Swaps on h first; when no edge-disjoint family exists there, the same
    // search runs on recolorings rho o h, which keep every 2-colored 4-cycle.
    Theorem2Result out;
    std::uint64_t remaining = node_budget;
    auto attempt = [&](const Permutation& rho) {
        const EdgeColoring f = apply_permutation(cg.h, rho);
        Theorem2Search search(cg, f, L, remaining);
        const bool found = search.run(0);
        out.nodes += search.nodes();
        remaining = search.nodes() >= remaining ? 0 : remaining - search.nodes();
        ++out.permutations_tried;
        if (search.exceeded()) out.budget_exceeded = true;
        if (!found) return false;
        out.cycles = search.chosen();
        out.rho = rho;
        out.coloring = swap_cycles(f, out.cycles);
        return true;
    };

    bool found = false;
    const int d = cg.d;
    if (d <= kTheorem2ExhaustiveMaxD) {
        Permutation rho = Permutation::identity(d);
        do {
            found = attempt(rho);
        } while (!found && !out.budget_exceeded && rho.next_lexicographic());
    } else {
        for (std::size_t k = 0; k < kTheorem2RandomTrials && !found && !out.budget_exceeded; ++k) {
            found = attempt(random_trial_permutation(d, 0, k));
        }
    }
    if (!found) {
        out.coloring.reset();
        out.reason = out.budget_exceeded ? "node budget exhausted"
                                         : "no edge-disjoint family of allowed cycles under any tried recoloring "
                                           "(potential counterexample)";
        return out;
    }
    const auto verdict = check_solution(cg, *out.coloring, L);
    if (!verdict.ok) {
        out.coloring.reset();
        out.reason = "swapped coloring failed verification: " + verdict.problem;
        return out;
    }
    out.ok = true;
    return out;
}

SolutionCheck check_solution(const ColoredGraph& cg, const EdgeColoring& f, const ListAssignment& L)
{
    SolutionCheck out;
    auto fail = [&](std::string problem, std::optional<EdgeId> edge) {
        out.ok = false;
        out.problem = std::move(problem);
        out.edge = edge;
        return out;
    };
    if (f.size() != cg.graph.edge_count()) {
        return fail("coloring has " + std::to_string(f.size()) + " entries for " +
                        std::to_string(cg.graph.edge_count()) + " edges",
                    std::nullopt);
    }
    for (EdgeId e = 0; e < f.size(); ++e) {
        if (f[e] == kUncolored) return fail("edge " + std::to_string(e) + " is uncolored", e);
        if (f[e] < 1 || f[e] > cg.d) return fail("edge " + std::to_string(e) + " has color outside 1..d", e);
    }
    for (Vertex x = 0; x < cg.graph.vertex_count(); ++x) {
        const auto inc = cg.graph.incident(x);
        for (std::size_t i = 0; i < inc.size(); ++i) {
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                if (f[inc[i]] == f[inc[j]]) {
                    return fail("edges " + std::to_string(inc[i]) + " and " + std::to_string(inc[j]) +
                                    " share color " + std::to_string(f[inc[i]]) + " at vertex " + std::to_string(x),
                                inc[j]);
                }
            }
        }
    }
    const auto conflicts = conflict_edges(cg.graph, f, L);
    if (!conflicts.empty()) {
        const EdgeId e = conflicts.front();
        return fail("edge " + std::to_string(e) + " is colored " + std::to_string(f[e]) + ", which its list forbids", e);
    }
    return out;
}

bool verify_solution(const ColoredGraph& cg, const EdgeColoring& f, const ListAssignment& L)
{
    return check_solution(cg, f, L).ok;
}

} // namespace dsavoid
