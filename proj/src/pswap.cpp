#include "dsavoid/errors.hpp"
#include "dsavoid/solver.hpp"

#include <algorithm>

namespace dsavoid {

std::vector<EdgeId> SwapPlan::used_edges() const
{
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < used.size(); ++e) {
        if (used[e]) out.push_back(e);
    }
    return out;
}

PSwapResult pswap_construct(const ColoredGraph& cg, const EdgeColoring& hprime, const ListAssignment& L,
                            const LemmaParams& p)
{
    p.validate();
    if (p.epsilon <= Ratio(0)) throw Error(ErrorKind::InvalidArgument, "epsilon must be > 0 for the swap phase");
    const Graph& g = cg.graph;
    if (!is_proper(g, hprime)) throw Error(ErrorKind::InvalidArgument, "h' must be a proper coloring");

    const std::int64_t s = p.s;
    const Ratio overload = p.epsilon * Ratio(s);
    auto overloaded = [&](std::int64_t used_count) { return Ratio(used_count) >= overload; };

    PSwapResult result;
    SwapPlan& plan = result.plan;
    plan.used.assign(g.edge_count(), false);
    plan.vertex_used.assign(g.vertex_count(), 0);

    const auto conflicts = conflict_edges(g, hprime, L);
    std::vector<bool> is_conflict(g.edge_count(), false);
    for (EdgeId e : conflicts) is_conflict[e] = true;

    NeighborhoodCache nbhd(g);
    for (EdgeId e : conflicts) {
        SelectionRecord rec;
        rec.conflict = e;
        const auto all = two_colored_cycles_through(g, hprime, e);
        const auto allowed = allowed_cycles(cg, hprime, L, e);
        rec.total_cycles = all.size();
        rec.not_allowed = all.size() - allowed.size();

        // Used edges per standard matching inside the 4-neighborhood of e,
        // recounted from the current plan.
        std::vector<std::int64_t> matching_used(static_cast<std::size_t>(cg.d) + 1, 0);
        for (EdgeId f : nbhd.get(e, 4)) {
            if (plan.used[f]) ++matching_used[cg.h[f]];
        }

        const FourCycle* best = nullptr;
        for (const auto& c : allowed) {
            const EdgeId vz = c.edges[1], zt = c.edges[2], tu = c.edges[3];
            const bool fails2 = is_conflict[vz] || is_conflict[zt] || is_conflict[tu] || plan.used[vz] ||
                                plan.used[zt] || plan.used[tu];
            const bool fails1 = overloaded(plan.vertex_used[c.z()]) || overloaded(plan.vertex_used[c.t()]) ||
                                overloaded(matching_used[cg.h[vz]]) || overloaded(matching_used[cg.h[tu]]);
            if (fails2) ++rec.filter2_hits;
            if (fails1) ++rec.filter1_hits;
            if (fails2) {
                ++rec.eliminated_filter2;
            } else if (fails1) {
                ++rec.eliminated_filter1;
            } else {
                ++rec.survivors;
                // allowed is ordered by (z, t), so the first survivor is the least.
                if (!best) best = &c;
            }
        }

        if (!best) {
            result.stuck = rec;
            plan.records.push_back(std::move(rec));
            result.coloring = hprime;
            return result;
        }
        rec.chosen = *best;
        rec.matching_used = matching_used[cg.h[best->edges[1]]];
        for (EdgeId f : best->edges) {
            plan.used[f] = true;
            ++plan.vertex_used[g.edge(f).u];
            ++plan.vertex_used[g.edge(f).v];
        }
        plan.cycles.push_back(*best);
        plan.records.push_back(std::move(rec));
    }

    result.coloring = swap_cycles(hprime, plan.cycles);
    result.ok = conflict_edges(g, result.coloring, L).empty();
    return result;
}

std::string_view to_string(PipelinePhase phase) noexcept
{
    switch (phase) {
    case PipelinePhase::None: return "none";
    case PipelinePhase::Permutation: return "permutation";
    case PipelinePhase::PSwap: return "pswap";
    case PipelinePhase::Verify: return "verify";
    }
    return "unknown";
}

PipelineResult solve_pipeline(const ColoredGraph& cg, const ListAssignment& L, const LemmaParams& p,
                              const SearchStrategy& strategy, CheckOptions options)
{
    PipelineResult out;
    out.search = find_permutation(cg, L, p, strategy, options);
    if (out.search.outcome != SearchOutcome::Found) {
        out.failed_phase = PipelinePhase::Permutation;
        out.reason = out.search.outcome == SearchOutcome::ProvenNonexistent
                         ? "no permutation satisfies the conditions (exhaustive)"
                         : "permutation budget of " + std::to_string(out.search.trials) + " trials exhausted";
        return out;
    }
    const EdgeColoring hprime = apply_permutation(cg.h, *out.search.rho);
    out.pswap = pswap_construct(cg, hprime, L, p);
    if (!out.pswap->ok) {
        out.failed_phase = PipelinePhase::PSwap;
        out.reason = out.pswap->stuck ? "no surviving cycle for conflict edge " + std::to_string(out.pswap->stuck->conflict)
                                      : "swap plan left a conflict";
        return out;
    }
    const auto verdict = check_solution(cg, out.pswap->coloring, L);
    if (!verdict.ok) {
        out.failed_phase = PipelinePhase::Verify;
        out.reason = verdict.problem;
        return out;
    }
    out.ok = true;
    out.coloring = out.pswap->coloring;
    return out;
}

} // namespace dsavoid
