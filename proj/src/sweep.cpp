#include "dsavoid/sweep.hpp"

#include "dsavoid/bounds.hpp"
#include "dsavoid/lists.hpp"
#include "dsavoid/solver.hpp"

#include <chrono>

namespace dsavoid {

std::vector<SweepRow> run_sweep(const SweepConfig& config)
{
    std::vector<SweepRow> rows;
    for (const auto& inst : config.instances) {
        const ColoredGraph& cg = inst.cg;
        const LemmaParams defaults = bounds::default_params(cg.d, cg.s());
        for (const Ratio& beta : config.betas) {
            LemmaParams p = params_for(cg, config.gamma.value_or(defaults.gamma), config.tau.value_or(defaults.tau),
                                       config.epsilon.value_or(defaults.epsilon), beta);
            for (std::size_t k = 0; k < config.seeds; ++k) {
                const std::uint64_t seed = config.base_seed + k;
                const auto start = std::chrono::steady_clock::now();
                const ListAssignment L = generate_sparse(cg, beta, seed);
                const PipelineResult res = solve_pipeline(cg, L, p, RandomSearch{config.trials, seed});

                SweepRow row;
                row.family = inst.label;
                row.n = cg.graph.vertex_count();
                row.d = cg.d;
                row.s = cg.s();
                row.beta = beta;
                row.gamma = p.gamma;
                row.tau = p.tau;
                row.epsilon = p.epsilon;
                row.seed = seed;
                row.phase1 = res.search.outcome == SearchOutcome::Found;
                row.phase2 = res.pswap && res.pswap->ok;
                row.verified = res.ok && verify_solution(cg, *res.coloring, L);
                row.trials_used = res.search.trials;
                if (config.timing) {
                    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows)
{
    out << "family,n,d,s,beta,gamma,tau,epsilon,seed,phase1,phase2,verified,trials_used,wall_ms\n";
    for (const auto& r : rows) {
        out << r.family << ',' << r.n << ',' << r.d << ',' << r.s << ',' << format_ratio(r.beta) << ','
            << format_ratio(r.gamma) << ',' << format_ratio(r.tau) << ',' << format_ratio(r.epsilon) << ',' << r.seed
            << ',' << r.phase1 << ',' << r.phase2 << ',' << r.verified << ',' << r.trials_used << ',' << r.wall_ms
            << '\n';
    }
}

std::map<Ratio, std::pair<std::size_t, std::size_t>> success_by_beta(const std::vector<SweepRow>& rows)
{
    std::map<Ratio, std::pair<std::size_t, std::size_t>> out;
    for (const auto& r : rows) {
        auto& [ok, total] = out[r.beta];
        ok += r.verified ? 1 : 0;
        ++total;
    }
    return out;
}

} // namespace dsavoid
