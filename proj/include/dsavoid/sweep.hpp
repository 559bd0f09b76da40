#pragma once

#include "dsavoid/constructors.hpp"
#include "dsavoid/ratio.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace dsavoid {

struct SweepInstance {
    std::string label;
    ColoredGraph cg;
};

struct SweepConfig {
    std::vector<SweepInstance> instances;
    std::vector<Ratio> betas;
    std::size_t seeds = 10;
    std::uint64_t base_seed = 0;
    // Unset values fall back to default_params(d, s).
    std::optional<Ratio> gamma;
    std::optional<Ratio> tau;
    std::optional<Ratio> epsilon;
    std::size_t trials = 200;
    bool timing = true; // false writes wall_ms = 0 for byte-identical reruns
};

struct SweepRow {
    std::string family;
    std::size_t n = 0;
    int d = 0;
    int s = 0;
    Ratio beta;
    Ratio gamma;
    Ratio tau;
    Ratio epsilon;
    std::uint64_t seed = 0;
    bool phase1 = false;
    bool phase2 = false;
    bool verified = false;
    std::size_t trials_used = 0;
    double wall_ms = 0.0;
};

/// One row per (instance, beta, seed): generate a beta-sparse assignment, run
/// the two-phase pipeline with random permutation search, verify. Rows come
/// back in (instance, beta, seed) order.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// beta -> (verified rows, total rows)
std::map<Ratio, std::pair<std::size_t, std::size_t>> success_by_beta(const std::vector<SweepRow>& rows);

} // namespace dsavoid
