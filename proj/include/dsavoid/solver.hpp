#pragma once

#include "dsavoid/coloring.hpp"
#include "dsavoid/constructors.hpp"
#include "dsavoid/lists.hpp"
#include "dsavoid/ratio.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dsavoid {

/// Bijection on colors 1..d.
class Permutation {
public:
    Permutation() = default;
    // images[i] is the image of color i + 1. Throws InvalidArgument unless a bijection on 1..d.
    explicit Permutation(std::vector<Color> images);

    static Permutation identity(int d);

    int d() const noexcept { return static_cast<int>(images_.size()); }
    Color operator()(Color c) const { return images_.at(static_cast<std::size_t>(c - 1)); }
    const std::vector<Color>& images() const noexcept { return images_; }
    Permutation inverse() const;
    // Advances to the next permutation in lexicographic order; false after the last.
    bool next_lexicographic();

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<Color> images_;
};

/// Parameters of the permutation and swap phases. Thresholds are compared
/// exactly against gamma*s, tau*s and epsilon*s.
struct LemmaParams {
    Ratio beta{0};
    Ratio gamma{0};
    Ratio tau{0};
    Ratio epsilon{0};
    int s = 0;
    int d = 0;

    // gamma, tau, epsilon in [0, 1); the counting conditions stay meaningful at 0.
    void validate() const;
    // The open-interval hypothesis 0 < gamma, tau, epsilon < 1.
    bool strictly_inside_unit_interval() const;
};

LemmaParams params_for(const ColoredGraph& cg, Ratio gamma, Ratio tau, Ratio epsilon, Ratio beta = Ratio(0));

EdgeColoring apply_permutation(const EdgeColoring& h, const Permutation& rho);

/// Cycles of two_colored_cycles_through(f, e) whose swap leaves none of the
/// four edges in conflict with L.
std::vector<FourCycle> allowed_cycles(const ColoredGraph& cg, const EdgeColoring& f, const ListAssignment& L,
                                      EdgeId e);

struct NeighborhoodMatchingWitness {
    EdgeId anchor;
    Color matching_color; // standard matching, named by its color under h
    std::int64_t conflicts;
};

struct VertexWitness {
    Vertex vertex;
    std::int64_t conflicts;
};

struct EdgeCycleWitness {
    EdgeId edge;
    std::int64_t disallowed;
    std::int64_t total;
};

struct PermutationCheck {
    bool ok_a = true;
    bool ok_b = true;
    bool ok_c = true;
    std::vector<NeighborhoodMatchingWitness> a_witnesses;
    std::vector<VertexWitness> b_witnesses;
    std::vector<EdgeCycleWitness> c_witnesses;

    bool ok() const noexcept { return ok_a && ok_b && ok_c; }
};

struct CheckOptions {
    // Condition (c) as "allowed cycles >= (1 - tau) s" instead of "disallowed <= tau s".
    bool literal_condition_c = false;
    bool stop_at_first = false;
};

/// Evaluates a color permutation against the three conditions of the
/// permutation phase, for h' = rho o h:
///   (a) every edge-anchored 6-neighborhood W and standard matching M have at
///       most gamma*s conflict edges in M cap E(W);
///   (b) every vertex has at most gamma*s incident conflict edges;
///   (c) every edge has at most tau*s 2-colored 4-cycles that are not allowed.
///
/// The constructor does all rho-independent work (neighborhoods, cycles), so
/// one checker serves a whole permutation search.
class PermutationChecker {
public:
    PermutationChecker(const ColoredGraph& cg, const ListAssignment& L, const LemmaParams& p,
                       CheckOptions options = {});

    PermutationCheck check(const Permutation& rho) const;

private:
    struct AnchorGroup {
        EdgeId anchor;
        std::vector<EdgeId> listed; // edges of W(anchor) that carry a list
    };

    bool conflict(const Permutation& rho, EdgeId f) const;

    const ColoredGraph* cg_;
    const ListAssignment* L_;
    LemmaParams p_;
    CheckOptions options_;
    std::vector<EdgeId> listed_;
    std::vector<AnchorGroup> anchors_;
    std::vector<std::vector<FourCycle>> cycles_;
    std::vector<EdgeId> list_touching_edges_; // edges with a cycle that touches a listed edge
};

PermutationCheck check_permutation(const ColoredGraph& cg, const ListAssignment& L, const Permutation& rho,
                                   const LemmaParams& p, CheckOptions options = {});

struct RandomSearch {
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
};

struct ExhaustiveSearch {
    int max_d = 8;
};

using SearchStrategy = std::variant<RandomSearch, ExhaustiveSearch>;

enum class SearchOutcome { Found, BudgetExceeded, ProvenNonexistent };

struct PermutationSearchResult {
    SearchOutcome outcome = SearchOutcome::BudgetExceeded;
    std::optional<Permutation> rho;
    std::size_t trials = 0;
    PermutationCheck check; // of the accepted permutation, or of the last one tried
};

/// Random search tries the identity first and then seeded shuffles, trial k
/// drawn from its own (seed, k) stream. Exhaustive search walks all d!
/// permutations lexicographically and throws ResourceLimit when d > max_d.
PermutationSearchResult find_permutation(const ColoredGraph& cg, const ListAssignment& L, const LemmaParams& p,
                                         const SearchStrategy& strategy, CheckOptions options = {});

// Permutation tried at a given random-search trial index.
Permutation random_trial_permutation(int d, std::uint64_t seed, std::size_t trial);

struct SelectionRecord {
    EdgeId conflict = 0;
    std::size_t total_cycles = 0; // 2-colored 4-cycles through the edge
    std::size_t not_allowed = 0;
    std::size_t filter1_hits = 0; // allowed cycles failing the overload filter
    std::size_t filter2_hits = 0; // allowed cycles with a conflict or used edge
    std::size_t eliminated_filter1 = 0; // failing only the overload filter
    std::size_t eliminated_filter2 = 0;
    std::size_t survivors = 0;
    std::int64_t matching_used = 0; // used edges of the chosen cycle's matching in the 4-neighborhood
    std::optional<FourCycle> chosen;
};

struct SwapPlan {
    std::vector<FourCycle> cycles;
    std::vector<bool> used;                 // per edge
    std::vector<std::int64_t> vertex_used;  // used edges at each vertex
    std::vector<SelectionRecord> records;   // one per processed conflict edge

    std::vector<EdgeId> used_edges() const;
};

struct PSwapResult {
    bool ok = false;
    EdgeColoring coloring; // h'' on success, h' otherwise
    SwapPlan plan;
    std::optional<SelectionRecord> stuck; // the conflict edge with no surviving candidate
};

/// Builds the swap plan. Conflict edges are taken in edge-index order; for
/// e = uv the candidates are the allowed cycles u-v-z-t-u, and a candidate is
/// dropped when
///   (1) z or t already has >= epsilon*s used edges, or the standard matching
///       of vz / tu has >= epsilon*s used edges inside the 4-neighborhood of e;
///   (2) vz, zt or tu is a conflict edge or already used.
/// The survivor with least (z, t) joins the plan. All plan cycles are swapped
/// at the end. Requires epsilon > 0.
PSwapResult pswap_construct(const ColoredGraph& cg, const EdgeColoring& hprime, const ListAssignment& L,
                            const LemmaParams& p);

enum class PipelinePhase { None, Permutation, PSwap, Verify };

std::string_view to_string(PipelinePhase phase) noexcept;

struct PipelineResult {
    bool ok = false;
    PipelinePhase failed_phase = PipelinePhase::None;
    std::string reason;
    std::optional<EdgeColoring> coloring;
    PermutationSearchResult search;
    std::optional<PSwapResult> pswap;
};

/// Permutation search followed by the swap phase; a success is re-verified.
PipelineResult solve_pipeline(const ColoredGraph& cg, const ListAssignment& L, const LemmaParams& p,
                              const SearchStrategy& strategy, CheckOptions options = {});

struct Theorem2Result {
    bool ok = false;
    bool budget_exceeded = false;
    std::optional<EdgeColoring> coloring;
    std::optional<Permutation> rho; // recoloring the swaps were taken against
    std::vector<FourCycle> cycles;  // 2-colored under rho o h
    std::uint64_t nodes = 0;
    std::size_t permutations_tried = 0;
    std::string reason;
};

inline constexpr int kTheorem2ExhaustiveMaxD = 8;
inline constexpr std::size_t kTheorem2RandomTrials = 1000;

/// Avoids lists supported on a distance-2 matching with |L(e)| <= s - 1 by
/// swapping one 2-colored 4-cycle per conflict edge, backtracking when two
/// conflict edges compete for an edge. Two conflict edges at distance 2 can
/// each be left with a single allowed cycle, both through the same partner
/// edge; the search then moves on to color permutations rho o h (all of them
/// in lexicographic order for d <= 8, seeded trials above). The node budget
/// is shared by all attempts. Throws PreconditionViolated when the support or
/// list sizes break the hypothesis.
Theorem2Result solve_theorem2(const ColoredGraph& cg, const ListAssignment& L,
                              std::uint64_t node_budget = 10'000'000);

struct SolutionCheck {
    bool ok = true;
    std::string problem;
    std::optional<EdgeId> edge;
};

SolutionCheck check_solution(const ColoredGraph& cg, const EdgeColoring& f, const ListAssignment& L);

/// True iff f is total, uses colors 1..d, is proper and avoids every list.
bool verify_solution(const ColoredGraph& cg, const EdgeColoring& f, const ListAssignment& L);

} // namespace dsavoid
