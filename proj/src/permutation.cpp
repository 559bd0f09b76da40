#include "dsavoid/errors.hpp"
#include "dsavoid/solver.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace dsavoid {

Permutation::Permutation(std::vector<Color> images) : images_(std::move(images))
{
    std::vector<bool> hit(images_.size() + 1, false);
    for (Color c : images_) {
        if (c < 1 || c > static_cast<Color>(images_.size()) || hit[c]) {
            throw Error(ErrorKind::InvalidArgument, "not a permutation of 1.." + std::to_string(images_.size()));
        }
        hit[c] = true;
    }
}

Permutation Permutation::identity(int d)
{
    std::vector<Color> images(static_cast<std::size_t>(d));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::inverse() const
{
    std::vector<Color> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<Color>(i + 1);
    return Permutation(std::move(inv));
}

bool Permutation::next_lexicographic()
{
    return std::next_permutation(images_.begin(), images_.end());
}

void LemmaParams::validate() const
{
    auto in_range = [](const Ratio& r) { return r >= Ratio(0) && r < Ratio(1); };
    if (!in_range(gamma) || !in_range(tau) || !in_range(epsilon)) {
        throw Error(ErrorKind::InvalidArgument, "gamma, tau and epsilon must lie in [0, 1)");
    }
    if (beta < Ratio(0)) throw Error(ErrorKind::InvalidArgument, "beta must be >= 0");
    if (s < 1 || d < s) throw Error(ErrorKind::InvalidArgument, "parameters need 1 <= s <= d");
}

bool LemmaParams::strictly_inside_unit_interval() const
{
    auto open = [](const Ratio& r) { return r > Ratio(0) && r < Ratio(1); };
    return open(gamma) && open(tau) && open(epsilon);
}

LemmaParams params_for(const ColoredGraph& cg, Ratio gamma, Ratio tau, Ratio epsilon, Ratio beta)
{
    LemmaParams p;
    p.beta = beta;
    p.gamma = gamma;
    p.tau = tau;
    p.epsilon = epsilon;
    p.s = cg.s();
    p.d = cg.d;
    return p;
}

EdgeColoring apply_permutation(const EdgeColoring& h, const Permutation& rho)
{
    if (rho.d() != h.d()) throw Error(ErrorKind::InvalidArgument, "permutation size differs from color count");
    std::vector<Color> colors(h.size());
    for (EdgeId e = 0; e < h.size(); ++e) colors[e] = h[e] == kUncolored ? kUncolored : rho(h[e]);
    return EdgeColoring(std::move(colors), h.d());
}

namespace {

// Swap turns uv, zt into color_b and vz, tu into color_a.
bool swap_is_allowed(const ListAssignment& L, const FourCycle& c, Color a, Color b)
{
    return !L.contains(c.edges[0], b) && !L.contains(c.edges[1], a) && !L.contains(c.edges[2], b) &&
           !L.contains(c.edges[3], a);
}

} // namespace

std::vector<FourCycle> allowed_cycles(const ColoredGraph& cg, const EdgeColoring& f, const ListAssignment& L,
                                      EdgeId e)
{
    auto cycles = two_colored_cycles_through(cg.graph, f, e);
    std::erase_if(cycles, [&](const FourCycle& c) { return !swap_is_allowed(L, c, c.color_a, c.color_b); });
    return cycles;
}

PermutationChecker::PermutationChecker(const ColoredGraph& cg, const ListAssignment& L, const LemmaParams& p,
                                       CheckOptions options)
    : cg_(&cg), L_(&L), p_(p), options_(options)
{
    p_.validate();
    const Graph& g = cg.graph;
    listed_ = L.support();
    std::vector<bool> is_listed(g.edge_count(), false);
    for (EdgeId e : listed_) is_listed.at(e) = true;

    if (!listed_.empty()) {
        for (EdgeId anchor = 0; anchor < g.edge_count(); ++anchor) {
            AnchorGroup group{anchor, {}};
            for (EdgeId f : t_neighborhood(g, anchor, 6)) {
                if (is_listed[f]) group.listed.push_back(f);
            }
            if (!group.listed.empty()) anchors_.push_back(std::move(group));
        }
    }

    cycles_.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        cycles_[e] = two_colored_cycles_through(g, cg.h, e);
        const bool touches = std::any_of(cycles_[e].begin(), cycles_[e].end(), [&](const FourCycle& c) {
            return std::any_of(c.edges.begin(), c.edges.end(), [&](EdgeId x) { return is_listed[x]; });
        });
        if (touches) list_touching_edges_.push_back(e);
    }
}

bool PermutationChecker::conflict(const Permutation& rho, EdgeId f) const
{
    return L_->contains(f, rho(cg_->h[f]));
}

PermutationCheck PermutationChecker::check(const Permutation& rho) const
{
    const ColoredGraph& cg = *cg_;
    const std::int64_t s = p_.s;
    PermutationCheck out;

    std::vector<bool> is_conflict(cg.graph.edge_count(), false);
    std::vector<EdgeId> conflicts;
    for (EdgeId f : listed_) {
        if (conflict(rho, f)) {
            is_conflict[f] = true;
            conflicts.push_back(f);
        }
    }

    // (a)
    std::vector<std::int64_t> per_matching(static_cast<std::size_t>(cg.d) + 1);
    for (const auto& group : anchors_) {
        std::fill(per_matching.begin(), per_matching.end(), 0);
        for (EdgeId f : group.listed) {
            if (is_conflict[f]) ++per_matching[cg.h[f]];
        }
        for (Color m = 1; m <= cg.d; ++m) {
            if (!at_most(per_matching[m], p_.gamma, s)) {
                out.ok_a = false;
                out.a_witnesses.push_back({group.anchor, m, per_matching[m]});
                if (options_.stop_at_first) return out;
            }
        }
    }

    // (b)
    std::vector<std::int64_t> per_vertex(cg.graph.vertex_count(), 0);
    for (EdgeId f : conflicts) {
        ++per_vertex[cg.graph.edge(f).u];
        ++per_vertex[cg.graph.edge(f).v];
    }
    for (Vertex x = 0; x < per_vertex.size(); ++x) {
        if (!at_most(per_vertex[x], p_.gamma, s)) {
            out.ok_b = false;
            out.b_witnesses.push_back({x, per_vertex[x]});
            if (options_.stop_at_first) return out;
        }
    }

    // (c)
    auto check_edge = [&](EdgeId e, std::int64_t disallowed) {
        const auto total = static_cast<std::int64_t>(cycles_[e].size());
        bool ok = true;
        if (options_.literal_condition_c) {
            ok = Ratio(total - disallowed) >= (Ratio(1) - p_.tau) * Ratio(s);
        } else {
            ok = at_most(disallowed, p_.tau, s);
        }
        if (!ok) {
            out.ok_c = false;
            out.c_witnesses.push_back({e, disallowed, total});
        }
        return ok;
    };
    std::vector<std::int64_t> disallowed(cg.graph.edge_count(), 0);
    for (EdgeId e : list_touching_edges_) {
        for (const auto& c : cycles_[e]) {
            if (!swap_is_allowed(*L_, c, rho(c.color_a), rho(c.color_b))) ++disallowed[e];
        }
    }
    if (options_.literal_condition_c) {
        for (EdgeId e = 0; e < cg.graph.edge_count(); ++e) {
            if (!check_edge(e, disallowed[e]) && options_.stop_at_first) return out;
        }
    } else {
        for (EdgeId e : list_touching_edges_) {
            if (!check_edge(e, disallowed[e]) && options_.stop_at_first) return out;
        }
    }
    return out;
}

PermutationCheck check_permutation(const ColoredGraph& cg, const ListAssignment& L, const Permutation& rho,
                                   const LemmaParams& p, CheckOptions options)
{
    return PermutationChecker(cg, L, p, options).check(rho);
}

Permutation random_trial_permutation(int d, std::uint64_t seed, std::size_t trial)
{
    if (trial == 0) return Permutation::identity(d);
    std::vector<Color> images(static_cast<std::size_t>(d));
    std::iota(images.begin(), images.end(), 1);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(std::move(images));
}

PermutationSearchResult find_permutation(const ColoredGraph& cg, const ListAssignment& L, const LemmaParams& p,
                                         const SearchStrategy& strategy, CheckOptions options)
{
    options.stop_at_first = true;
    const PermutationChecker checker(cg, L, p, options);
    PermutationSearchResult result;

    if (const auto* rnd = std::get_if<RandomSearch>(&strategy)) {
        for (std::size_t k = 0; k < rnd->trials; ++k) {
            Permutation rho = random_trial_permutation(cg.d, rnd->seed, k);
            result.check = checker.check(rho);
            result.trials = k + 1;
            if (result.check.ok()) {
                result.outcome = SearchOutcome::Found;
                result.rho = std::move(rho);
                return result;
            }
        }
        result.outcome = SearchOutcome::BudgetExceeded;
        return result;
    }

    const auto& ex = std::get<ExhaustiveSearch>(strategy);
    if (cg.d > ex.max_d) {
        throw Error(ErrorKind::ResourceLimit, "exhaustive permutation search limited to d <= " +
                                                  std::to_string(ex.max_d) + ", got d=" + std::to_string(cg.d));
    }
    Permutation rho = Permutation::identity(cg.d);
    do {
        result.check = checker.check(rho);
        ++result.trials;
        if (result.check.ok()) {
            result.outcome = SearchOutcome::Found;
            result.rho = rho;
            return result;
        }
    } while (rho.next_lexicographic());
    result.outcome = SearchOutcome::ProvenNonexistent;
    return result;
}

} // namespace dsavoid
