#include "dsavoid/oracle.hpp"

#include "dsavoid/errors.hpp"

#include <bit>

namespace dsavoid {

namespace {

class AvoidSearch {
public:
    AvoidSearch(const Graph& g, int d, const ListAssignment& L, std::uint64_t budget)
        : g_(g), d_(d), budget_(budget), color_(g.edge_count(), kUncolored), at_vertex_(g.vertex_count(), 0),
          forbidden_(g.edge_count(), 0)
    {
        for (const auto& [e, lst] : L.entries()) {
            for (Color c : lst) forbidden_.at(e) |= bit(c);
        }
        full_ = (d >= 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (d + 1)) - 2);
    }

    // true = found, false = exhausted; exceeded_ distinguishes budget stops.
    bool run(std::size_t colored)
    {
        if (colored == color_.size()) return true;
        if (++nodes_ > budget_) {
            exceeded_ = true;
            return false;
        }
        EdgeId best = color_.size();
        int best_count = d_ + 1;
        std::uint64_t best_mask = 0;
        for (EdgeId e = 0; e < color_.size(); ++e) {
            if (color_[e] != kUncolored) continue;
            const std::uint64_t mask = available(e);
            const int count = std::popcount(mask);
            if (count < best_count) {
                best = e;
                best_count = count;
                best_mask = mask;
                if (count == 0) return false;
            }
        }
        const Edge& ed = g_.edge(best);
        for (std::uint64_t mask = best_mask; mask != 0; mask &= mask - 1) {
            const Color c = std::countr_zero(mask);
            color_[best] = c;
            at_vertex_[ed.u] |= bit(c);
            at_vertex_[ed.v] |= bit(c);
            if (run(colored + 1)) return true;
            at_vertex_[ed.u] &= ~bit(c);
            at_vertex_[ed.v] &= ~bit(c);
            color_[best] = kUncolored;
            if (exceeded_) return false;
        }
        return false;
    }

    std::uint64_t nodes() const { return nodes_; }
    bool exceeded() const { return exceeded_; }
    const std::vector<Color>& colors() const { return color_; }

private:
    static std::uint64_t bit(Color c) { return std::uint64_t{1} << c; }

    std::uint64_t available(EdgeId e) const
    {
        const Edge& ed = g_.edge(e);
        return full_ & ~(at_vertex_[ed.u] | at_vertex_[ed.v] | forbidden_[e]);
    }

    const Graph& g_;
    int d_;
    std::uint64_t budget_;
    std::vector<Color> color_;
    std::vector<std::uint64_t> at_vertex_;
    std::vector<std::uint64_t> forbidden_;
    std::uint64_t full_ = 0;
    std::uint64_t nodes_ = 0;
    bool exceeded_ = false;
};

} // namespace

OracleResult oracle_avoidable(const Graph& g, int d, const ListAssignment& L, std::uint64_t node_budget)
{
    if (d < 0 || d > 62) throw Error(ErrorKind::InvalidArgument, "oracle supports 0 <= d <= 62");
    for (const auto& [e, lst] : L.entries()) {
        if (e >= g.edge_count()) throw Error(ErrorKind::InvalidArgument, "list on nonexistent edge " + std::to_string(e));
        for (Color c : lst) {
            if (c < 1 || c > d) throw Error(ErrorKind::ColorOutOfRange, "list color outside 1..d");
        }
    }
    AvoidSearch search(g, d, L, node_budget);
    OracleResult out;
    const bool found = search.run(0);
    out.nodes_explored = search.nodes();
    if (found) {
        out.status = OracleStatus::Avoidable;
        out.witness = EdgeColoring(search.colors(), d);
    } else {
        out.status = search.exceeded() ? OracleStatus::BudgetExceeded : OracleStatus::NotAvoidable;
    }
    return out;
}

std::vector<std::size_t> oracle_cycle_census(const Graph& g, const EdgeColoring& f)
{
    std::vector<std::size_t> count(g.edge_count(), 0);
    // Each 4-cycle a-b-c-x-a is visited once: a is its least vertex and b < x.
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        for (EdgeId ab : g.incident(a)) {
            const Vertex b = g.other_endpoint(ab, a);
            if (b < a) continue;
            for (EdgeId bc : g.incident(b)) {
                const Vertex c = g.other_endpoint(bc, b);
                if (c <= a) continue;
                for (EdgeId cx : g.incident(c)) {
                    const Vertex x = g.other_endpoint(cx, c);
                    if (x <= b || x == c) continue;
                    const auto xa = g.find_edge(x, a);
                    if (!xa) continue;
                    const bool two_colored = f[ab] == f[cx] && f[bc] == f[*xa] && f[ab] != f[bc];
                    if (!two_colored) continue;
                    ++count[ab];
                    ++count[bc];
                    ++count[cx];
                    ++count[*xa];
                }
            }
        }
    }
    return count;
}

} // namespace dsavoid
