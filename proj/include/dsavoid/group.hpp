#pragma once

#include <cstddef>
#include <vector>

namespace dsavoid {

using Element = std::size_t;

/// Finite group on elements 0..size()-1.
///
/// Two representations: a direct product of cyclic groups Z_{d_1} x ... x Z_{d_k}
/// (element index is mixed radix with coordinate 0 least significant), or an
/// explicit multiplication table, validated for the group axioms.
class FiniteGroup {
public:
    static FiniteGroup cyclic_product(std::vector<std::size_t> orders);
    static FiniteGroup from_table(std::vector<std::vector<Element>> table);

    std::size_t size() const noexcept { return size_; }
    Element identity() const noexcept { return identity_; }
    Element mul(Element a, Element b) const;
    Element inverse(Element a) const;
    Element power(Element a, std::size_t k) const;
    std::size_t order(Element a) const;
    bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }
    bool is_abelian() const;

    bool is_cyclic_product() const noexcept { return table_.empty(); }
    const std::vector<std::size_t>& factor_orders() const noexcept { return orders_; }

    // Coordinates <-> element index; cyclic-product groups only.
    Element encode(const std::vector<std::size_t>& coords) const;
    std::vector<std::size_t> decode(Element a) const;

    static constexpr std::size_t kMaxCyclicProductSize = std::size_t{1} << 20;
    static constexpr std::size_t kMaxTableSize = 256;

private:
    FiniteGroup() = default;

    std::size_t size_ = 1;
    Element identity_ = 0;
    std::vector<std::size_t> orders_;
    std::vector<std::vector<Element>> table_;
    std::vector<Element> inverse_;
};

} // namespace dsavoid
