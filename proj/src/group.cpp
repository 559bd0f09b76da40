#include "dsavoid/group.hpp"

#include "dsavoid/errors.hpp"

#include <string>

namespace dsavoid {

FiniteGroup FiniteGroup::cyclic_product(std::vector<std::size_t> orders)
{
    FiniteGroup g;
    std::size_t size = 1;
    for (std::size_t d : orders) {
        if (d == 0) throw Error(ErrorKind::InvalidArgument, "cyclic factor of order 0");
        if (size > kMaxCyclicProductSize / d) {
            throw Error(ErrorKind::ResourceLimit, "group order exceeds " + std::to_string(kMaxCyclicProductSize));
        }
        size *= d;
    }
    g.size_ = size;
    g.orders_ = std::move(orders);
    g.identity_ = 0;
    return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> table)
{
    const std::size_t n = table.size();
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty multiplication table");
    if (n > kMaxTableSize) {
        throw Error(ErrorKind::ResourceLimit, "multiplication table larger than " + std::to_string(kMaxTableSize));
    }
    for (const auto& row : table) {
        if (row.size() != n) throw Error(ErrorKind::InvalidArgument, "multiplication table is not square");
        for (Element x : row) {
            if (x >= n) throw Error(ErrorKind::InvalidArgument, "multiplication table not closed");
        }
    }
    std::size_t identity = n;
    for (Element e = 0; e < n && identity == n; ++e) {
        bool ok = true;
        for (Element a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
        if (ok) identity = e;
    }
    if (identity == n) throw Error(ErrorKind::InvalidArgument, "multiplication table has no identity");
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            for (Element c = 0; c < n; ++c) {
                if (table[table[a][b]][c] != table[a][table[b][c]]) {
                    throw Error(ErrorKind::InvalidArgument, "multiplication table is not associative");
                }
            }
        }
    }
    std::vector<Element> inverse(n, n);
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            if (table[a][b] == identity) inverse[a] = b;
        }
        if (inverse[a] == n) throw Error(ErrorKind::InvalidArgument, "element without inverse");
    }
    FiniteGroup g;
    g.size_ = n;
    g.identity_ = identity;
    g.table_ = std::move(table);
    g.inverse_ = std::move(inverse);
    return g;
}

Element FiniteGroup::mul(Element a, Element b) const
{
    if (a >= size_ || b >= size_) throw Error(ErrorKind::InvalidArgument, "element out of range");
    if (!table_.empty()) return table_[a][b];
    Element out = 0;
    std::size_t radix = 1;
    for (std::size_t d : orders_) {
        const std::size_t x = (a / radix) % d;
        const std::size_t y = (b / radix) % d;
        out += ((x + y) % d) * radix;
        radix *= d;
    }
    return out;
}

Element FiniteGroup::inverse(Element a) const
{
    if (a >= size_) throw Error(ErrorKind::InvalidArgument, "element out of range");
    if (!table_.empty()) return inverse_[a];
    Element out = 0;
    std::size_t radix = 1;
    for (std::size_t d : orders_) {
        const std::size_t x = (a / radix) % d;
        out += ((d - x) % d) * radix;
        radix *= d;
    }
    return out;
}

Element FiniteGroup::power(Element a, std::size_t k) const
{
    Element out = identity_;
    for (std::size_t i = 0; i < k; ++i) out = mul(out, a);
    return out;
}

std::size_t FiniteGroup::order(Element a) const
{
    std::size_t k = 1;
    for (Element x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
}

bool FiniteGroup::is_abelian() const
{
    if (table_.empty()) return true;
    for (Element a = 0; a < size_; ++a) {
        for (Element b = a + 1; b < size_; ++b) {
            if (!commute(a, b)) return false;
        }
    }
    return true;
}

Element FiniteGroup::encode(const std::vector<std::size_t>& coords) const
{
    if (!table_.empty()) throw Error(ErrorKind::InvalidArgument, "encode needs a cyclic-product group");
    if (coords.size() != orders_.size()) {
        throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(orders_.size()) + " coordinates");
    }
    Element out = 0;
    std::size_t radix = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        out += (coords[i] % orders_[i]) * radix;
        radix *= orders_[i];
    }
    return out;
}

std::vector<std::size_t> FiniteGroup::decode(Element a) const
{
    if (!table_.empty()) throw Error(ErrorKind::InvalidArgument, "decode needs a cyclic-product group");
    std::vector<std::size_t> out;
    for (std::size_t d : orders_) {
        out.push_back(a % d);
        a /= d;
    }
    return out;
}

} // namespace dsavoid
