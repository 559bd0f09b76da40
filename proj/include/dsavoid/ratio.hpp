#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace dsavoid {

// Exact rational used for every sparsity/budget threshold so that counts are
// compared against beta*s, gamma*s, ... without rounding.
using Ratio = boost::rational<std::int64_t>;

// Accepts "p/q", integers and plain decimals ("0.125", "1e-3" is rejected).
Ratio parse_ratio(std::string_view text);

// Canonical "p/q" form ("3" for integers).
std::string format_ratio(const Ratio& r);

double to_double(const Ratio& r);

// count <= r * s, exactly.
inline bool at_most(std::int64_t count, const Ratio& r, std::int64_t s)
{
    return Ratio(count) <= r * Ratio(s);
}

} // namespace dsavoid
