#pragma once

#include "dsavoid/ratio.hpp"
#include "dsavoid/solver.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace dsavoid::bounds {

// 256-bit mantissa; exponent range is wide enough that 2^-10^6 is an ordinary value.
using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<256, boost::multiprecision::digit_base_2>,
                                               boost::multiprecision::et_off>;
using BigRational = boost::multiprecision::cpp_rational;

BigFloat to_big(const Ratio& r);
BigRational to_exact(const Ratio& r);
BigFloat log2(const BigFloat& x); // -inf for 0
BigFloat euler_e();               // the base of the natural logarithm

/// Result of evaluating one inequality. For log-space reports `value` and
/// every component are log2 quantities; for exact reports `exact` holds the
/// value and `value` its rounded copy.
struct BoundReport {
    BigFloat value = 0;
    bool value_is_log2 = true;
    bool satisfied = false;
    std::vector<std::pair<std::string, BigFloat>> components;
    std::optional<BigRational> exact;

    const BigFloat& component(const std::string& name) const;
};

/// log2 of the largest admissible sparsity for the main avoidance guarantee:
/// -11 + log2 s - log2 d - (512 d / s^2) log2(2n).
BigFloat beta_threshold_log2(std::int64_t n, std::int64_t d, std::int64_t s);

/// n (e beta/gamma)^{gamma s} + (n d / 2) (2 e beta / (tau - 2 beta))^{(tau - 2 beta) s}.
/// Components "term1", "term2" (log2); satisfied iff the sum is < 1.
/// Throws DegenerateTau when tau <= 2 beta and InvalidArgument when gamma <= 0.
BoundReport lemma1_lhs(std::int64_t n, std::int64_t d, std::int64_t s, const BigFloat& beta, const BigFloat& gamma,
                       const BigFloat& tau);

/// Exact s - tau s - 9 gamma s - 3 eps s - (20 gamma / eps) d - 3; satisfied iff > 0.
BoundReport lemma2_margin(std::int64_t d, std::int64_t s, const Ratio& gamma, const Ratio& tau, const Ratio& epsilon);

/// gamma = s / (512 d), tau = 1/128, epsilon = 1/8, beta = 0. Requires 1 <= s <= d.
LemmaParams default_params(int d, int s);

/// Constants (c1, c2) with beta_threshold(n, d, kappa d) = c1 (2n)^{-c2/d}:
/// c1 = kappa / 2^11, c2 = 2^9 / kappa^2. Requires 0 < kappa <= 1.
std::pair<BigRational, BigRational> corollary_constants(const Ratio& kappa);

enum class CorollaryVariant { ConstantOverS = 4, PowerOfS = 5 };

/// log2 of the left-hand side (1/2) (2^-11 B / d)^{2^-9 s^2 / d}, where B is
/// s^2 / c (variant 4) or s^{2-c} (variant 5).
BigFloat corollary45_lhs_log2(std::int64_t d, std::int64_t s, const BigFloat& c, CorollaryVariant variant);

/// Whether the left-hand side is >= n (inclusive, up to 2^-200 relative
/// rounding slack). Throws HypothesisViolated for s < 11.
bool corollary45_check(std::int64_t n, std::int64_t d, std::int64_t s, const BigFloat& c, CorollaryVariant variant);

std::string to_decimal(const BigFloat& x, int digits = 30);

} // namespace dsavoid::bounds
