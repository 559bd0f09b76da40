#include "dsavoid/bounds.hpp"

#include "dsavoid/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <iomanip>
#include <limits>
#include <sstream>

namespace dsavoid::bounds {

BigFloat to_big(const Ratio& r)
{
    return BigFloat(r.numerator()) / BigFloat(r.denominator());
}

BigRational to_exact(const Ratio& r)
{
    return BigRational(r.numerator()) / BigRational(r.denominator());
}

BigFloat log2(const BigFloat& x)
{
    if (x < 0) throw Error(ErrorKind::InvalidArgument, "log2 of a negative number");
    if (x == 0) return -std::numeric_limits<BigFloat>::infinity();
    return boost::multiprecision::log(x) / boost::math::constants::ln_two<BigFloat>();
}

BigFloat euler_e()
{
    return boost::math::constants::e<BigFloat>();
}

const BigFloat& BoundReport::component(const std::string& name) const
{
    for (const auto& [key, value] : components) {
        if (key == name) return value;
    }
    throw Error(ErrorKind::InvalidArgument, "no component named " + name);
}

BigFloat beta_threshold_log2(std::int64_t n, std::int64_t d, std::int64_t s)
{
    if (n < 1 || d < 1 || s < 1) throw Error(ErrorKind::InvalidArgument, "n, d, s must be >= 1");
    const BigFloat exponent = BigFloat(512) * BigFloat(d) / (BigFloat(s) * BigFloat(s));
    return BigFloat(-11) + log2(BigFloat(s)) - log2(BigFloat(d)) - exponent * log2(BigFloat(2) * BigFloat(n));
}

namespace {

// log2(2^a + 2^b), tolerating -inf operands.
BigFloat log2_sum(const BigFloat& a, const BigFloat& b)
{
    if (boost::multiprecision::isinf(a) && a < 0) return b;
    if (boost::multiprecision::isinf(b) && b < 0) return a;
    const BigFloat hi = a > b ? a : b;
    const BigFloat lo = a > b ? b : a;
    return hi + log2(BigFloat(1) + boost::multiprecision::pow(BigFloat(2), lo - hi));
}

} // namespace

BoundReport lemma1_lhs(std::int64_t n, std::int64_t d, std::int64_t s, const BigFloat& beta, const BigFloat& gamma,
                       const BigFloat& tau)
{
    if (gamma <= 0) throw Error(ErrorKind::InvalidArgument, "gamma must be > 0");
    if (beta < 0) throw Error(ErrorKind::InvalidArgument, "beta must be >= 0");
    if (tau <= 2 * beta) throw Error(ErrorKind::DegenerateTau, "tau must exceed 2 beta");

    const BigFloat log_e = log2(euler_e());
    const BigFloat log_n = log2(BigFloat(n));
    const BigFloat ss(s);
    BigFloat term1;
    BigFloat term2;
    if (beta == 0) {
        term1 = -std::numeric_limits<BigFloat>::infinity();
        term2 = -std::numeric_limits<BigFloat>::infinity();
    } else {
        const BigFloat log_beta = log2(beta);
        term1 = log_n + gamma * ss * (log_e + log_beta - log2(gamma));
        const BigFloat slack = tau - 2 * beta;
        term2 = log_n + log2(BigFloat(d)) - 1 + slack * ss * (1 + log_e + log_beta - log2(slack));
    }
    BoundReport r;
    r.value = log2_sum(term1, term2);
    r.value_is_log2 = true;
    r.satisfied = r.value < 0;
    r.components = {{"term1", term1}, {"term2", term2}};
    return r;
}

BoundReport lemma2_margin(std::int64_t d, std::int64_t s, const Ratio& gamma, const Ratio& tau, const Ratio& epsilon)
{
    if (epsilon <= Ratio(0)) throw Error(ErrorKind::InvalidArgument, "epsilon must be > 0");
    const BigRational S(s), D(d);
    const BigRational g = to_exact(gamma), t = to_exact(tau), e = to_exact(epsilon);
    const BigRational tau_part = t * S;
    const BigRational gamma_part = 9 * g * S;
    const BigRational eps_part = 3 * e * S;
    const BigRational overload_part = 20 * g * D / e;
    const BigRational margin = S - tau_part - gamma_part - eps_part - overload_part - 3;

    BoundReport r;
    r.exact = margin;
    r.value = BigFloat(margin);
    r.value_is_log2 = false;
    r.satisfied = margin > 0;
    r.components = {{"tau_s", BigFloat(tau_part)},
                    {"9_gamma_s", BigFloat(gamma_part)},
                    {"3_epsilon_s", BigFloat(eps_part)},
                    {"20_gamma_d_over_epsilon", BigFloat(overload_part)}};
    return r;
}

LemmaParams default_params(int d, int s)
{
    if (s < 1 || s > d) throw Error(ErrorKind::InvalidArgument, "default parameters need 1 <= s <= d");
    LemmaParams p;
    p.gamma = Ratio(s, 512 * static_cast<std::int64_t>(d));
    p.tau = Ratio(1, 128);
    p.epsilon = Ratio(1, 8);
    p.s = s;
    p.d = d;
    return p;
}

std::pair<BigRational, BigRational> corollary_constants(const Ratio& kappa)
{
    if (kappa <= Ratio(0) || kappa > Ratio(1)) throw Error(ErrorKind::InvalidArgument, "kappa must lie in (0, 1]");
    const BigRational k = to_exact(kappa);
    return {k / 2048, BigRational(512) / (k * k)};
}

BigFloat corollary45_lhs_log2(std::int64_t d, std::int64_t s, const BigFloat& c, CorollaryVariant variant)
{
    const BigFloat ss(s), dd(d);
    const BigFloat log_s = log2(ss);
    BigFloat log_base;
    if (variant == CorollaryVariant::ConstantOverS) {
        if (c <= 0) throw Error(ErrorKind::InvalidArgument, "c must be > 0");
        log_base = -11 + 2 * log_s - log2(c) - log2(dd);
    } else {
        log_base = -11 + (2 - c) * log_s - log2(dd);
    }
    const BigFloat exponent = ss * ss / (512 * dd);
    return -1 + exponent * log_base;
}

bool corollary45_check(std::int64_t n, std::int64_t d, std::int64_t s, const BigFloat& c, CorollaryVariant variant)
{
    if (s < 11) throw Error(ErrorKind::HypothesisViolated, "corollary requires s >= 11, got s=" + std::to_string(s));
    if (n < 1 || d < s) throw Error(ErrorKind::InvalidArgument, "need n >= 1 and d >= s");
    const BigFloat lhs = corollary45_lhs_log2(d, s, c, variant);
    const BigFloat rhs = log2(BigFloat(n));
    const BigFloat slack = boost::multiprecision::ldexp(BigFloat(1), -200) *
                           (1 + boost::multiprecision::abs(rhs));
    return lhs >= rhs - slack;
}

std::string to_decimal(const BigFloat& x, int digits)
{
    if (boost::multiprecision::isinf(x)) return x < 0 ? "-inf" : "inf";
    std::ostringstream out;
    out << std::setprecision(digits) << x;
    return out.str();
}

} // namespace dsavoid::bounds
