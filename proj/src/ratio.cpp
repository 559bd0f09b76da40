#include "dsavoid/ratio.hpp"

#include "dsavoid/errors.hpp"

#include <charconv>
#include <limits>

namespace dsavoid {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole)
{
    std::int64_t value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
        throw Error(ErrorKind::InvalidArgument, "cannot parse rational '" + std::string(whole) + "'");
    }
    return value;
}

} // namespace

Ratio parse_ratio(std::string_view text)
{
    if (text.empty()) throw Error(ErrorKind::InvalidArgument, "empty rational");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto den = parse_int(text.substr(slash + 1), text);
        if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
        return Ratio(parse_int(text.substr(0, slash), text), den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        bool negative = false;
        if (!int_part.empty() && int_part.front() == '-') {
            negative = true;
            int_part.remove_prefix(1);
        }
        if (frac_part.size() > 17) {
            throw Error(ErrorKind::InvalidArgument, "too many decimals in '" + std::string(text) + "'");
        }
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
        const std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
        const std::int64_t frac = frac_part.empty() ? 0 : parse_int(frac_part, text);
        if (frac < 0) throw Error(ErrorKind::InvalidArgument, "cannot parse rational '" + std::string(text) + "'");
        Ratio r = Ratio(whole) + Ratio(frac, scale);
        return negative ? -r : r;
    }
    return Ratio(parse_int(text, text));
}

std::string format_ratio(const Ratio& r)
{
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Ratio& r)
{
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

} // namespace dsavoid
