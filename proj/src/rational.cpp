#include "bilindisc/rational.hpp"

#include "bilindisc/errors.hpp"

#include <algorithm>
#include <cctype>

namespace bilindisc {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                                 : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("not an exact rational: '" + std::string(text) + "'");
    }
    Integer n(std::string{num});
    Integer d(std::string{den});
    if (d == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    if (negative) n = -n;
    return Rational(n, d);
}

std::string to_string(const Rational& value) {
    const Integer n = boost::multiprecision::numerator(value);
    const Integer d = boost::multiprecision::denominator(value);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

}  // namespace bilindisc
