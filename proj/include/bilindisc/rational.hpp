#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace bilindisc {

// Expression templates are off so that `a * b` is a Rational and not a proxy;
// this keeps the type usable as an Eigen scalar and inside generic code.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

// Parses "p/q" or "p" (optional sign on p, decimal digits only). Anything else,
// including floats, exponents and a zero denominator, raises ParseError.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return value == 0; }

}  // namespace bilindisc
