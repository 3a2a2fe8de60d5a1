#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace invgeo {

/// Exact rational number, always kept in lowest terms with positive denominator.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Renders "n" or "n/d".
std::string to_string(const Rational& q);

/// Value of a nonempty string of decimal digits (leading zeros allowed).
Integer parse_decimal(std::string_view digits);

/// Parses "n", "-n" or "n/d" (optional sign, decimal digits, nonzero d).
Rational parse_rational(std::string_view text);

}  // namespace invgeo
