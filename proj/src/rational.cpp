#include "invgeo/rational.hpp"

#include <algorithm>
#include <cctype>

namespace invgeo {

std::string to_string(const Rational& q) {
    return q.str();
}

Integer parse_decimal(std::string_view digits) {
    if (digits.empty()) throw Error("empty integer literal");
    Integer value = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw Error("invalid digit in '" + std::string(digits) + "'");
        value = value * 10 + (c - '0');
    }
    return value;
}

namespace {

Integer parse_digits(std::string_view digits, std::string_view whole) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        }))
        throw Error("invalid rational '" + std::string(whole) + "'");
    return parse_decimal(digits);
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
    Integer num = parse_digits(body.substr(0, slash), text);
    Integer den = 1;
    if (slash != std::string_view::npos) {
        den = parse_digits(body.substr(slash + 1), text);
        if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(num, den);
    return negative ? Rational(-q) : q;
}

}  // namespace invgeo
