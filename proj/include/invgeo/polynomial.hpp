#pragma once

#include "invgeo/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace invgeo {

/// Ordered list of distinct parameter names. Index order is the variable
/// order used by the monomial ordering and therefore by rendering.
class ParameterTable {
public:
    ParameterTable() = default;
    explicit ParameterTable(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t index) const { return names_.at(index); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const ParameterTable&, const ParameterTable&) = default;

private:
    std::vector<std::string> names_;
};

using ParameterTablePtr = std::shared_ptr<const ParameterTable>;

ParameterTablePtr make_parameter_table(std::vector<std::string> names);

/// True for identifiers of the form [A-Za-z_][A-Za-z0-9_]*.
bool is_identifier(std::string_view text);

/// Power product of parameters; exponents are stored sparsely and are never zero.
class Monomial {
public:
    using Factor = std::pair<std::uint32_t, std::uint32_t>;  // (parameter index, exponent)

    Monomial() = default;
    static Monomial variable(std::size_t index, std::uint32_t exponent = 1);

    bool is_constant() const { return factors_.empty(); }
    std::uint32_t degree() const;
    std::uint32_t exponent(std::size_t index) const;
    const std::vector<Factor>& factors() const { return factors_; }

    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;  // sorted by index
};

/// Graded lexicographic order: higher total degree first, then the larger
/// exponent of the earliest parameter wins.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

using Assignment = std::map<std::string, Rational, std::less<>>;

/// Multivariate polynomial with rational coefficients in canonical form.
///
/// A polynomial without variables may carry no parameter table; it then
/// adopts the table of whatever it is combined with.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDescending>;

    Polynomial() = default;
    Polynomial(Rational constant);  // NOLINT(google-explicit-constructor)
    Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
    Polynomial(ParameterTablePtr table, Rational constant);

    static Polynomial variable(ParameterTablePtr table, std::size_t index);
    static Polynomial variable(ParameterTablePtr table, std::string_view name);
    static Polynomial from_terms(ParameterTablePtr table, TermMap terms);

    const ParameterTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::uint32_t degree() const;
    /// Coefficient of the grlex-largest monomial; zero for the zero polynomial.
    Rational leading_coefficient() const;
    Rational coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    Polynomial pow(std::uint32_t exponent) const;

    /// Exact value at a full assignment; throws if a used parameter is missing.
    Rational eval(const Assignment& assignment) const;

    /// Replaces the named parameters by polynomials over the same table.
    Polynomial substitute(const std::map<std::string, Polynomial, std::less<>>& values) const;

    /// Canonical rendering, e.g. "-1/2*theta1^2 - 6*z2^2"; zero is "0".
    std::string to_string() const;

    /// Set of parameter indices that occur.
    std::vector<std::size_t> variables() const;

private:
    ParameterTablePtr table_;
    TermMap terms_;
};

/// Total order on canonical forms (for sorting constraint sets).
std::strong_ordering canonical_compare(const Polynomial& a, const Polynomial& b);

/// Primitive part with positive leading coefficient: integer coefficients
/// whose gcd is 1. Zero stays zero.
Polynomial normalize_constraint(const Polynomial& p);

/// Resolves the table shared by two operands or throws on a mismatch.
ParameterTablePtr common_table(const ParameterTablePtr& a, const ParameterTablePtr& b);

}  // namespace invgeo
