#pragma once

#include "invgeo/constraint_set.hpp"
#include "invgeo/polynomial.hpp"
#include "invgeo/tensor.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace invgeo {

/// Element of the Lie algebra in frame coordinates.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : components_(dim) {}
    explicit Vector(std::vector<Polynomial> components) : components_(std::move(components)) {}

    static Vector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return components_.size(); }
    Polynomial& operator[](std::size_t i) { return components_[i]; }
    const Polynomial& operator[](std::size_t i) const { return components_[i]; }
    const std::vector<Polynomial>& components() const { return components_; }

    bool is_zero() const;

    Vector operator-() const;
    Vector& operator+=(const Vector& other);
    Vector& operator-=(const Vector& other);
    Vector& operator*=(const Polynomial& scalar);

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Polynomial& s, Vector v) { return v *= s; }

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    std::vector<Polynomial> components_;
};

/// Linear-combination rendering, e.g. "-2*z2*X - 1/2*theta1*Z"; "0" for zero.
/// Multi-term coefficients are parenthesized: "(2*z1 - z4)*W".
std::string format_vector(const Vector& v, const std::vector<std::string>& basis);

/// Lie algebra with an orthonormal frame: [e_i, e_j] = sum_k C(i,j,k) e_k.
class LieAlgebraSpec {
public:
    /// Throws unless the structure tensor is antisymmetric in its first two slots.
    LieAlgebraSpec(std::vector<std::string> basis, ParameterTablePtr params, Tensor3<Polynomial> structure,
                   std::optional<std::vector<std::size_t>> vertical = std::nullopt);

    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis() const { return basis_; }
    const std::string& basis_name(std::size_t i) const { return basis_.at(i); }
    std::optional<std::size_t> index_of(std::string_view name) const;
    const ParameterTablePtr& params() const { return params_; }

    const Tensor3<Polynomial>& structure() const { return structure_; }
    const Polynomial& constant(std::size_t i, std::size_t j, std::size_t k) const { return structure_(i, j, k); }
    /// [e_i, e_j] as a vector.
    Vector bracket_of(std::size_t i, std::size_t j) const;

    const std::optional<std::vector<std::size_t>>& vertical() const { return vertical_; }
    LieAlgebraSpec with_vertical(std::optional<std::vector<std::size_t>> vertical) const;

    /// Structure constants with the named parameters replaced.
    LieAlgebraSpec substitute(const std::map<std::string, Polynomial, std::less<>>& values) const;
    LieAlgebraSpec substitute(const Assignment& values) const;

    friend bool operator==(const LieAlgebraSpec&, const LieAlgebraSpec&) = default;

private:
    std::vector<std::string> basis_;
    ParameterTablePtr params_;
    Tensor3<Polynomial> structure_;
    std::optional<std::vector<std::size_t>> vertical_;
};

/// Incremental construction from bracket relations [A, B] = v; the reverse
/// bracket is filled in as -v.
class LieAlgebraBuilder {
public:
    LieAlgebraBuilder(std::vector<std::string> basis, ParameterTablePtr params);

    const ParameterTablePtr& params() const { return params_; }
    Polynomial param(std::string_view name) const { return Polynomial::variable(params_, name); }
    std::size_t index(std::string_view basis_name) const;

    /// Throws on i == j or if [A, B] was already set.
    LieAlgebraBuilder& set(std::string_view a, std::string_view b, const Vector& value);
    LieAlgebraBuilder& set(std::size_t i, std::size_t j, const Vector& value);
    /// Convenience: value given as coefficient per basis name.
    LieAlgebraBuilder& set(std::string_view a, std::string_view b,
                           std::initializer_list<std::pair<std::string_view, Polynomial>> terms);
    LieAlgebraBuilder& vertical(std::initializer_list<std::string_view> names);

    LieAlgebraSpec build() const;

private:
    std::vector<std::string> basis_;
    ParameterTablePtr params_;
    Tensor3<Polynomial> structure_;
    std::vector<bool> assigned_;
    std::optional<std::vector<std::size_t>> vertical_;
};

/// Bilinear extension of the structure constants.
Vector bracket(const LieAlgebraSpec& g, const Vector& v, const Vector& w);

struct JacobiResidual {
    std::array<std::size_t, 3> triple;
    Vector value;
};

/// Nonzero cyclic sums [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j], i<j<k.
std::vector<JacobiResidual> jacobi_residual(const LieAlgebraSpec& g);

/// Components outside span{e_i : i in indices} of all pairwise brackets.
ConstraintSet is_involutive(const LieAlgebraSpec& g, const std::vector<std::size_t>& indices);

}  // namespace invgeo
