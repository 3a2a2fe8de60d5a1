#pragma once

#include "invgeo/conventions.hpp"
#include "invgeo/lie_algebra.hpp"
#include "invgeo/riemannian.hpp"

#include <string>
#include <utility>

namespace invgeo {

/// Constant endomorphism of the Lie algebra with J^2 = -I and J^T J = I.
/// Stored column-wise: matrix()(k, j) is the e_k component of J e_j.
class AlmostComplexStructure {
public:
    /// Throws if the invariants fail.
    AlmostComplexStructure(std::string name, Matrix<Rational> matrix);

    const std::string& name() const { return name_; }
    const Matrix<Rational>& matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.dim(); }

    Vector apply(const Vector& v) const;
    /// J e_j.
    Vector image(std::size_t j) const;

private:
    std::string name_;
    Matrix<Rational> matrix_;
};

/// The two structures adapted to a (2,2) split with horizontal (h0,h1) and
/// vertical (v0,v1) in basis order:
///   J1: h0 -> h1, h1 -> -h0, v0 -> v1, v1 -> -v0
///   J2: h0 -> h1, h1 -> -h0, v1 -> v0, v0 -> -v1
/// Requires dim 4 and a declared vertical pair.
std::pair<AlmostComplexStructure, AlmostComplexStructure> canonical_structures(const LieAlgebraSpec& g);

/// Nijenhuis tensor on basis pairs, N(v,w) = [Jv,Jw] - J[Jv,w] - J[v,Jw] - [v,w].
struct NijenhuisTensor {
    Matrix<Vector> values;  // values(i, j) = N(e_i, e_j)

    std::size_t dim() const { return values.dim(); }
    const Vector& operator()(std::size_t i, std::size_t j) const { return values(i, j); }
};

NijenhuisTensor nijenhuis(const LieAlgebraSpec& g, const AlmostComplexStructure& J, const Conventions& conv = {});

/// Normalized distinct nonzero Nijenhuis components.
ConstraintSet integrability_constraints(const NijenhuisTensor& N);
ConstraintSet integrability_constraints(const LieAlgebraSpec& g, const AlmostComplexStructure& J,
                                        const Conventions& conv = {});

/// Covariant derivative of J: values(i, j) = (nabla_{e_i} J)(e_j).
struct KahlerDefect {
    Matrix<Vector> values;
    ConstraintSet constraints;

    const Vector& operator()(std::size_t i, std::size_t j) const { return values(i, j); }
};

KahlerDefect covariant_J(const LieAlgebraSpec& g, const ConnectionTable& conn, const AlmostComplexStructure& J);

inline bool is_kahler(const KahlerDefect& defect) {
    return defect.constraints.empty();
}

}  // namespace invgeo
