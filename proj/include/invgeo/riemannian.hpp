#pragma once

#include "invgeo/conventions.hpp"
#include "invgeo/lie_algebra.hpp"

#include <utility>
#include <vector>

namespace invgeo {

/// Levi-Civita coefficients in the orthonormal frame:
/// nabla_{e_i} e_j = sum_k gamma(i,j,k) e_k.
struct ConnectionTable {
    Tensor3<Polynomial> gamma;

    std::size_t dim() const { return gamma.dim(); }
    /// nabla_{e_i} e_j.
    Vector nabla(std::size_t i, std::size_t j) const;
    /// nabla_{e_i} v for a left-invariant v.
    Vector nabla(std::size_t i, const Vector& v) const;
};

/// Entries <R(e_i,e_j)e_k, e_l>.
struct CurvatureTensor {
    Tensor4<Polynomial> r;

    std::size_t dim() const { return r.dim(); }
    const Polynomial& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return r(i, j, k, l);
    }
};

using RicciTensor = Matrix<Polynomial>;

/// Koszul formula: gamma(i,j,k) = 1/2 (C(k,i,j) + C(k,j,i) + C(i,j,k)).
ConnectionTable levi_civita(const LieAlgebraSpec& g, const Conventions& conv = {});

bool is_torsion_free(const LieAlgebraSpec& g, const ConnectionTable& conn);
bool is_metric_compatible(const ConnectionTable& conn);

CurvatureTensor curvature(const LieAlgebraSpec& g, const ConnectionTable& conn, const Conventions& conv = {});

/// <R(e_i,e_j)e_j, e_i>; throws when i == j.
Polynomial sectional(const CurvatureTensor& R, std::size_t i, std::size_t j);

/// Ric(e_i,e_j) = sum_k <R(e_i,e_k)e_k, e_j>.
RicciTensor ricci(const CurvatureTensor& R);
bool is_symmetric(const RicciTensor& ric);

Polynomial scalar_curvature(const RicciTensor& ric);

struct CurvatureSymmetries {
    bool antisymmetric_first_pair = true;   // R(i,j,k,l) = -R(j,i,k,l)
    bool antisymmetric_second_pair = true;  // R(i,j,k,l) = -R(i,j,l,k)
    bool pair_symmetric = true;             // R(i,j,k,l) = R(k,l,i,j)
    bool first_bianchi = true;              // cyclic sum over (i,j,k) vanishes

    bool all() const { return antisymmetric_first_pair && antisymmetric_second_pair && pair_symmetric && first_bianchi; }
};

CurvatureSymmetries check_symmetries(const CurvatureTensor& R);

/// Failure of Ric = c g with c = Ric(e_1,e_1), kept as raw polynomials.
struct EinsteinDefect {
    struct OffDiagonal {
        std::size_t i, j;
        Polynomial value;  // Ric(e_i,e_j), i<j
    };
    struct DiagonalGap {
        std::size_t i;
        Polynomial value;  // Ric(e_1,e_1) - Ric(e_i,e_i), i>1
    };
    std::vector<OffDiagonal> off_diagonal;
    std::vector<DiagonalGap> diagonal_gaps;

    bool empty() const { return off_diagonal.empty() && diagonal_gaps.empty(); }
    ConstraintSet constraints() const;
};

EinsteinDefect einstein_defect(const RicciTensor& ric);

}  // namespace invgeo
