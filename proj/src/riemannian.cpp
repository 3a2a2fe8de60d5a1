#include "invgeo/riemannian.hpp"

namespace invgeo {

Vector ConnectionTable::nabla(std::size_t i, std::size_t j) const {
    Vector v(dim());
    for (std::size_t k = 0; k < dim(); ++k) v[k] = gamma(i, j, k);
    return v;
}

Vector ConnectionTable::nabla(std::size_t i, const Vector& v) const {
    Vector out(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t k = 0; k < dim(); ++k) out[k] += v[j] * gamma(i, j, k);
    }
    return out;
}

ConnectionTable levi_civita(const LieAlgebraSpec& g, const Conventions& conv) {
    const std::size_t n = g.dim();
    const Rational half(1, 2);
    const Rational last = conv.koszul_flip ? Rational(-1) : Rational(1);
    ConnectionTable conn{Tensor3<Polynomial>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                conn.gamma(i, j, k) =
                    half * (g.constant(k, i, j) + g.constant(k, j, i) + last * g.constant(i, j, k));
            }
        }
    }
    return conn;
}

bool is_torsion_free(const LieAlgebraSpec& g, const ConnectionTable& conn) {
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (conn.gamma(i, j, k) - conn.gamma(j, i, k) != g.constant(i, j, k)) return false;
    return true;
}

bool is_metric_compatible(const ConnectionTable& conn) {
    const std::size_t n = conn.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!(conn.gamma(i, j, k) + conn.gamma(i, k, j)).is_zero()) return false;
    return true;
}

CurvatureTensor curvature(const LieAlgebraSpec& g, const ConnectionTable& conn, const Conventions& conv) {
    const std::size_t n = g.dim();
    const auto& G = conn.gamma;
    CurvatureTensor R{Tensor4<Polynomial>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t l = 0; l < n; ++l) {
                    Polynomial sum;
                    for (std::size_t m = 0; m < n; ++m) {
                        sum += G(j, k, m) * G(i, m, l) - G(i, k, m) * G(j, m, l) - g.constant(i, j, m) * G(m, k, l);
                    }
                    R.r(i, j, k, l) = conv.curvature_sign < 0 ? -sum : sum;
                }
            }
        }
    }
    return R;
}

Polynomial sectional(const CurvatureTensor& R, std::size_t i, std::size_t j) {
    if (i == j) throw Error("sectional curvature needs two distinct basis vectors");
    return R(i, j, j, i);
}

RicciTensor ricci(const CurvatureTensor& R) {
    const std::size_t n = R.dim();
    RicciTensor ric(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) ric(i, j) += R(i, k, k, j);
    return ric;
}

bool is_symmetric(const RicciTensor& ric) {
    for (std::size_t i = 0; i < ric.dim(); ++i)
        for (std::size_t j = i + 1; j < ric.dim(); ++j)
            if (ric(i, j) != ric(j, i)) return false;
    return true;
}

Polynomial scalar_curvature(const RicciTensor& ric) {
    Polynomial s;
    for (std::size_t i = 0; i < ric.dim(); ++i) s += ric(i, i);
    return s;
}

CurvatureSymmetries check_symmetries(const CurvatureTensor& R) {
    const std::size_t n = R.dim();
    CurvatureSymmetries out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t l = 0; l < n; ++l) {
                    const auto& v = R(i, j, k, l);
                    if (!(v + R(j, i, k, l)).is_zero()) out.antisymmetric_first_pair = false;
                    if (!(v + R(i, j, l, k)).is_zero()) out.antisymmetric_second_pair = false;
                    if (v != R(k, l, i, j)) out.pair_symmetric = false;
                    if (!(v + R(j, k, i, l) + R(k, i, j, l)).is_zero()) out.first_bianchi = false;
                }
            }
        }
    }
    return out;
}

ConstraintSet EinsteinDefect::constraints() const {
    ConstraintSet out;
    for (const auto& o : off_diagonal) out.insert(o.value);
    for (const auto& d : diagonal_gaps) out.insert(d.value);
    return out;
}

EinsteinDefect einstein_defect(const RicciTensor& ric) {
    EinsteinDefect out;
    const std::size_t n = ric.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!ric(i, j).is_zero()) out.off_diagonal.push_back({i, j, ric(i, j)});
        }
    }
    for (std::size_t i = 1; i < n; ++i) {
        Polynomial gap = ric(0, 0) - ric(i, i);
        if (!gap.is_zero()) out.diagonal_gaps.push_back({i, std::move(gap)});
    }
    return out;
}

}  // namespace invgeo
