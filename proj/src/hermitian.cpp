#include "invgeo/hermitian.hpp"

#include <algorithm>

namespace invgeo {

AlmostComplexStructure::AlmostComplexStructure(std::string name, Matrix<Rational> matrix)
    : name_(std::move(name)), matrix_(std::move(matrix)) {
    const std::size_t n = matrix_.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational square = 0;
            Rational gram = 0;
            for (std::size_t k = 0; k < n; ++k) {
                square += matrix_(i, k) * matrix_(k, j);
                gram += matrix_(k, i) * matrix_(k, j);
            }
            const Rational identity = i == j ? 1 : 0;
            if (square != -identity) throw Error("almost complex structure " + name_ + " does not square to -I");
            if (gram != identity) throw Error("almost complex structure " + name_ + " is not orthogonal");
        }
    }
}

Vector AlmostComplexStructure::apply(const Vector& v) const {
    const std::size_t n = dim();
    if (v.dim() != n) throw Error("vector dimension mismatch");
    Vector out(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k) {
            if (matrix_(k, j) != 0) out[k] += matrix_(k, j) * v[j];
        }
    }
    return out;
}

Vector AlmostComplexStructure::image(std::size_t j) const {
    return apply(Vector::basis(dim(), j));
}

std::pair<AlmostComplexStructure, AlmostComplexStructure> canonical_structures(const LieAlgebraSpec& g) {
    if (g.dim() != 4) throw Error("adapted Hermitian structures need a 4-dimensional algebra");
    if (!g.vertical() || g.vertical()->size() != 2)
        throw Error("adapted Hermitian structures need a vertical/horizontal split of sizes (2,2)");
    const auto& vert = *g.vertical();
    std::vector<std::size_t> horiz;
    for (std::size_t i = 0; i < 4; ++i) {
        if (std::find(vert.begin(), vert.end(), i) == vert.end()) horiz.push_back(i);
    }
    const std::size_t h0 = horiz[0], h1 = horiz[1], v0 = vert[0], v1 = vert[1];
    Matrix<Rational> j1(4), j2(4);
    // column j holds J e_j
    j1(h1, h0) = 1;
    j1(h0, h1) = -1;
    j1(v1, v0) = 1;
    j1(v0, v1) = -1;
    j2(h1, h0) = 1;
    j2(h0, h1) = -1;
    j2(v0, v1) = 1;
    j2(v1, v0) = -1;
    return {AlmostComplexStructure("J1", std::move(j1)), AlmostComplexStructure("J2", std::move(j2))};
}

NijenhuisTensor nijenhuis(const LieAlgebraSpec& g, const AlmostComplexStructure& J, const Conventions& conv) {
    const std::size_t n = g.dim();
    if (J.dim() != n) throw Error("almost complex structure has wrong dimension");
    NijenhuisTensor N{Matrix<Vector>(n, Vector(n))};
    const Polynomial last = conv.nijenhuis_flip ? Polynomial(1) : Polynomial(-1);
    const Polynomial scale = conv.nijenhuis_quarter ? Polynomial(Rational(1, 4)) : Polynomial(1);
    for (std::size_t i = 0; i < n; ++i) {
        const Vector ei = Vector::basis(n, i);
        const Vector Jei = J.image(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const Vector ej = Vector::basis(n, j);
            const Vector Jej = J.image(j);
            Vector value = bracket(g, Jei, Jej) - J.apply(bracket(g, Jei, ej)) - J.apply(bracket(g, ei, Jej)) +
                           last * g.bracket_of(i, j);
            N.values(i, j) = scale * value;
        }
    }
    return N;
}

ConstraintSet integrability_constraints(const NijenhuisTensor& N) {
    ConstraintSet out;
    for (std::size_t i = 0; i < N.dim(); ++i)
        for (std::size_t j = i + 1; j < N.dim(); ++j)
            for (const auto& c : N(i, j).components()) out.insert(c);
    return out;
}

ConstraintSet integrability_constraints(const LieAlgebraSpec& g, const AlmostComplexStructure& J,
                                        const Conventions& conv) {
    return integrability_constraints(nijenhuis(g, J, conv));
}

KahlerDefect covariant_J(const LieAlgebraSpec& g, const ConnectionTable& conn, const AlmostComplexStructure& J) {
    const std::size_t n = g.dim();
    if (J.dim() != n || conn.dim() != n) throw Error("dimension mismatch in covariant derivative of J");
    KahlerDefect out{Matrix<Vector>(n, Vector(n)), {}};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Vector value = conn.nabla(i, J.image(j)) - J.apply(conn.nabla(i, j));
            for (const auto& c : value.components()) out.constraints.insert(c);
            out.values(i, j) = std::move(value);
        }
    }
    return out;
}

}  // namespace invgeo
