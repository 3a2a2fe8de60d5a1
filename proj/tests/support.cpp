#include "support.hpp"

#include "invgeo/foliation.hpp"
#include "invgeo/hermitian.hpp"
#include "invgeo/riemannian.hpp"
#include "invgeo/tensor.hpp"

#include <optional>
#include <tuple>

#include <stdexcept>

namespace testing {

using invgeo::LieAlgebraSpec;
using invgeo::Polynomial;

LieAlgebraSpec random_algebra(Gen& gen, std::size_t dim, const invgeo::ParameterTablePtr& params, double density) {
    std::vector<std::string> basis;
    for (std::size_t i = 0; i < dim; ++i) basis.push_back("e" + std::to_string(i + 1));
    invgeo::Tensor3<Polynomial> c(dim, Polynomial(params, 0));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            for (std::size_t k = 0; k < dim; ++k) {
                if (!gen.coin(density)) continue;
                Polynomial p = params->size() > 0 && gen.coin() ? gen.polynomial(params, 2, 1)
                                                                : Polynomial(params, gen.rational());
                c(i, j, k) = p;
                c(j, i, k) = -p;
            }
        }
    }
    return LieAlgebraSpec(basis, params, c);
}

Mat Mat::identity(std::size_t dim) {
    Mat m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::transpose() const {
    Mat t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat Mat::inverse() const {
    Mat m = *this;
    Mat inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == 0) ++pivot;
        if (pivot == n) throw std::runtime_error("singular matrix");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(m(col, j), m(pivot, j));
            std::swap(inv(col, j), inv(pivot, j));
        }
        const Rational p = m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m(r, col) == 0) continue;
            const Rational f = m(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

Vec Mat::operator*(const Vec& v) const {
    Vec out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

Mat operator*(const Mat& x, const Mat& y) {
    Mat out(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t k = 0; k < x.n; ++k) {
            if (x(i, k) == 0) continue;
            for (std::size_t j = 0; j < x.n; ++j) out(i, j) += x(i, k) * y(k, j);
        }
    return out;
}

Mat operator+(Mat x, const Mat& y) {
    for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
    return x;
}

Mat operator-(Mat x, const Mat& y) {
    for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] -= y.a[i];
    return x;
}

Mat operator*(const Rational& s, Mat x) {
    for (auto& v : x.a) v *= s;
    return x;
}

static Vec zeros(std::size_t n) {
    return Vec(n, Rational(0));
}

static Vec add(Vec x, const Vec& y, const Rational& s = 1) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += s * y[i];
    return x;
}

NumericAlgebra::NumericAlgebra(const LieAlgebraSpec& g, const invgeo::Assignment& at) {
    const std::size_t n = g.dim();
    ad_.assign(n, Mat(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) ad_[i](k, j) = g.constant(i, j, k).eval(at);
    init();
}

NumericAlgebra::NumericAlgebra(std::vector<Mat> ad) : ad_(std::move(ad)) {
    init();
}

void NumericAlgebra::init() {
    nabla_basis_.clear();
    for (std::size_t i = 0; i < dim(); ++i) {
        Mat m(dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            const Vec col = nabla(basis(i), basis(j));
            for (std::size_t k = 0; k < dim(); ++k) m(k, j) = col[k];
        }
        nabla_basis_.push_back(std::move(m));
    }
    curvature_basis_.assign(dim() * dim(), Mat(dim()));
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j) {
            Mat r = nabla_basis_[i] * nabla_basis_[j] - nabla_basis_[j] * nabla_basis_[i];
            for (std::size_t m = 0; m < dim(); ++m)
                if (ad_[i](m, j) != 0) r = r - ad_[i](m, j) * nabla_basis_[m];
            curvature_basis_[j * dim() + i] = Rational(-1) * r;
            curvature_basis_[i * dim() + j] = std::move(r);
        }
}

Vec NumericAlgebra::basis(std::size_t i) const {
    Vec v(dim(), Rational(0));
    v[i] = 1;
    return v;
}

Mat NumericAlgebra::ad(const Vec& x) const {
    Mat m(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (x[i] != 0) m = m + x[i] * ad_[i];
    return m;
}

Vec NumericAlgebra::bracket(const Vec& x, const Vec& y) const {
    Vec out = zeros(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (y[j] == 0) continue;
            const Rational xy = x[i] * y[j];
            for (std::size_t k = 0; k < dim(); ++k)
                if (ad_[i](k, j) != 0) out[k] += xy * ad_[i](k, j);
        }
    }
    return out;
}

// ad_X^T Y, without forming ad_X.
static Vec ad_transpose(const std::vector<Mat>& ad, const Vec& x, const Vec& y) {
    const std::size_t n = x.size();
    Vec out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t l = 0; l < n; ++l) {
            if (y[l] == 0) continue;
            const Rational xy = x[i] * y[l];
            for (std::size_t k = 0; k < n; ++k)
                if (ad[i](l, k) != 0) out[k] += xy * ad[i](l, k);
        }
    }
    return out;
}

Vec NumericAlgebra::nabla(const Vec& x, const Vec& y) const {
    Vec v = bracket(x, y);
    v = add(v, ad_transpose(ad_, x, y), -1);
    v = add(v, ad_transpose(ad_, y, x), -1);
    for (auto& c : v) c /= 2;
    return v;
}

Mat NumericAlgebra::nabla_matrix(const Vec& x) const {
    // nabla_X Y is linear in X.
    Mat m(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (x[i] != 0) m = m + x[i] * nabla_basis_[i];
    return m;
}

Mat NumericAlgebra::curvature(const Vec& x, const Vec& y) const {
    const Mat nx = nabla_matrix(x), ny = nabla_matrix(y);
    return nx * ny - ny * nx - nabla_matrix(bracket(x, y));
}

Rational NumericAlgebra::ricci(std::size_t i, std::size_t j) const {
    // Ric(X,Y) = trace(Z -> R(Z,X)Y)
    Rational total = 0;
    for (std::size_t k = 0; k < dim(); ++k) {
        total += curvature(k, i)(k, j);
    }
    return total;
}

Vec NumericAlgebra::jacobi(std::size_t i, std::size_t j, std::size_t k) const {
    const Vec a = basis(i), b = basis(j), c = basis(k);
    Vec v = bracket(bracket(a, b), c);
    v = add(v, bracket(bracket(b, c), a));
    return add(v, bracket(bracket(c, a), b));
}

Vec NumericAlgebra::nijenhuis(const Mat& J, const Vec& v, const Vec& w) const {
    const Vec Jv = J * v, Jw = J * w;
    Vec out = bracket(Jv, Jw);
    out = add(out, J * bracket(Jv, w), -1);
    out = add(out, J * bracket(v, Jw), -1);
    return add(out, bracket(v, w), -1);
}

Vec NumericAlgebra::nabla_J(const Mat& J, const Vec& x, const Vec& y) const {
    const Mat nx = nabla_matrix(x);
    return (nx * J - J * nx) * y;
}

Vec NumericAlgebra::second_fundamental(const Vec& x, const Vec& y, const std::vector<std::size_t>& onto) const {
    const Vec s = add(nabla(x, y), nabla(y, x));
    Vec out(dim(), Rational(0));
    for (auto k : onto) out[k] = s[k] / 2;
    return out;
}

NumericAlgebra NumericAlgebra::rotated(const Mat& Q) const {
    // ad'_i = Q^T ad(Q e_i) Q for the new frame.
    const Mat Qt = Q.transpose();
    std::vector<Mat> ad(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        Vec qi(dim());
        for (std::size_t k = 0; k < dim(); ++k) qi[k] = Q(k, i);
        ad[i] = Qt * this->ad(qi) * Q;
    }
    return NumericAlgebra(std::move(ad));
}

LieAlgebraSpec NumericAlgebra::to_spec(const std::vector<std::string>& basis) const {
    const std::size_t n = dim();
    invgeo::Tensor3<Polynomial> c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c(i, j, k) = Polynomial(ad_[i](k, j));
    return LieAlgebraSpec(basis, invgeo::make_parameter_table({}), c);
}

Mat random_orthogonal(Gen& gen, std::size_t n) {
    Mat S(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            S(i, j) = gen.rational(3, 3);
            S(j, i) = -S(i, j);
        }
    const Mat I = Mat::identity(n);
    return (I - S) * (I + S).inverse();
}

Mat to_mat(const invgeo::Matrix<Rational>& m) {
    Mat out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j);
    return out;
}

Vec eval(const invgeo::Vector& v, const invgeo::Assignment& at) {
    Vec out;
    for (const auto& c : v.components()) out.push_back(c.eval(at));
    return out;
}

namespace {

Rational component(const Vec& v, std::size_t k) {
    return v[k];
}

std::string describe(const invgeo::Assignment& at) {
    std::string out = "mismatch at {";
    for (const auto& [name, q] : at) out += (out.size() > 13 ? ", " : "") + name + "=" + invgeo::to_string(q);
    return out + "}";
}

using namespace invgeo;

// Every quantity the report prints, computed once symbolically and then
// evaluated at sample points against the oracle.
struct Symbolic {
    const LieAlgebraSpec& g;
    ConnectionTable conn;
    CurvatureTensor R;
    RicciTensor ric;
    EinsteinDefect defect;
    std::vector<JacobiResidual> residual;
    std::vector<std::tuple<Mat, NijenhuisTensor, KahlerDefect>> hermitian;
    std::optional<DistributionSplit> split;
    std::optional<SecondFundamentalForm> bv, bh;

    explicit Symbolic(const LieAlgebraSpec& algebra)
        : g(algebra),
          conn(levi_civita(g)),
          R(curvature(g, conn)),
          ric(ricci(R)),
          defect(einstein_defect(ric)),
          residual(jacobi_residual(g)) {
        if (!g.vertical() || g.dim() != 4 || g.vertical()->size() != 2) return;
        const auto [J1, J2] = canonical_structures(g);
        for (const auto* J : {&J1, &J2})
            hermitian.emplace_back(testing::to_mat(J->matrix()), nijenhuis(g, *J), covariant_J(g, conn, *J));
        split = DistributionSplit::of(g);
        bv = second_fundamental_form(g, conn, *split, Distribution::vertical);
        bh = second_fundamental_form(g, conn, *split, Distribution::horizontal);
    }

    void compare(const Assignment& at, std::vector<std::string>& mismatches) const {
        auto expect = [&](bool ok) {
            if (!ok) mismatches.push_back(describe(at));
        };
        const std::size_t n = g.dim();
        const NumericAlgebra num(g, at);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                expect(testing::eval(conn.nabla(i, j), at) == num.nabla(num.basis(i), num.basis(j)));
                const Mat& Rij = num.curvature(i, j);
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) expect(R(i, j, k, l).eval(at) == Rij(l, k));
                if (i != j) expect(sectional(R, i, j).eval(at) == component(Rij * num.basis(j), i));
                expect(ric(i, j).eval(at) == num.ricci(i, j));
            }

        Rational scalar = 0;
        for (std::size_t i = 0; i < n; ++i) scalar += num.ricci(i, i);
        expect(scalar_curvature(ric).eval(at) == scalar);

        for (const auto& off : defect.off_diagonal) expect(off.value.eval(at) == num.ricci(off.i, off.j));
        for (const auto& gap : defect.diagonal_gaps)
            expect(gap.value.eval(at) == num.ricci(0, 0) - num.ricci(gap.i, gap.i));

        std::size_t r = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    Vec symbolic = zeros(n);
                    if (r < residual.size() && residual[r].triple == std::array<std::size_t, 3>{i, j, k})
                        symbolic = testing::eval(residual[r++].value, at);
                    expect(symbolic == num.jacobi(i, j, k));
                }

        for (const auto& [Jm, N, nablaJ] : hermitian)
            for (std::size_t i = 0; i < n; ++i) {
                const Mat nabla_i = num.nabla_matrix(num.basis(i));
                const Mat derivative = nabla_i * Jm - Jm * nabla_i;  // (nabla_{e_i} J) as a matrix
                for (std::size_t j = 0; j < n; ++j) {
                    expect(testing::eval(N(i, j), at) == num.nijenhuis(Jm, num.basis(i), num.basis(j)));
                    expect(testing::eval(nablaJ(i, j), at) == derivative * num.basis(j));
                }
            }

        if (!split) return;
        for (auto a : split->vertical)
            for (auto b : split->vertical)
                expect(testing::eval((*bv)(a, b), at) ==
                      num.second_fundamental(num.basis(a), num.basis(b), split->horizontal));
        for (auto a : split->horizontal)
            for (auto b : split->horizontal)
                expect(testing::eval((*bh)(a, b), at) ==
                      num.second_fundamental(num.basis(a), num.basis(b), split->vertical));
    }
};

}  // namespace

std::vector<std::string> oracle_mismatches(const invgeo::LieAlgebraSpec& g, const std::vector<invgeo::Assignment>& samples) {
    std::vector<std::string> out;
    const Symbolic symbolic(g);
    for (const auto& at : samples) symbolic.compare(at, out);
    return out;
}

}  // namespace testing
