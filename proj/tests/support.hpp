#pragma once

// Random generators and an independent numeric model of the geometry, used
// to cross-check the symbolic pipeline.

#include "invgeo/lie_algebra.hpp"
#include "invgeo/polynomial.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing {

using invgeo::Rational;

class Gen {
public:
    explicit Gen(std::uint32_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    Rational rational(int span = 5, int max_den = 4) { return Rational(integer(-span, span), integer(1, max_den)); }

    Rational nonzero_rational(int span = 5, int max_den = 4) {
        for (;;) {
            Rational q = rational(span, max_den);
            if (q != 0) return q;
        }
    }

    invgeo::Polynomial polynomial(const invgeo::ParameterTablePtr& table, int terms = 4, int max_exp = 2) {
        invgeo::Polynomial p(table, 0);
        for (int t = 0, n = integer(0, terms); t < n; ++t) {
            invgeo::Polynomial term(table, rational());
            for (std::size_t v = 0; v < table->size(); ++v) {
                if (coin(0.4)) term *= invgeo::Polynomial::variable(table, v).pow(integer(1, max_exp));
            }
            p += term;
        }
        return p;
    }

    invgeo::Assignment assignment(const invgeo::ParameterTable& table) {
        invgeo::Assignment a;
        for (const auto& name : table.names()) a[name] = rational();
        return a;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

/// Antisymmetric random structure constants (not necessarily Jacobi).
invgeo::LieAlgebraSpec random_algebra(Gen& gen, std::size_t dim, const invgeo::ParameterTablePtr& params,
                                      double density = 0.5);

/// Dense rational matrix with the handful of operations the oracle needs.
struct Mat {
    std::size_t n = 0;
    std::vector<Rational> a;

    explicit Mat(std::size_t dim = 0) : n(dim), a(dim * dim, Rational(0)) {}
    static Mat identity(std::size_t dim);

    Rational& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    Mat transpose() const;
    Mat inverse() const;  // Gauss-Jordan; throws if singular
    std::vector<Rational> operator*(const std::vector<Rational>& v) const;
    friend Mat operator*(const Mat& x, const Mat& y);
    friend Mat operator+(Mat x, const Mat& y);
    friend Mat operator-(Mat x, const Mat& y);
    friend Mat operator*(const Rational& s, Mat x);
    friend bool operator==(const Mat&, const Mat&) = default;
};

using Vec = std::vector<Rational>;

/// Numeric Lie algebra with an orthonormal inner product, evaluated from a
/// symbolic one at an assignment. Everything below is built from ad-matrices
/// and matrix products rather than index formulas.
class NumericAlgebra {
public:
    NumericAlgebra(const invgeo::LieAlgebraSpec& g, const invgeo::Assignment& at);
    /// Directly from ad-matrices: ad[i](k, j) = <[e_i, e_j], e_k>.
    explicit NumericAlgebra(std::vector<Mat> ad);

    std::size_t dim() const { return ad_.size(); }
    Vec basis(std::size_t i) const;
    Vec bracket(const Vec& x, const Vec& y) const;
    Mat ad(const Vec& x) const;

    /// nabla_X Y = 1/2 ([X,Y] - ad_X^T Y - ad_Y^T X).
    Vec nabla(const Vec& x, const Vec& y) const;
    /// Matrix of Y -> nabla_X Y.
    Mat nabla_matrix(const Vec& x) const;
    /// R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y] as a matrix.
    Mat curvature(const Vec& x, const Vec& y) const;
    /// R(e_i, e_j), cached.
    const Mat& curvature(std::size_t i, std::size_t j) const { return curvature_basis_[i * dim() + j]; }
    Rational ricci(std::size_t i, std::size_t j) const;
    Vec jacobi(std::size_t i, std::size_t j, std::size_t k) const;

    Vec nijenhuis(const Mat& J, const Vec& v, const Vec& w) const;
    /// (nabla_X J) Y.
    Vec nabla_J(const Mat& J, const Vec& x, const Vec& y) const;
    /// Projection onto `onto` of the symmetrized nabla_X Y.
    Vec second_fundamental(const Vec& x, const Vec& y, const std::vector<std::size_t>& onto) const;

    /// Orthonormal change of frame: new e_i = sum_k Q(k, i) e_k.
    NumericAlgebra rotated(const Mat& Q) const;
    /// Structure constants as an exact LieAlgebraSpec.
    invgeo::LieAlgebraSpec to_spec(const std::vector<std::string>& basis) const;

private:
    void init();

    std::vector<Mat> ad_;
    std::vector<Mat> nabla_basis_;  // nabla_{e_i} as matrices
    std::vector<Mat> curvature_basis_;
};

/// Rational orthogonal matrix by the Cayley transform of a random skew matrix.
Mat random_orthogonal(Gen& gen, std::size_t n);

/// Column-wise matrix of an almost complex structure.
Mat to_mat(const invgeo::Matrix<Rational>& m);

Vec eval(const invgeo::Vector& v, const invgeo::Assignment& at);

/// Compares every reported quantity (connection, curvature tensor, sectional,
/// Ricci, scalar, Einstein defect, Jacobi residual, Nijenhuis tensors,
/// covariant derivative of J, second fundamental forms) against the oracle
/// at each sample. Returns one message per disagreement.
std::vector<std::string> oracle_mismatches(const invgeo::LieAlgebraSpec& g,
                                           const std::vector<invgeo::Assignment>& samples);

}  // namespace testing
