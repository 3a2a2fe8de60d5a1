#include "invgeo/lie_algebra.hpp"

#include <algorithm>
#include <set>

namespace invgeo {

Vector Vector::basis(std::size_t dim, std::size_t index) {
    Vector v(dim);
    v[index] = Polynomial(1);
    return v;
}

bool Vector::is_zero() const {
    return std::all_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Vector Vector::operator-() const {
    Vector out = *this;
    for (auto& c : out.components_) c = -c;
    return out;
}

Vector& Vector::operator+=(const Vector& other) {
    if (other.dim() != dim()) throw Error("vector dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) components_[i] += other.components_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& other) {
    if (other.dim() != dim()) throw Error("vector dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) components_[i] -= other.components_[i];
    return *this;
}

Vector& Vector::operator*=(const Polynomial& scalar) {
    for (auto& c : components_) c *= scalar;
    return *this;
}

std::string format_vector(const Vector& v, const std::vector<std::string>& basis) {
    std::string out;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        const Polynomial& c = v[i];
        if (c.is_zero()) continue;
        std::string coeff;
        bool negative = false;
        if (c.terms().size() == 1) {
            const auto& [m, q] = *c.terms().begin();
            negative = q < 0;
            Polynomial magnitude = negative ? -c : c;
            if (!(m.is_constant() && magnitude.leading_coefficient() == 1)) coeff = magnitude.to_string() + "*";
        } else {
            coeff = "(" + c.to_string() + ")*";
        }
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        out += coeff + basis.at(i);
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

LieAlgebraSpec::LieAlgebraSpec(std::vector<std::string> basis, ParameterTablePtr params, Tensor3<Polynomial> structure,
                               std::optional<std::vector<std::size_t>> vertical)
    : basis_(std::move(basis)), params_(std::move(params)), structure_(std::move(structure)) {
    if (basis_.empty()) throw Error("Lie algebra must have positive dimension");
    if (structure_.dim() != basis_.size()) throw Error("structure tensor dimension does not match basis");
    if (!params_) params_ = make_parameter_table({});
    std::set<std::string_view> names;
    for (const auto& b : basis_) {
        if (!is_identifier(b)) throw Error("invalid basis name '" + b + "'");
        if (!names.insert(b).second) throw Error("duplicate basis name '" + b + "'");
        if (params_->index_of(b)) throw Error("basis name '" + b + "' collides with a parameter");
    }
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                common_table(params_, structure_(i, j, k).table());
                if (!(structure_(i, j, k) + structure_(j, i, k)).is_zero())
                    throw Error("structure constants are not antisymmetric at [" + basis_[i] + ", " + basis_[j] + "]");
            }
        }
    }
    *this = with_vertical(std::move(vertical));
}

std::optional<std::size_t> LieAlgebraSpec::index_of(std::string_view name) const {
    auto it = std::find(basis_.begin(), basis_.end(), name);
    if (it == basis_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - basis_.begin());
}

Vector LieAlgebraSpec::bracket_of(std::size_t i, std::size_t j) const {
    Vector v(dim());
    for (std::size_t k = 0; k < dim(); ++k) v[k] = structure_(i, j, k);
    return v;
}

LieAlgebraSpec LieAlgebraSpec::with_vertical(std::optional<std::vector<std::size_t>> vertical) const {
    LieAlgebraSpec out = *this;
    if (vertical) {
        std::sort(vertical->begin(), vertical->end());
        if (std::adjacent_find(vertical->begin(), vertical->end()) != vertical->end())
            throw Error("vertical set lists a basis vector twice");
        for (auto index : *vertical) {
            if (index >= dim()) throw Error("vertical index out of range");
        }
    }
    out.vertical_ = std::move(vertical);
    return out;
}

LieAlgebraSpec LieAlgebraSpec::substitute(const std::map<std::string, Polynomial, std::less<>>& values) const {
    LieAlgebraSpec out = *this;
    out.structure_ = structure_.map([&](const Polynomial& p) { return p.substitute(values); });
    return out;
}

LieAlgebraSpec LieAlgebraSpec::substitute(const Assignment& values) const {
    std::map<std::string, Polynomial, std::less<>> polys;
    for (const auto& [name, q] : values) polys.emplace(name, Polynomial(params_, q));
    return substitute(polys);
}

// ---------------------------------------------------------------------------

LieAlgebraBuilder::LieAlgebraBuilder(std::vector<std::string> basis, ParameterTablePtr params)
    : basis_(std::move(basis)),
      params_(params ? std::move(params) : make_parameter_table({})),
      structure_(basis_.size(), Polynomial(params_, 0)),
      assigned_(basis_.size() * basis_.size(), false) {}

std::size_t LieAlgebraBuilder::index(std::string_view basis_name) const {
    auto it = std::find(basis_.begin(), basis_.end(), basis_name);
    if (it == basis_.end()) throw Error("unknown basis vector '" + std::string(basis_name) + "'");
    return static_cast<std::size_t>(it - basis_.begin());
}

LieAlgebraBuilder& LieAlgebraBuilder::set(std::size_t i, std::size_t j, const Vector& value) {
    const std::size_t n = basis_.size();
    if (i == j) throw Error("bracket [" + basis_[i] + ", " + basis_[i] + "] is identically zero and may not be set");
    if (value.dim() != n) throw Error("bracket value has wrong dimension");
    if (assigned_[i * n + j]) throw Error("bracket [" + basis_[i] + ", " + basis_[j] + "] set twice");
    assigned_[i * n + j] = assigned_[j * n + i] = true;
    for (std::size_t k = 0; k < n; ++k) {
        structure_(i, j, k) = value[k];
        structure_(j, i, k) = -value[k];
    }
    return *this;
}

LieAlgebraBuilder& LieAlgebraBuilder::set(std::string_view a, std::string_view b, const Vector& value) {
    return set(index(a), index(b), value);
}

LieAlgebraBuilder& LieAlgebraBuilder::set(std::string_view a, std::string_view b,
                                          std::initializer_list<std::pair<std::string_view, Polynomial>> terms) {
    Vector v(basis_.size());
    for (const auto& [name, coeff] : terms) v[index(name)] += coeff;
    return set(a, b, v);
}

LieAlgebraBuilder& LieAlgebraBuilder::vertical(std::initializer_list<std::string_view> names) {
    std::vector<std::size_t> indices;
    for (auto name : names) indices.push_back(index(name));
    vertical_ = std::move(indices);
    return *this;
}

LieAlgebraSpec LieAlgebraBuilder::build() const {
    return LieAlgebraSpec(basis_, params_, structure_, vertical_);
}

// ---------------------------------------------------------------------------

Vector bracket(const LieAlgebraSpec& g, const Vector& v, const Vector& w) {
    const std::size_t n = g.dim();
    if (v.dim() != n || w.dim() != n) throw Error("vector dimension mismatch in bracket");
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || w[j].is_zero()) continue;
            const Polynomial vw = v[i] * w[j];
            for (std::size_t k = 0; k < n; ++k) {
                if (!g.constant(i, j, k).is_zero()) out[k] += vw * g.constant(i, j, k);
            }
        }
    }
    return out;
}

std::vector<JacobiResidual> jacobi_residual(const LieAlgebraSpec& g) {
    const std::size_t n = g.dim();
    std::vector<JacobiResidual> out;
    auto e = [n](std::size_t i) { return Vector::basis(n, i); };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector sum = bracket(g, g.bracket_of(i, j), e(k)) + bracket(g, g.bracket_of(j, k), e(i)) +
                             bracket(g, g.bracket_of(k, i), e(j));
                if (!sum.is_zero()) out.push_back({{i, j, k}, std::move(sum)});
            }
        }
    }
    return out;
}

ConstraintSet is_involutive(const LieAlgebraSpec& g, const std::vector<std::size_t>& indices) {
    std::vector<bool> inside(g.dim(), false);
    for (auto i : indices) {
        if (i >= g.dim()) throw Error("distribution index out of range");
        inside[i] = true;
    }
    ConstraintSet out;
    for (std::size_t a = 0; a < indices.size(); ++a) {
        for (std::size_t b = a + 1; b < indices.size(); ++b) {
            for (std::size_t k = 0; k < g.dim(); ++k) {
                if (!inside[k]) out.insert(g.constant(indices[a], indices[b], k));
            }
        }
    }
    return out;
}

}  // namespace invgeo
