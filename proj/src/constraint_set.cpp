#include "invgeo/constraint_set.hpp"

#include <algorithm>

namespace invgeo {

ConstraintSet::ConstraintSet(std::initializer_list<Polynomial> polys) {
    for (const auto& p : polys) insert(p);
}

void ConstraintSet::insert(const Polynomial& p) {
    if (p.is_zero()) return;
    Polynomial n = normalize_constraint(p);
    auto it = std::lower_bound(items_.begin(), items_.end(), n,
                               [](const Polynomial& a, const Polynomial& b) { return canonical_compare(a, b) > 0; });
    if (it != items_.end() && *it == n) return;
    items_.insert(it, std::move(n));
}

void ConstraintSet::merge(const ConstraintSet& other) {
    for (const auto& p : other.items_) insert(p);
}

bool ConstraintSet::contains(const Polynomial& p) const {
    if (p.is_zero()) return false;
    const Polynomial n = normalize_constraint(p);
    return std::find(items_.begin(), items_.end(), n) != items_.end();
}

ConstraintSet ConstraintSet::substitute(const std::map<std::string, Polynomial, std::less<>>& values) const {
    ConstraintSet out;
    for (const auto& p : items_) out.insert(p.substitute(values));
    return out;
}

std::vector<std::string> ConstraintSet::to_strings() const {
    std::vector<std::string> out;
    out.reserve(items_.size());
    for (const auto& p : items_) out.push_back(p.to_string());
    return out;
}

std::string ConstraintSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out += ", ";
        out += items_[i].to_string();
    }
    return out + "}";
}

}  // namespace invgeo

namespace invgeo {

ConstraintSet linear_reduce(const ConstraintSet& constraints) {
    if (constraints.empty()) return {};
    ParameterTablePtr table;
    for (const auto& p : constraints) {
        if (p.degree() > 1) throw Error("linear_reduce needs constraints of degree at most one, got " + p.to_string());
        table = common_table(table, p.table());
    }
    const std::size_t vars = table ? table->size() : 0;
    // Columns 0..vars-1 are the parameters, column vars the constant term.
    std::vector<std::vector<Rational>> rows;
    for (const auto& p : constraints) {
        std::vector<Rational> row(vars + 1, Rational(0));
        for (const auto& [m, c] : p.terms()) row[m.is_constant() ? vars : m.factors().front().first] = c;
        rows.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col <= vars && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const Rational lead = rows[rank][col];
        for (auto& x : rows[rank]) x /= lead;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const Rational factor = rows[r][col];
            for (std::size_t c = 0; c <= vars; ++c) rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    ConstraintSet out;
    for (std::size_t r = 0; r < rank; ++r) {
        Polynomial p(table, rows[r][vars]);
        for (std::size_t v = 0; v < vars; ++v) {
            if (rows[r][v] != 0) p += Polynomial(table, rows[r][v]) * Polynomial::variable(table, v);
        }
        out.insert(p);
    }
    return out;
}

}  // namespace invgeo
