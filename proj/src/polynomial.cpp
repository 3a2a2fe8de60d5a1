#include "invgeo/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace invgeo {

bool is_identifier(std::string_view text) {
    if (text.empty()) return false;
    auto head = static_cast<unsigned char>(text.front());
    if (!(std::isalpha(head) || head == '_')) return false;
    return std::all_of(text.begin() + 1, text.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return std::isalnum(u) || u == '_';
    });
}

ParameterTable::ParameterTable(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string_view> seen;
    for (const auto& n : names_) {
        if (!is_identifier(n)) throw Error("invalid parameter name '" + n + "'");
        if (!seen.insert(n).second) throw Error("duplicate parameter name '" + n + "'");
    }
}

std::optional<std::size_t> ParameterTable::index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

ParameterTablePtr make_parameter_table(std::vector<std::string> names) {
    return std::make_shared<const ParameterTable>(std::move(names));
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t index, std::uint32_t exponent) {
    Monomial m;
    if (exponent > 0) m.factors_.emplace_back(static_cast<std::uint32_t>(index), exponent);
    return m;
}

std::uint32_t Monomial::degree() const {
    std::uint32_t d = 0;
    for (const auto& [index, e] : factors_) d += e;
    return d;
}

std::uint32_t Monomial::exponent(std::size_t index) const {
    for (const auto& [i, e] : factors_) {
        if (i == index) return e;
    }
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return out;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    // Walk the sparse exponent vectors in index order; the first differing
    // index decides, the larger exponent being the larger monomial.
    auto x = a.factors().begin();
    auto y = b.factors().begin();
    while (x != a.factors().end() && y != b.factors().end()) {
        if (x->first != y->first) return x->first < y->first ? std::strong_ordering::greater : std::strong_ordering::less;
        if (x->second != y->second) return x->second <=> y->second;
        ++x;
        ++y;
    }
    if (x != a.factors().end()) return std::strong_ordering::greater;
    if (y != b.factors().end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Polynomial

ParameterTablePtr common_table(const ParameterTablePtr& a, const ParameterTablePtr& b) {
    if (!a) return b;
    if (!b || a == b || *a == *b) return a;
    throw Error("mismatched parameter tables");
}

Polynomial::Polynomial(Rational constant) {
    if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
}

Polynomial::Polynomial(ParameterTablePtr table, Rational constant) : Polynomial(std::move(constant)) {
    table_ = std::move(table);
}

Polynomial Polynomial::variable(ParameterTablePtr table, std::size_t index) {
    if (!table || index >= table->size()) throw Error("parameter index out of range");
    Polynomial p;
    p.table_ = std::move(table);
    p.terms_.emplace(Monomial::variable(index), Rational(1));
    return p;
}

Polynomial Polynomial::variable(ParameterTablePtr table, std::string_view name) {
    if (!table) throw Error("unknown parameter '" + std::string(name) + "'");
    auto index = table->index_of(name);
    if (!index) throw Error("unknown parameter '" + std::string(name) + "'");
    return variable(std::move(table), *index);
}

Polynomial Polynomial::from_terms(ParameterTablePtr table, TermMap terms) {
    Polynomial p;
    p.table_ = std::move(table);
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second == 0) {
            it = terms.erase(it);
        } else {
            for (const auto& [index, e] : it->first.factors()) {
                if (!p.table_ || index >= p.table_->size()) throw Error("monomial references unknown parameter");
            }
            ++it;
        }
    }
    p.terms_ = std::move(terms);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

std::uint32_t Polynomial::degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

Rational Polynomial::leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    table_ = common_table(table_, other.table_);
    for (const auto& [m, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    return *this += -other;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.table_ = common_table(a.table_, b.table_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            auto [it, inserted] = out.terms_.try_emplace(ma * mb, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_ != b.terms_) return false;
    if (a.is_constant() || !a.table_ || !b.table_) return true;
    return a.table_ == b.table_ || *a.table_ == *b.table_;
}

Polynomial Polynomial::pow(std::uint32_t exponent) const {
    Polynomial result(table_, Rational(1));
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

Rational Polynomial::eval(const Assignment& assignment) const {
    if (is_constant()) return leading_coefficient();
    // Resolve each used parameter once.
    std::vector<const Rational*> value(table_->size(), nullptr);
    for (auto index : variables()) {
        auto it = assignment.find(table_->name(index));
        if (it == assignment.end()) throw Error("missing parameter '" + table_->name(index) + "' in assignment");
        value[index] = &it->second;
    }
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& [index, e] : m.factors()) {
            for (std::uint32_t n = 0; n < e; ++n) term *= *value[index];
        }
        total += term;
    }
    return total;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial, std::less<>>& values) const {
    if (values.empty() || is_constant()) return *this;
    std::vector<const Polynomial*> replacement(table_->size(), nullptr);
    for (const auto& [name, value] : values) {
        auto index = table_->index_of(name);
        if (!index) throw Error("unknown parameter '" + name + "' in substitution");
        common_table(table_, value.table());
        replacement[*index] = &value;
    }
    Polynomial out(table_, Rational(0));
    for (const auto& [m, c] : terms_) {
        Polynomial term(table_, c);
        Monomial kept;
        for (const auto& [index, e] : m.factors()) {
            if (replacement[index]) {
                term *= replacement[index]->pow(e);
            } else {
                kept = kept * Monomial::variable(index, e);
            }
        }
        out += term * Polynomial::from_terms(table_, {{kept, Rational(1)}});
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (m.is_constant() || magnitude != 1) {
            out << invgeo::to_string(magnitude);
            need_star = true;
        }
        for (const auto& [index, e] : m.factors()) {
            if (need_star) out << '*';
            out << table_->name(index);
            if (e > 1) out << '^' << e;
            need_star = true;
        }
    }
    return out.str();
}

std::vector<std::size_t> Polynomial::variables() const {
    std::set<std::size_t> seen;
    for (const auto& [m, c] : terms_) {
        for (const auto& [index, e] : m.factors()) seen.insert(index);
    }
    return {seen.begin(), seen.end()};
}

std::strong_ordering canonical_compare(const Polynomial& a, const Polynomial& b) {
    auto x = a.terms().begin();
    auto y = b.terms().begin();
    for (; x != a.terms().end() && y != b.terms().end(); ++x, ++y) {
        if (auto c = grlex_compare(x->first, y->first); c != 0) return c;
        if (x->second != y->second) return x->second < y->second ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (x != a.terms().end()) return std::strong_ordering::greater;
    if (y != b.terms().end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

Polynomial normalize_constraint(const Polynomial& p) {
    if (p.is_zero()) return p;
    Integer den_lcm = 1;
    Integer num_gcd = 0;
    for (const auto& [m, c] : p.terms()) {
        den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
        num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::numerator(c));
    }
    Rational scale(den_lcm, num_gcd);  // gcd is of numerators, which stay coprime to den_lcm after scaling
    if (p.leading_coefficient() < 0) scale = -scale;
    return p * scale;
}

}  // namespace invgeo
