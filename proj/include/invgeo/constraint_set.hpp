#pragma once

#include "invgeo/polynomial.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace invgeo {

/// Polynomials whose simultaneous vanishing encodes a geometric predicate.
///
/// Members are stored normalized (primitive, positive leading coefficient),
/// deduplicated up to sign and sorted canonically, so two sets describing the
/// same equations compare equal regardless of how they were derived.
class ConstraintSet {
public:
    ConstraintSet() = default;
    ConstraintSet(std::initializer_list<Polynomial> polys);

    /// Adds p; zero polynomials are ignored.
    void insert(const Polynomial& p);
    void merge(const ConstraintSet& other);

    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    const std::vector<Polynomial>& items() const { return items_; }
    bool contains(const Polynomial& p) const;

    /// Same constraints with the parameters replaced; vanishing members drop out.
    ConstraintSet substitute(const std::map<std::string, Polynomial, std::less<>>& values) const;

    std::vector<std::string> to_strings() const;
    /// "{a, b}" rendering; "{}" when empty.
    std::string to_string() const;

    friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;

private:
    std::vector<Polynomial> items_;
};

/// Canonical basis (reduced row echelon form, pivots in parameter order) of
/// the linear span of a set of polynomials of degree at most one. Two such
/// sets cut out the same affine locus iff their reductions are equal.
/// Throws if a member is nonlinear.
ConstraintSet linear_reduce(const ConstraintSet& constraints);

}  // namespace invgeo
