#pragma once

#include "invgeo/lie_algebra.hpp"
#include "invgeo/riemannian.hpp"

#include <map>
#include <optional>
#include <string_view>
#include <utility>

namespace invgeo {

/// Orthogonal splitting of the frame into vertical and horizontal parts.
struct DistributionSplit {
    std::vector<std::size_t> vertical;
    std::vector<std::size_t> horizontal;

    /// Vertical must be nonempty and proper; horizontal is the complement.
    static DistributionSplit from_vertical(std::size_t dim, std::vector<std::size_t> vertical);
    /// Uses the algebra's declared vertical set; throws if there is none.
    static DistributionSplit of(const LieAlgebraSpec& g);
};

enum class Distribution { vertical, horizontal };

/// B(a,b) = 1/2 P(nabla_a b + nabla_b a) for a, b in one distribution, P
/// being the projection onto the other one.
struct SecondFundamentalForm {
    Distribution which;
    std::map<std::pair<std::size_t, std::size_t>, Vector> values;  // keys (a,b) with a <= b

    const Vector& operator()(std::size_t a, std::size_t b) const;
};

SecondFundamentalForm second_fundamental_form(const LieAlgebraSpec& g, const ConnectionTable& conn,
                                              const DistributionSplit& split, Distribution which);

struct Conformality {
    ConstraintSet constraints;
    /// V with B^H = g (x) V; set only when the constraints are empty.
    std::optional<Vector> mean_vector;
};

Conformality conformality(const LieAlgebraSpec& g, const ConnectionTable& conn, const DistributionSplit& split);

enum class FoliationPredicate { conformal, riemannian, minimal, totally_geodesic, horizontal_integrable };

FoliationPredicate parse_foliation_predicate(std::string_view name);
std::string_view to_string(FoliationPredicate p);
inline constexpr FoliationPredicate kFoliationPredicates[] = {
    FoliationPredicate::conformal, FoliationPredicate::riemannian, FoliationPredicate::minimal,
    FoliationPredicate::totally_geodesic, FoliationPredicate::horizontal_integrable};

/// Constraint set whose vanishing is equivalent to the predicate; empty when
/// it holds for every parameter value.
ConstraintSet predicate(const LieAlgebraSpec& g, const ConnectionTable& conn, const DistributionSplit& split,
                        FoliationPredicate which);

}  // namespace invgeo
