#pragma once

#include "invgeo/lie_algebra.hpp"

#include <string_view>

namespace invgeo {

/// Built-in four-dimensional algebras on the frame (X, Y, Z, W) with vertical
/// distribution span{Z, W}.
enum class FamilyId {
    general_s3,       // conformal foliation with minimal leaves, all 14 constants free
    j1_integrable,    // general_s3 with w1 = -2 z2 - z3, w2 = 2 z1 - z4
    both_integrable,  // J1 and J2 both integrable (totally geodesic leaves)
    g7,               // parameters theta1, theta2, z2
    g3,               // parameters alpha, beta, theta2
    abelian4,
};

inline constexpr FamilyId kFamilies[] = {FamilyId::general_s3, FamilyId::j1_integrable, FamilyId::both_integrable,
                                         FamilyId::g7,         FamilyId::g3,            FamilyId::abelian4};

std::string_view to_string(FamilyId id);
FamilyId parse_family(std::string_view name);

LieAlgebraSpec build(FamilyId family);

}  // namespace invgeo
