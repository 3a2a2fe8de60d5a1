#pragma once

#include "invgeo/conventions.hpp"
#include "invgeo/report.hpp"

#include <string>
#include <vector>

namespace invgeo {

/// One published identity: where it comes from and its expected canonical form.
struct GoldenIdentity {
    std::string name;      // e.g. "g7.sectional.Z^W"
    std::string origin;    // human-readable source of the expected value
    std::string expected;  // canonical string
};

/// Every identity checked by golden_report, with expected values.
std::vector<GoldenIdentity> golden_identities();

/// Recomputes every golden identity on the built-in families and records
/// mismatches in `failures`. The "golden" section maps each identity to its
/// computed value. Deterministic.
GeometryReport golden_report(const Conventions& conventions = {});

}  // namespace invgeo
