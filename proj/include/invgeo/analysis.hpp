#pragma once

#include "invgeo/conventions.hpp"
#include "invgeo/lie_algebra.hpp"
#include "invgeo/report.hpp"

#include <optional>
#include <string>

namespace invgeo {

/// Groups of report sections.
enum class Topic : unsigned {
    checks = 1U << 0,
    connection = 1U << 1,
    curvature = 1U << 2,
    einstein = 1U << 3,
    hermitian = 1U << 4,
    foliation = 1U << 5,
};

constexpr unsigned operator|(Topic a, Topic b) { return static_cast<unsigned>(a) | static_cast<unsigned>(b); }
constexpr unsigned operator|(unsigned a, Topic b) { return a | static_cast<unsigned>(b); }
inline constexpr unsigned kAllTopics = Topic::checks | Topic::connection | Topic::curvature | Topic::einstein |
                                       Topic::hermitian | Topic::foliation;

struct AnalysisOptions {
    unsigned topics = kAllTopics;
    /// Restricts the Hermitian sections to "J1" or "J2".
    std::optional<std::string> structure;
    Conventions conventions;
};

/// Key of the frame pair (i, j): names joined by `sep`.
std::string pair_key(const LieAlgebraSpec& g, std::size_t i, std::size_t j, std::string_view sep);

/// Runs the requested computations and collects them into a report.
/// Hermitian and foliation topics need a declared split; without one the
/// report carries a note instead (or throws, when that topic is the only
/// one requested).
GeometryReport analyze(const LieAlgebraSpec& g, const AnalysisOptions& options, std::string source);

}  // namespace invgeo
