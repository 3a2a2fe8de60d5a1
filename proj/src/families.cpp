#include "invgeo/families.hpp"

namespace invgeo {

namespace {

const std::vector<std::string> kFrame = {"X", "Y", "Z", "W"};

LieAlgebraSpec general(bool j1_integrable) {
    std::vector<std::string> names = {"lambda", "alpha", "beta", "a", "b", "r", "z1", "z2", "z3", "z4"};
    if (!j1_integrable) {
        names.push_back("w1");
        names.push_back("w2");
    }
    names.push_back("theta1");
    names.push_back("theta2");
    LieAlgebraBuilder g(kFrame, make_parameter_table(std::move(names)));
    auto p = [&](std::string_view n) { return g.param(n); };
    const Polynomial w1 = j1_integrable ? -(2 * p("z2") + p("z3")) : p("w1");
    const Polynomial w2 = j1_integrable ? 2 * p("z1") - p("z4") : p("w2");
    g.set("W", "Z", {{"W", p("lambda")}})
        .set("Z", "X", {{"X", p("alpha")}, {"Y", p("beta")}, {"Z", p("z1")}, {"W", w1}})
        .set("Z", "Y", {{"X", -p("beta")}, {"Y", p("alpha")}, {"Z", p("z2")}, {"W", w2}})
        .set("W", "X", {{"X", p("a")}, {"Y", p("b")}, {"Z", p("z3")}, {"W", -p("z1")}})
        .set("W", "Y", {{"X", -p("b")}, {"Y", p("a")}, {"Z", p("z4")}, {"W", -p("z2")}})
        .set("Y", "X", {{"X", p("r")}, {"Z", p("theta1")}, {"W", p("theta2")}})
        .vertical({"Z", "W"});
    return g.build();
}

LieAlgebraSpec both_integrable() {
    LieAlgebraBuilder g(kFrame, make_parameter_table(
                                    {"lambda", "alpha", "beta", "a", "b", "r", "z3", "z4", "theta1", "theta2"}));
    auto p = [&](std::string_view n) { return g.param(n); };
    g.set("W", "Z", {{"W", p("lambda")}})
        .set("Z", "X", {{"X", p("alpha")}, {"Y", p("beta")}, {"W", -p("z3")}})
        .set("Z", "Y", {{"X", -p("beta")}, {"Y", p("alpha")}, {"W", -p("z4")}})
        .set("W", "X", {{"X", p("a")}, {"Y", p("b")}, {"Z", p("z3")}})
        .set("W", "Y", {{"X", -p("b")}, {"Y", p("a")}, {"Z", p("z4")}})
        .set("Y", "X", {{"X", p("r")}, {"Z", p("theta1")}, {"W", p("theta2")}})
        .vertical({"Z", "W"});
    return g.build();
}

LieAlgebraSpec g7() {
    // theta1, theta2 precede z2 so that curvature values render in the
    // conventional order, e.g. -1/2*theta1^2 - 1/2*theta2^2 - 6*z2^2.
    LieAlgebraBuilder g(kFrame, make_parameter_table({"theta1", "theta2", "z2"}));
    auto p = [&](std::string_view n) { return g.param(n); };
    g.set("Z", "X", {{"W", -2 * p("z2")}})
        .set("Z", "Y", {{"Z", p("z2")}})
        .set("W", "Y", {{"W", -p("z2")}})
        .set("Y", "X", {{"X", 2 * p("z2")}, {"Z", p("theta1")}, {"W", p("theta2")}})
        .vertical({"Z", "W"});
    return g.build();
}

LieAlgebraSpec g3() {
    LieAlgebraBuilder g(kFrame, make_parameter_table({"alpha", "beta", "theta2"}));
    auto p = [&](std::string_view n) { return g.param(n); };
    g.set("W", "Z", {{"W", -2 * p("alpha")}})
        .set("Z", "X", {{"X", p("alpha")}, {"Y", p("beta")}})
        .set("Z", "Y", {{"X", -p("beta")}, {"Y", p("alpha")}})
        .set("Y", "X", {{"W", p("theta2")}})
        .vertical({"Z", "W"});
    return g.build();
}

}  // namespace

std::string_view to_string(FamilyId id) {
    switch (id) {
        case FamilyId::general_s3: return "general_s3";
        case FamilyId::j1_integrable: return "j1_integrable";
        case FamilyId::both_integrable: return "both_integrable";
        case FamilyId::g7: return "g7";
        case FamilyId::g3: return "g3";
        case FamilyId::abelian4: return "abelian4";
    }
    return "unknown";
}

FamilyId parse_family(std::string_view name) {
    for (auto id : kFamilies) {
        if (to_string(id) == name) return id;
    }
    throw Error("unknown family '" + std::string(name) + "'");
}

LieAlgebraSpec build(FamilyId family) {
    switch (family) {
        case FamilyId::general_s3: return general(false);
        case FamilyId::j1_integrable: return general(true);
        case FamilyId::both_integrable: return both_integrable();
        case FamilyId::g7: return g7();
        case FamilyId::g3: return g3();
        case FamilyId::abelian4: return LieAlgebraBuilder(kFrame, nullptr).vertical({"Z", "W"}).build();
    }
    throw Error("unknown family");
}

}  // namespace invgeo
