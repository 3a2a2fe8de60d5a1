#include "invgeo/golden.hpp"

#include "invgeo/algebra_io.hpp"
#include "invgeo/analysis.hpp"
#include "invgeo/families.hpp"
#include "invgeo/foliation.hpp"
#include "invgeo/hermitian.hpp"
#include "invgeo/riemannian.hpp"

#include <functional>
#include <map>

namespace invgeo {

namespace {

/// Full pipeline output for one algebra.
struct Computed {
    LieAlgebraSpec g;
    ConnectionTable conn;
    CurvatureTensor R;
    RicciTensor ric;
    DistributionSplit split;

    Computed(LieAlgebraSpec algebra, const Conventions& conv)
        : g(std::move(algebra)),
          conn(levi_civita(g, conv)),
          R(curvature(g, conn, conv)),
          ric(ricci(R)),
          split(DistributionSplit::of(g)) {}

    std::size_t at(std::string_view name) const { return *g.index_of(name); }
    AlmostComplexStructure J(int which) const {
        auto [j1, j2] = canonical_structures(g);
        return which == 1 ? j1 : j2;
    }
};

using Rule = std::function<std::string()>;

struct Entry {
    GoldenIdentity identity;
    Rule actual;
};

class Table {
public:
    explicit Table(const Conventions& conv) : conv_(conv) {}

    const Conventions& conv() const { return conv_; }

    const Computed& family(FamilyId id) {
        auto it = cache_.find(id);
        if (it == cache_.end()) it = cache_.emplace(id, Computed(build(id), conv_)).first;
        return it->second;
    }
    Computed specialize(FamilyId id, const std::string& param, const std::string& value) {
        const auto g = build(id);
        return Computed(g.substitute({{param, parse_expression(value, g.params())}}), conv_);
    }

    // Expected values are written as expressions and canonicalized by the
    // parser, which is independent of the geometry pipeline.
    std::string poly(FamilyId id, const std::string& expr) { return parse_expression(expr, family(id).g.params()).to_string(); }
    std::string vec(FamilyId id, const std::string& expr) {
        const auto& g = family(id).g;
        return format_vector(parse_bracket_value(expr, g.basis(), g.params()), g.basis());
    }
    std::string set(FamilyId id, const std::vector<const char*>& exprs) {
        ConstraintSet s;
        for (const char* e : exprs) s.insert(parse_expression(e, family(id).g.params()));
        return s.to_string();
    }

    void add(std::string name, std::string origin, std::string expected, Rule actual) {
        entries_.push_back({{std::move(name), std::move(origin), std::move(expected)}, std::move(actual)});
    }

    std::vector<Entry>& entries() { return entries_; }

private:
    Conventions conv_;
    std::map<FamilyId, Computed> cache_;
    std::vector<Entry> entries_;
};

struct ConnectionRow {
    const char* from;
    const char* to;
    const char* value;
};

void add_connection_table(Table& t, FamilyId id, const char* origin, std::initializer_list<ConnectionRow> rows) {
    const std::string prefix = std::string(to_string(id)) + ".connection.";
    for (const auto& row : rows) {
        t.add(prefix + row.from + "." + row.to, origin, t.vec(id, row.value), [&t, id, row] {
            const auto& c = t.family(id);
            return format_vector(c.conn.nabla(c.at(row.from), c.at(row.to)), c.g.basis());
        });
    }
}

void add_sectionals(Table& t, FamilyId id, const char* origin,
                    std::initializer_list<std::pair<const char*, const char*>> rows) {
    const std::string prefix = std::string(to_string(id)) + ".sectional.";
    for (const auto& [plane, value] : rows) {
        const std::string a(1, plane[0]), b(1, plane[1]);
        t.add(prefix + a + "^" + b, origin, t.poly(id, value), [&t, id, a, b] {
            const auto& c = t.family(id);
            return sectional(c.R, c.at(a), c.at(b)).to_string();
        });
    }
}

void add_ricci(Table& t, FamilyId id, const char* origin, std::initializer_list<std::pair<const char*, const char*>> rows) {
    const std::string prefix = std::string(to_string(id)) + ".ricci.";
    for (const auto& [pair, value] : rows) {
        const std::string a(1, pair[0]), b(1, pair[1]);
        t.add(prefix + a + b, origin, t.poly(id, value), [&t, id, a, b] {
            const auto& c = t.family(id);
            return c.ric(c.at(a), c.at(b)).to_string();
        });
    }
}

std::string yes_no(bool b) {
    return b ? "yes" : "no";
}

void populate(Table& t) {
    using F = FamilyId;

    // -- g7 ---------------------------------------------------------------
    add_connection_table(t, F::g7, "g7 Levi-Civita table",
                         {{"X", "X", "2*z2*Y"},
                          {"X", "Y", "-2*z2*X - 1/2*theta1*Z - 1/2*theta2*W"},
                          {"X", "Z", "1/2*theta1*Y + z2*W"},
                          {"X", "W", "1/2*theta2*Y - z2*Z"},
                          {"Y", "X", "1/2*theta1*Z + 1/2*theta2*W"},
                          {"Y", "Y", "0"},
                          {"Y", "Z", "-1/2*theta1*X"},
                          {"Y", "W", "-1/2*theta2*X"},
                          {"Z", "X", "1/2*theta1*Y - z2*W"},
                          {"Z", "Y", "-1/2*theta1*X + z2*Z"},
                          {"Z", "Z", "-z2*Y"},
                          {"Z", "W", "z2*X"},
                          {"W", "X", "1/2*theta2*Y - z2*Z"},
                          {"W", "Y", "-1/2*theta2*X - z2*W"},
                          {"W", "Z", "z2*X"},
                          {"W", "W", "z2*Y"}});
    add_sectionals(t, F::g7, "g7 sectional curvatures",
                   {{"XY", "-3/4*(theta1^2 + theta2^2) - 4*z2^2"},
                    {"XZ", "1/4*theta1^2 - z2^2"},
                    {"XW", "1/4*theta2^2 - z2^2"},
                    {"YZ", "1/4*theta1^2 - z2^2"},
                    {"YW", "1/4*theta2^2 - z2^2"},
                    {"ZW", "2*z2^2"}});
    add_ricci(t, F::g7, "g7 Ricci curvature",
              {{"XX", "-1/2*(theta1^2 + theta2^2) - 6*z2^2"}, {"ZZ", "1/2*theta1^2"}});
    t.add("g7.einstein", "g7 is not Einstein", "no", [&t] { return yes_no(einstein_defect(t.family(F::g7).ric).empty()); });
    t.add("g7.einstein_gap.XX-ZZ", "difference of the two printed g7 Ricci values",
          (parse_expression("-1/2*(theta1^2 + theta2^2) - 6*z2^2", t.family(F::g7).g.params()) -
           parse_expression("1/2*theta1^2", t.family(F::g7).g.params()))
              .to_string(),
          [&t] {
              const auto& c = t.family(F::g7);
              return (c.ric(0, 0) - c.ric(c.at("Z"), c.at("Z"))).to_string();
          });
    t.add("g7.nabla_J1.X.X", "covariant derivative of J1 on g7", t.vec(F::g7, "-1/2*(theta1*Z + theta2*W)"), [&t] {
        const auto& c = t.family(F::g7);
        return format_vector(covariant_J(c.g, c.conn, c.J(1))(c.at("X"), c.at("X")), c.g.basis());
    });
    t.add("g7.kahler.J1", "J1 is not Kahler on g7", "no", [&t] {
        const auto& c = t.family(F::g7);
        return yes_no(is_kahler(covariant_J(c.g, c.conn, c.J(1))));
    });
    t.add("g7.integrability.J1", "g7 lies in the J1-integrable family", "{}", [&t] {
        const auto& c = t.family(F::g7);
        return integrability_constraints(c.g, c.J(1), t.conv()).to_string();
    });
    t.add("g7.minimal", "leaves of the vertical foliation are minimal", "{}", [&t] {
        const auto& c = t.family(F::g7);
        return predicate(c.g, c.conn, c.split, FoliationPredicate::minimal).to_string();
    });
    t.add("g7.conformal", "the vertical foliation is conformal", "{}", [&t] {
        const auto& c = t.family(F::g7);
        return predicate(c.g, c.conn, c.split, FoliationPredicate::conformal).to_string();
    });
    t.add("g7.totally_geodesic", "g7 leaves are not totally geodesic", "no", [&t] {
        const auto& c = t.family(F::g7);
        return yes_no(predicate(c.g, c.conn, c.split, FoliationPredicate::totally_geodesic).empty());
    });
    t.add("g7.horizontal_integrable", "g7 horizontal distribution is not integrable", "no", [&t] {
        const auto& c = t.family(F::g7);
        return yes_no(predicate(c.g, c.conn, c.split, FoliationPredicate::horizontal_integrable).empty());
    });

    // -- general form -----------------------------------------------------
    t.add("general_s3.integrability.J1", "J1 integrability condition",
          t.set(F::general_s3, {"2*z1 - z4 - w2", "2*z2 + z3 + w1"}), [&t] {
              const auto& c = t.family(F::general_s3);
              return integrability_constraints(c.g, c.J(1), t.conv()).to_string();
          });
    t.add("general_s3.integrability.J2", "J2 integrability condition",
          t.set(F::general_s3, {"2*z1 + z4 + w2", "2*z2 - z3 - w1"}), [&t] {
              const auto& c = t.family(F::general_s3);
              return integrability_constraints(c.g, c.J(2), t.conv()).to_string();
          });
    t.add("general_s3.nijenhuis.J1.X.Z", "J1 Nijenhuis component pinning the N(v,w) normalization",
          t.vec(F::general_s3, "(2*z1 - z4 - w2)*Z + (2*z2 + z3 + w1)*W"), [&t] {
              const auto& c = t.family(F::general_s3);
              return format_vector(nijenhuis(c.g, c.J(1), t.conv())(c.at("X"), c.at("Z")), c.g.basis());
          });
    t.add("general_s3.both_integrable_locus", "J1 and J2 both integrable forces totally geodesic leaves",
          linear_reduce([&] {
              ConstraintSet s;
              for (const char* e : {"z1", "z2", "z3 + w1", "z4 + w2"}) s.insert(parse_expression(e, t.family(F::general_s3).g.params()));
              return s;
          }())
              .to_string(),
          [&t] {
              const auto& c = t.family(F::general_s3);
              ConstraintSet both = integrability_constraints(c.g, c.J(1), t.conv());
              both.merge(integrability_constraints(c.g, c.J(2), t.conv()));
              return linear_reduce(both).to_string();
          });
    const std::pair<FoliationPredicate, std::vector<const char*>> props[] = {
        {FoliationPredicate::totally_geodesic, {"z1", "z2", "z3 + w1", "z4 + w2"}},
        {FoliationPredicate::riemannian, {"alpha", "a"}},
        {FoliationPredicate::horizontal_integrable, {"theta1", "theta2"}},
        {FoliationPredicate::conformal, {}},
        {FoliationPredicate::minimal, {}},
    };
    for (const auto& [p, exprs] : props) {
        t.add("general_s3." + std::string(to_string(p)), "geometry of the general bracket form",
              t.set(F::general_s3, exprs), [&t, p = p] {
                  const auto& c = t.family(F::general_s3);
                  return predicate(c.g, c.conn, c.split, p).to_string();
              });
    }
    t.add("j1_integrable.integrability.J1", "J1-integrable bracket relations", "{}", [&t] {
        const auto& c = t.family(F::j1_integrable);
        return integrability_constraints(c.g, c.J(1), t.conv()).to_string();
    });
    for (int which : {1, 2}) {
        t.add("both_integrable.integrability.J" + std::to_string(which), "doubly integrable bracket relations", "{}",
              [&t, which] {
                  const auto& c = t.family(F::both_integrable);
                  return integrability_constraints(c.g, c.J(which), t.conv()).to_string();
              });
    }
    t.add("both_integrable.totally_geodesic", "doubly integrable case has totally geodesic leaves", "{}", [&t] {
        const auto& c = t.family(F::both_integrable);
        return predicate(c.g, c.conn, c.split, FoliationPredicate::totally_geodesic).to_string();
    });

    // -- g3 ---------------------------------------------------------------
    add_connection_table(t, F::g3, "g3 Levi-Civita table",
                         {{"X", "X", "alpha*Z"},
                          {"X", "Y", "-1/2*theta2*W"},
                          {"X", "Z", "-alpha*X"},
                          {"X", "W", "1/2*theta2*Y"},
                          {"Y", "X", "1/2*theta2*W"},
                          {"Y", "Y", "alpha*Z"},
                          {"Y", "Z", "-alpha*Y"},
                          {"Y", "W", "-1/2*theta2*X"},
                          {"Z", "X", "beta*Y"},
                          {"Z", "Y", "-beta*X"},
                          {"Z", "Z", "0"},
                          {"Z", "W", "0"},
                          {"W", "X", "1/2*theta2*Y"},
                          {"W", "Y", "-1/2*theta2*X"},
                          {"W", "Z", "-2*alpha*W"},
                          {"W", "W", "2*alpha*Z"}});
    add_sectionals(t, F::g3, "g3 sectional curvatures",
                   {{"XY", "-alpha^2 - 3/4*theta2^2"},
                    {"XZ", "-alpha^2"},
                    {"XW", "1/4*theta2^2 - 2*alpha^2"},
                    {"YZ", "-alpha^2"},
                    {"YW", "1/4*theta2^2 - 2*alpha^2"},
                    {"ZW", "-4*alpha^2"}});
    add_ricci(t, F::g3, "g3 Ricci curvature",
              {{"XX", "-1/2*theta2^2 - 4*alpha^2"}, {"ZZ", "-6*alpha^2"}, {"WW", "1/2*theta2^2 - 8*alpha^2"}});
    const std::pair<int, const char*> kahler[] = {{1, "-2*alpha"}, {2, "2*alpha"}};
    for (const auto& [which, value] : kahler) {
        const std::string J = "J" + std::to_string(which);
        t.add("g3.kahler_locus." + J, J + " is Kahler iff theta2 = " + value,
              t.set(F::g3, {which == 1 ? "theta2 + 2*alpha" : "theta2 - 2*alpha"}), [&t, which = which] {
                  const auto& c = t.family(F::g3);
                  return covariant_J(c.g, c.conn, c.J(which)).constraints.to_string();
              });
        t.add("g3.kahler." + J + "@theta2=" + value, J + " is Kahler iff theta2 = " + value, "yes",
              [&t, which = which, value = std::string(value)] {
                  const auto c = t.specialize(F::g3, "theta2", value);
                  return yes_no(is_kahler(covariant_J(c.g, c.conn, c.J(which))));
              });
    }
    t.add("g3.einstein_locus", "g3 is not Einstein when 4 alpha^2 != theta2^2", t.set(F::g3, {"4*alpha^2 - theta2^2"}),
          [&t] { return einstein_defect(t.family(F::g3).ric).constraints().to_string(); });
}

}  // namespace

std::vector<GoldenIdentity> golden_identities() {
    Table t{Conventions{}};
    populate(t);
    std::vector<GoldenIdentity> out;
    for (const auto& e : t.entries()) out.push_back(e.identity);
    return out;
}

GeometryReport golden_report(const Conventions& conventions) {
    Table t(conventions);
    populate(t);
    GeometryReport report;
    report.source = "golden identities";
    auto& golden = report.section("golden");
    std::size_t matched = 0;
    for (const auto& e : t.entries()) {
        const std::string actual = e.actual();
        golden.add(e.identity.name, actual);
        if (actual == e.identity.expected) {
            ++matched;
        } else {
            report.failures.push_back({e.identity.name + " (" + e.identity.origin + ")", e.identity.expected, actual});
        }
    }
    report.section("checks").add(
        "identities", std::to_string(matched) + "/" + std::to_string(t.entries().size()) + " matched");
    const auto residual = jacobi_residual(build(FamilyId::general_s3));
    report.notes.push_back("general_s3: Jacobi residual nonzero on " + std::to_string(residual.size()) +
                           " basis triples; its brackets satisfy the Jacobi identity only on a subvariety of parameters");
    const auto both = jacobi_residual(build(FamilyId::both_integrable));
    report.notes.push_back("both_integrable: Jacobi residual nonzero on " + std::to_string(both.size()) +
                           " basis triples for generic parameters");
    return report;
}

}  // namespace invgeo
