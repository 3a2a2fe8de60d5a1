#include "invgeo/analysis.hpp"

#include "invgeo/foliation.hpp"
#include "invgeo/hermitian.hpp"
#include "invgeo/riemannian.hpp"

#include <algorithm>
#include <bit>

namespace invgeo {

namespace {

bool wants(const AnalysisOptions& o, Topic t) {
    return (o.topics & static_cast<unsigned>(t)) != 0;
}

std::string ricci_key(const LieAlgebraSpec& g, std::size_t i, std::size_t j) {
    const bool short_names = std::all_of(g.basis().begin(), g.basis().end(), [](const auto& b) { return b.size() == 1; });
    return pair_key(g, i, j, short_names ? "" : ",");
}

void add_checks(const LieAlgebraSpec& g, GeometryReport& report) {
    // Antisymmetry is enforced when the algebra is constructed.
    auto& checks = report.section("checks");
    checks.add("antisymmetry", std::string("ok"));
    const auto residual = jacobi_residual(g);
    checks.add("jacobi", std::string(residual.empty() ? "ok" : "failed"));
    if (!residual.empty()) {
        auto& section = report.section("jacobi");
        for (const auto& r : residual) {
            section.add(g.basis_name(r.triple[0]) + "," + g.basis_name(r.triple[1]) + "," + g.basis_name(r.triple[2]),
                        format_vector(r.value, g.basis()));
        }
    }
}

void add_connection(const LieAlgebraSpec& g, const ConnectionTable& conn, GeometryReport& report) {
    auto& section = report.section("connection");
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) section.add(pair_key(g, i, j, "."), format_vector(conn.nabla(i, j), g.basis()));
    auto& checks = report.section("checks");
    checks.add("torsion_free", std::string(is_torsion_free(g, conn) ? "ok" : "failed"));
    checks.add("metric_compatible", std::string(is_metric_compatible(conn) ? "ok" : "failed"));
}

void add_curvature(const LieAlgebraSpec& g, bool jacobi_ok, const CurvatureTensor& R, const RicciTensor& ric,
                   GeometryReport& report) {
    auto& sectional_section = report.section("sectional");
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j)
            sectional_section.add(pair_key(g, i, j, "^"), sectional(R, i, j).to_string());
    auto& ricci_section = report.section("ricci");
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) ricci_section.add(ricci_key(g, i, j), ric(i, j).to_string());
    report.section("scalar_curvature").add("scalar", scalar_curvature(ric).to_string());

    const auto sym = check_symmetries(R);
    auto& checks = report.section("checks");
    const bool antisym = sym.antisymmetric_first_pair && sym.antisymmetric_second_pair;
    checks.add("curvature_antisymmetry", std::string(antisym ? "ok" : "failed"));
    if (jacobi_ok) {
        checks.add("curvature_pair_symmetry", std::string(sym.pair_symmetric ? "ok" : "failed"));
        checks.add("first_bianchi", std::string(sym.first_bianchi ? "ok" : "failed"));
    } else {
        checks.add("curvature_pair_symmetry", std::string("skipped"));
        checks.add("first_bianchi", std::string("skipped"));
        report.notes.push_back(
            "pair symmetry and first Bianchi identity not checked: the structure constants violate the Jacobi identity");
    }
    checks.add("ricci_symmetric", std::string(is_symmetric(ric) ? "ok" : "failed"));
}

void add_einstein(const LieAlgebraSpec& g, const RicciTensor& ric, GeometryReport& report) {
    const auto defect = einstein_defect(ric);
    auto& section = report.section("einstein_defect");
    for (const auto& o : defect.off_diagonal) section.add(ricci_key(g, o.i, o.j), o.value.to_string());
    for (const auto& d : defect.diagonal_gaps)
        section.add(ricci_key(g, 0, 0) + "-" + ricci_key(g, d.i, d.i), d.value.to_string());
    report.section("checks").add("einstein", std::string(defect.empty() ? "yes" : "no"));
}

void add_hermitian(const LieAlgebraSpec& g, const ConnectionTable& conn, const AnalysisOptions& options,
                   GeometryReport& report) {
    const auto [j1, j2] = canonical_structures(g);
    for (const AlmostComplexStructure* J : {&j1, &j2}) {
        if (options.structure && *options.structure != J->name()) continue;
        const auto N = nijenhuis(g, *J, options.conventions);
        auto& n_section = report.section("nijenhuis." + J->name());
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (std::size_t j = i + 1; j < g.dim(); ++j)
                if (!N(i, j).is_zero()) n_section.add(pair_key(g, i, j, "."), format_vector(N(i, j), g.basis()));
        const auto defect = covariant_J(g, conn, *J);
        auto& k_section = report.section("kahler_defect." + J->name());
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (std::size_t j = 0; j < g.dim(); ++j)
                if (!defect(i, j).is_zero()) k_section.add(pair_key(g, i, j, "."), format_vector(defect(i, j), g.basis()));
        auto& h = report.section("hermitian");
        h.add("integrability." + J->name(), integrability_constraints(N).to_strings());
        h.add("kahler_constraints." + J->name(), defect.constraints.to_strings());
        auto& checks = report.section("checks");
        checks.add("integrable." + J->name(), std::string(integrability_constraints(N).empty() ? "yes" : "no"));
        checks.add("kahler." + J->name(), std::string(is_kahler(defect) ? "yes" : "no"));
    }
}

void add_foliation(const LieAlgebraSpec& g, const ConnectionTable& conn, GeometryReport& report) {
    const auto split = DistributionSplit::of(g);
    for (auto which : {Distribution::vertical, Distribution::horizontal}) {
        const auto form = second_fundamental_form(g, conn, split, which);
        auto& section = report.section(which == Distribution::vertical ? "second_fundamental.vertical"
                                                                       : "second_fundamental.horizontal");
        for (const auto& [key, value] : form.values) section.add(pair_key(g, key.first, key.second, "."), format_vector(value, g.basis()));
    }
    auto& section = report.section("foliation");
    section.add("vertical_integrable", is_involutive(g, split.vertical).to_strings());
    const auto conf = conformality(g, conn, split);
    section.add("conformal", conf.constraints.to_strings());
    section.add("mean_vector", conf.mean_vector ? format_vector(*conf.mean_vector, g.basis()) : std::string("none"));
    for (auto p : {FoliationPredicate::riemannian, FoliationPredicate::minimal, FoliationPredicate::totally_geodesic,
                   FoliationPredicate::horizontal_integrable}) {
        section.add(std::string(to_string(p)), predicate(g, conn, split, p).to_strings());
    }
}

}  // namespace

std::string pair_key(const LieAlgebraSpec& g, std::size_t i, std::size_t j, std::string_view sep) {
    return g.basis_name(i) + std::string(sep) + g.basis_name(j);
}

GeometryReport analyze(const LieAlgebraSpec& g, const AnalysisOptions& options, std::string source) {
    GeometryReport report;
    report.source = std::move(source);
    const bool jacobi_ok = jacobi_residual(g).empty();
    if (wants(options, Topic::checks)) add_checks(g, report);

    const ConnectionTable conn = levi_civita(g, options.conventions);
    if (wants(options, Topic::connection)) add_connection(g, conn, report);
    if (wants(options, Topic::curvature) || wants(options, Topic::einstein)) {
        const auto R = curvature(g, conn, options.conventions);
        const auto ric = ricci(R);
        if (wants(options, Topic::curvature)) add_curvature(g, jacobi_ok, R, ric, report);
        if (wants(options, Topic::einstein)) add_einstein(g, ric, report);
    }

    const bool split_ok = g.vertical().has_value() && !g.vertical()->empty() && g.vertical()->size() < g.dim();
    const bool hermitian_ok = split_ok && g.dim() == 4 && g.vertical()->size() == 2;
    const bool only = std::has_single_bit(options.topics);
    if (wants(options, Topic::hermitian)) {
        if (hermitian_ok) {
            add_hermitian(g, conn, options, report);
        } else if (only) {
            canonical_structures(g);  // throws the precise reason
        } else {
            report.notes.push_back("Hermitian structures skipped: they need dim 4 with a (2,2) vertical split");
        }
    }
    if (wants(options, Topic::foliation)) {
        if (split_ok) {
            add_foliation(g, conn, report);
        } else if (only) {
            DistributionSplit::of(g);
            throw Error("vertical distribution must be nonempty and proper");
        } else {
            report.notes.push_back("foliation skipped: no vertical distribution declared");
        }
    }
    return report;
}

}  // namespace invgeo
