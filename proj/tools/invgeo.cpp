#include "invgeo/algebra_io.hpp"
#include "invgeo/analysis.hpp"
#include "invgeo/families.hpp"
#include "invgeo/golden.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace invgeo;

namespace {

struct Options {
    std::string command;
    std::string file;
    std::string family;
    std::string structure;
    std::vector<std::string> vertical;
    std::vector<std::string> set;
    std::string format = "text";
    std::string out;
    std::string perturb;
};

Conventions perturbed(const std::string& name) {
    Conventions c;
    if (name.empty()) return c;
    if (name == "curvature-sign") {
        c.curvature_sign = -1;
    } else if (name == "koszul") {
        c.koszul_flip = true;
    } else if (name == "nijenhuis-sign") {
        c.nijenhuis_flip = true;
    } else if (name == "nijenhuis-quarter") {
        c.nijenhuis_quarter = true;
    } else {
        throw Error("unknown perturbation '" + name + "'");
    }
    return c;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

LieAlgebraSpec load(const Options& opt) {
    if (opt.file.empty() == opt.family.empty()) throw Error("give exactly one of an input file or --family");
    LieAlgebraSpec g = opt.family.empty() ? parse_algebra_file(read_file(opt.file)).to_spec() : build(parse_family(opt.family));

    std::optional<std::vector<std::size_t>> requested;
    if (!opt.vertical.empty()) {
        std::vector<std::size_t> indices;
        for (const auto& name : opt.vertical) {
            auto index = g.index_of(name);
            if (!index) throw Error("--vertical: unknown basis vector '" + name + "'");
            indices.push_back(*index);
        }
        requested = g.with_vertical(indices).vertical();
    }
    if (g.vertical()) {
        if (requested && *requested != *g.vertical())
            throw Error("--vertical disagrees with the vertical line of the input");
    } else if (requested) {
        g = g.with_vertical(requested);
    } else if (g.dim() == 4) {
        g = g.with_vertical(std::vector<std::size_t>{2, 3});
    }
    return g;
}

Assignment parse_assignments(const std::vector<std::string>& items, const LieAlgebraSpec& g) {
    Assignment out;
    for (const auto& item : items) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error("--set expects param=value, got '" + item + "'");
        std::string name = item.substr(0, eq);
        if (!g.params()->index_of(name)) throw Error("--set: unknown parameter '" + name + "'");
        if (!out.emplace(name, parse_rational(item.substr(eq + 1))).second)
            throw Error("--set: parameter '" + name + "' given twice");
    }
    return out;
}

unsigned topics_for(const std::string& command) {
    if (command == "check") return static_cast<unsigned>(Topic::checks);
    if (command == "connection") return static_cast<unsigned>(Topic::connection);
    if (command == "curvature") return static_cast<unsigned>(Topic::curvature);
    if (command == "einstein") return static_cast<unsigned>(Topic::einstein);
    if (command == "hermitian") return static_cast<unsigned>(Topic::hermitian);
    if (command == "foliation") return static_cast<unsigned>(Topic::foliation);
    return kAllTopics;
}

int execute(const Options& opt) {
    const ReportFormat format = opt.format == "json" ? ReportFormat::json : ReportFormat::text;
    const Conventions conventions = perturbed(opt.perturb);
    GeometryReport report;
    std::string prefix;
    int status = 0;

    if (opt.command == "paper-report") {
        if (!opt.file.empty() || !opt.family.empty() || !opt.set.empty() || !opt.vertical.empty() || !opt.structure.empty())
            throw Error("paper-report takes no input or computation options");
        report = golden_report(conventions);
        if (!report.failures.empty()) status = 2;
    } else {
        if (!opt.set.empty() && opt.command != "eval") throw Error("--set is only valid with eval");
        if (opt.command == "eval" && opt.set.empty()) throw Error("eval needs --set");
        LieAlgebraSpec g = load(opt);
        if (opt.command == "eval") g = g.substitute(parse_assignments(opt.set, g));

        AnalysisOptions analysis;
        analysis.topics = topics_for(opt.command);
        analysis.conventions = conventions;
        if (!opt.structure.empty()) analysis.structure = opt.structure;
        const std::string source = opt.family.empty() ? opt.file : "family " + opt.family;
        report = analyze(g, analysis, source);

        if (opt.command == "check") {
            const auto* jacobi = report.find("checks", "jacobi");
            const bool ok = jacobi && std::get<std::string>(jacobi->value) == "ok";
            prefix = std::string("antisymmetry: ok, jacobi: ") + (ok ? "ok" : "failed") + "\n";
            if (!ok) status = 2;
        }
    }

    std::string text = serialize_report(report, format);
    if (format == ReportFormat::text) text = prefix + text;
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out, std::ios::binary);
        if (!out || !(out << text)) throw Error("cannot write '" + opt.out + "'");
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact curvature, Hermitian and foliation computations on parameterized Lie algebras"};
    app.require_subcommand(1);
    Options opt;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"check", "antisymmetry and Jacobi status"},
        {"connection", "Levi-Civita connection table"},
        {"curvature", "sectional, Ricci and scalar curvature"},
        {"einstein", "Einstein defect"},
        {"hermitian", "Nijenhuis constraints, covariant derivative of J, Kahler verdict"},
        {"foliation", "second fundamental forms and foliation predicates"},
        {"eval", "substitute --set values, then run every computation"},
        {"paper-report", "recompute the published identities"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->callback([&opt, name = name] { opt.command = name; });
        sub->add_option("--out", opt.out, "write the report here instead of standard output");
        sub->add_option("--format", opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--perturb", opt.perturb)->group("");  // fault injection for self-tests
        if (name == "paper-report") continue;
        sub->add_option("file", opt.file, "algebra description file");
        sub->add_option("--family", opt.family, "built-in family instead of a file");
        sub->add_option("--j", opt.structure, "restrict to one almost complex structure")
            ->check(CLI::IsMember({"J1", "J2"}));
        sub->add_option("--vertical", opt.vertical, "names spanning the vertical distribution")->delimiter(',');
        sub->add_option("--set", opt.set, "param=rational substitutions (eval)")->delimiter(',');
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        return execute(opt);
    } catch (const std::exception& e) {
        std::cerr << "invgeo: " << e.what() << '\n';
        return 1;
    }
}
