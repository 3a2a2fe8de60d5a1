#include "invgeo/report.hpp"

#include "invgeo/rational.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace invgeo {

const ReportEntry* ReportSection::find(std::string_view key) const {
    auto it = std::find_if(entries.begin(), entries.end(), [&](const ReportEntry& e) { return e.key == key; });
    return it == entries.end() ? nullptr : &*it;
}

ReportSection& GeometryReport::section(std::string_view name) {
    auto it = std::find_if(sections.begin(), sections.end(), [&](const ReportSection& s) { return s.name == name; });
    if (it != sections.end()) return *it;
    sections.push_back({std::string(name), {}});
    return sections.back();
}

const ReportSection* GeometryReport::find_section(std::string_view name) const {
    auto it = std::find_if(sections.begin(), sections.end(), [&](const ReportSection& s) { return s.name == name; });
    return it == sections.end() ? nullptr : &*it;
}

const ReportEntry* GeometryReport::find(std::string_view section, std::string_view key) const {
    const ReportSection* s = find_section(section);
    return s ? s->find(key) : nullptr;
}

namespace {

using ordered_json = nlohmann::ordered_json;

std::string text_label(std::string_view section, const std::string& key) {
    if (section == "connection") return "nabla(" + key + ")";
    if (section == "sectional") return "sec(" + key + ")";
    if (section == "ricci") return "Ric(" + key + ")";
    return key;
}

std::string render(const ReportValue& value) {
    if (const auto* s = std::get_if<std::string>(&value)) return *s;
    const auto& items = std::get<std::vector<std::string>>(value);
    std::string out = "{";
    for (std::size_t n = 0; n < items.size(); ++n) {
        if (n) out += ", ";
        out += items[n];
    }
    return out + "}";
}

std::string to_text(const GeometryReport& report) {
    std::ostringstream out;
    out << "source: " << report.source << '\n';
    for (const auto& s : report.sections) {
        out << '[' << s.name << "]\n";
        for (const auto& e : s.entries) out << text_label(s.name, e.key) << " = " << render(e.value) << '\n';
    }
    if (!report.failures.empty()) {
        out << "[failures]\n";
        for (const auto& f : report.failures)
            out << f.identity << ": expected " << f.expected << ", got " << f.actual << '\n';
    }
    if (!report.notes.empty()) {
        out << "[notes]\n";
        for (const auto& n : report.notes) out << n << '\n';
    }
    return out.str();
}

std::string to_json(const GeometryReport& report) {
    ordered_json doc;
    doc["source"] = report.source;
    ordered_json sections = ordered_json::object();
    for (const auto& s : report.sections) {
        ordered_json entries = ordered_json::object();
        for (const auto& e : s.entries) {
            std::visit([&](const auto& v) { entries[e.key] = v; }, e.value);
        }
        sections[s.name] = std::move(entries);
    }
    doc["sections"] = std::move(sections);
    ordered_json failures = ordered_json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"identity", f.identity}, {"expected", f.expected}, {"actual", f.actual}});
    doc["failures"] = std::move(failures);
    doc["notes"] = report.notes;
    return doc.dump(2) + "\n";
}

}  // namespace

std::string serialize_report(const GeometryReport& report, ReportFormat format) {
    return format == ReportFormat::json ? to_json(report) : to_text(report);
}

GeometryReport parse_report_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed report: ") + e.what());
    }
    try {
        GeometryReport report;
        report.source = doc.at("source").get<std::string>();
        for (const auto& [name, entries] : doc.at("sections").items()) {
            ReportSection& s = report.section(name);
            for (const auto& [key, value] : entries.items()) {
                if (value.is_array()) {
                    s.add(key, value.get<std::vector<std::string>>());
                } else {
                    s.add(key, value.get<std::string>());
                }
            }
        }
        for (const auto& f : doc.at("failures"))
            report.failures.push_back({f.at("identity").get<std::string>(), f.at("expected").get<std::string>(),
                                       f.at("actual").get<std::string>()});
        report.notes = doc.at("notes").get<std::vector<std::string>>();
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("report does not follow the schema: ") + e.what());
    }
}

}  // namespace invgeo
