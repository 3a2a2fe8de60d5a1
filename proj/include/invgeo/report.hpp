#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace invgeo {

/// A report value is a single canonical string or a list of them
/// (constraint sets).
using ReportValue = std::variant<std::string, std::vector<std::string>>;

struct ReportEntry {
    std::string key;
    ReportValue value;

    friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct ReportSection {
    std::string name;
    std::vector<ReportEntry> entries;

    void add(std::string key, ReportValue value) { entries.push_back({std::move(key), std::move(value)}); }
    const ReportEntry* find(std::string_view key) const;

    friend bool operator==(const ReportSection&, const ReportSection&) = default;
};

/// A golden identity whose computed value differed from the expected one.
struct GoldenFailure {
    std::string identity;
    std::string expected;
    std::string actual;

    friend bool operator==(const GoldenFailure&, const GoldenFailure&) = default;
};

/// Structured result of a computation. Sections keep insertion order, and
/// serialization is byte-deterministic.
struct GeometryReport {
    std::string source;
    std::vector<ReportSection> sections;
    std::vector<GoldenFailure> failures;
    std::vector<std::string> notes;

    /// Existing section of that name, or a new empty one appended at the end.
    ReportSection& section(std::string_view name);
    const ReportSection* find_section(std::string_view name) const;
    const ReportEntry* find(std::string_view section, std::string_view key) const;

    friend bool operator==(const GeometryReport&, const GeometryReport&) = default;
};

enum class ReportFormat { text, json };

/// Text form: "[section]" headers followed by "key = value" lines; the
/// connection, sectional and ricci sections label their keys as
/// nabla(...), sec(...) and Ric(...).
std::string serialize_report(const GeometryReport& report, ReportFormat format = ReportFormat::text);

/// Inverse of the JSON serialization.
GeometryReport parse_report_json(std::string_view text);

}  // namespace invgeo
