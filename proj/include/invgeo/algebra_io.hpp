#pragma once

#include "invgeo/lie_algebra.hpp"
#include "invgeo/polynomial.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace invgeo {

struct SourcePosition {
    std::size_t line = 1;    // 1-based
    std::size_t column = 1;  // 1-based

    friend bool operator==(const SourcePosition&, const SourcePosition&) = default;
};

/// Input error carrying the position of the offending character.
class ParseError : public Error {
public:
    ParseError(SourcePosition where, const std::string& message);

    SourcePosition where() const { return where_; }
    const std::string& detail() const { return detail_; }

private:
    SourcePosition where_;
    std::string detail_;
};

/// Parses an expression over the declared parameters. Grammar: integer and
/// n/d literals, identifiers, binary + - *, unary -, ^ with a nonnegative
/// integer literal, parentheses; '#' comments to end of line.
///
/// `origin` is the position of the first character of `text`, so errors in
/// an expression embedded in a larger file report file coordinates.
Polynomial parse_expression(std::string_view text, const ParameterTablePtr& params,
                            SourcePosition origin = {});

/// Parses "0" or a sum of terms, each a polynomial factor times exactly one
/// basis name, into its coordinate vector.
Vector parse_bracket_value(std::string_view text, const std::vector<std::string>& basis,
                           const ParameterTablePtr& params, SourcePosition origin = {});

struct BracketEntry {
    std::size_t i;
    std::size_t j;
    Vector value;
    SourcePosition position;
};

/// Parsed algebra description file.
struct AlgebraDocument {
    std::size_t dim = 0;
    std::vector<std::string> basis;
    ParameterTablePtr params;
    std::vector<BracketEntry> brackets;
    std::optional<std::vector<std::size_t>> vertical;

    /// Completes the listed brackets antisymmetrically.
    LieAlgebraSpec to_spec() const;

    /// Equality ignoring source positions.
    friend bool operator==(const AlgebraDocument& a, const AlgebraDocument& b);
};

/// Line-oriented format:
///   dim <n>
///   basis <name>...
///   params <name>...
///   metric orthonormal
///   bracket <A> <B> = <bracket value>
///   vertical <name>...
AlgebraDocument parse_algebra_file(std::string_view text);

/// Renders a document in the file format; parse_algebra_file inverts it.
std::string format_algebra_file(const AlgebraDocument& doc);

/// Document listing every nonzero bracket [e_i, e_j], i<j, of an algebra.
AlgebraDocument to_document(const LieAlgebraSpec& g);

}  // namespace invgeo
