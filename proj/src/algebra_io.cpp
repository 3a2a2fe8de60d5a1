#include "invgeo/algebra_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace invgeo {

ParseError::ParseError(SourcePosition where, const std::string& message)
    : Error("line " + std::to_string(where.line) + ", column " + std::to_string(where.column) + ": " + message),
      where_(where),
      detail_(message) {}

namespace {

constexpr std::uint32_t kMaxExponent = 1000;

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string_view text;
    SourcePosition pos;
};

class Lexer {
public:
    Lexer(std::string_view text, SourcePosition origin) : text_(text), line_(origin.line), column_(origin.column) {}

    Token next() {
        skip_blank();
        const SourcePosition pos{line_, column_};
        if (at_ >= text_.size()) return {Tok::end, {}, pos};
        const char c = text_[at_];
        const auto u = static_cast<unsigned char>(c);
        if (std::isdigit(u)) return take(Tok::number, [](unsigned char x) { return std::isdigit(x) != 0; }, pos);
        if (std::isalpha(u) || c == '_')
            return take(Tok::ident, [](unsigned char x) { return std::isalnum(x) || x == '_'; }, pos);
        Tok kind;
        switch (c) {
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            case '*': kind = Tok::star; break;
            case '/': kind = Tok::slash; break;
            case '^': kind = Tok::caret; break;
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            case '.': throw ParseError(pos, "decimal literals are not supported; write n/d");
            default: throw ParseError(pos, std::string("unexpected character '") + c + "'");
        }
        advance();
        return {kind, text_.substr(at_ - 1, 1), pos};
    }

    /// Character right after the last token, without skipping blanks.
    char peek_raw() const { return at_ < text_.size() ? text_[at_] : '\0'; }
    SourcePosition position() const { return {line_, column_}; }

private:
    void advance() {
        if (text_[at_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++at_;
    }

    void skip_blank() {
        while (at_ < text_.size()) {
            const char c = text_[at_];
            if (c == '#') {
                while (at_ < text_.size() && text_[at_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    template <class Pred>
    Token take(Tok kind, Pred pred, SourcePosition pos) {
        const std::size_t start = at_;
        while (at_ < text_.size() && pred(static_cast<unsigned char>(text_[at_]))) advance();
        return {kind, text_.substr(start, at_ - start), pos};
    }

    std::string_view text_;
    std::size_t at_ = 0;
    std::size_t line_;
    std::size_t column_;
};

/// Value of a subexpression: a scalar part plus coefficients of basis vectors.
struct LinearForm {
    Polynomial scalar;
    std::map<std::size_t, Polynomial> vectors;

    bool has_vectors() const { return !vectors.empty(); }

    LinearForm& operator+=(const LinearForm& o) {
        scalar += o.scalar;
        for (const auto& [k, c] : o.vectors) {
            Polynomial& slot = vectors[k];
            slot += c;
            if (slot.is_zero()) vectors.erase(k);
        }
        return *this;
    }

    LinearForm negated() const {
        LinearForm out{-scalar, {}};
        for (const auto& [k, c] : vectors) out.vectors.emplace(k, -c);
        return out;
    }

    LinearForm scaled(const Polynomial& s) const {
        LinearForm out{scalar * s, {}};
        for (const auto& [k, c] : vectors) {
            Polynomial v = c * s;
            if (!v.is_zero()) out.vectors.emplace(k, std::move(v));
        }
        return out;
    }
};

class Parser {
public:
    Parser(std::string_view text, const ParameterTablePtr& params, const std::vector<std::string>* basis,
           SourcePosition origin)
        : lexer_(text, origin), params_(params), basis_(basis) {
        current_ = lexer_.next();
    }

    LinearForm parse_all() {
        if (current_.kind == Tok::end) throw ParseError(current_.pos, "empty expression");
        LinearForm value = sum();
        if (current_.kind != Tok::end) throw unexpected();
        return value;
    }

private:
    ParseError unexpected() const {
        if (current_.kind == Tok::end) return ParseError(current_.pos, "unexpected end of expression");
        return ParseError(current_.pos, "unexpected '" + std::string(current_.text) + "'");
    }

    void shift() { current_ = lexer_.next(); }

    LinearForm sum() {
        LinearForm value = product();
        while (current_.kind == Tok::plus || current_.kind == Tok::minus) {
            const bool minus = current_.kind == Tok::minus;
            shift();
            LinearForm rhs = product();
            value += minus ? rhs.negated() : rhs;
        }
        return value;
    }

    LinearForm product() {
        LinearForm value = unary();
        while (current_.kind == Tok::star) {
            const SourcePosition op = current_.pos;
            shift();
            LinearForm rhs = unary();
            if (value.has_vectors() && rhs.has_vectors())
                throw ParseError(op, "product of two basis vectors (bracket values must be linear)");
            if (rhs.has_vectors()) {
                value = rhs.scaled(value.scalar);
            } else {
                value = value.scaled(rhs.scalar);
            }
        }
        return value;
    }

    LinearForm unary() {
        if (current_.kind == Tok::minus) {
            shift();
            return unary().negated();
        }
        return power();
    }

    LinearForm power() {
        LinearForm base = primary();
        if (current_.kind != Tok::caret) return base;
        const SourcePosition op = current_.pos;
        shift();
        if (current_.kind == Tok::minus) throw ParseError(current_.pos, "negative exponent");
        if (current_.kind != Tok::number) throw ParseError(current_.pos, "exponent must be a nonnegative integer literal");
        const Token exponent_token = current_;
        if (lexer_.peek_raw() == '.') throw ParseError(exponent_token.pos, "non-integer exponent");
        shift();
        if (current_.kind == Tok::slash)
            throw ParseError(exponent_token.pos, "non-integer exponent");
        const Integer value = parse_decimal(exponent_token.text);
        if (value > kMaxExponent) throw ParseError(exponent_token.pos, "exponent too large");
        if (base.has_vectors()) throw ParseError(op, "basis vector raised to a power (bracket values must be linear)");
        const auto exponent = static_cast<std::uint32_t>(value);
        return LinearForm{base.scalar.pow(exponent), {}};
    }

    LinearForm primary() {
        switch (current_.kind) {
            case Tok::number: return literal();
            case Tok::ident: return identifier();
            case Tok::lparen: {
                shift();
                LinearForm inner = sum();
                if (current_.kind != Tok::rparen) {
                    if (current_.kind == Tok::end) throw ParseError(current_.pos, "missing ')'");
                    throw unexpected();
                }
                shift();
                return inner;
            }
            default: throw unexpected();
        }
    }

    LinearForm literal() {
        const Token num = current_;
        shift();
        Integer numerator = parse_decimal(num.text);
        Integer denominator = 1;
        if (current_.kind == Tok::slash) {
            shift();
            if (current_.kind != Tok::number)
                throw ParseError(current_.pos, "'/' is only allowed inside a rational literal n/d");
            denominator = parse_decimal(current_.text);
            if (denominator == 0) throw ParseError(current_.pos, "zero denominator");
            shift();
        }
        return LinearForm{Polynomial(params_, Rational(numerator, denominator)), {}};
    }

    LinearForm identifier() {
        const Token id = current_;
        shift();
        if (basis_) {
            auto it = std::find(basis_->begin(), basis_->end(), id.text);
            if (it != basis_->end()) {
                LinearForm out;
                out.vectors.emplace(static_cast<std::size_t>(it - basis_->begin()), Polynomial(params_, 1));
                return out;
            }
        }
        if (params_) {
            if (auto index = params_->index_of(id.text)) {
                return LinearForm{Polynomial::variable(params_, *index), {}};
            }
        }
        throw ParseError(id.pos, "unknown identifier '" + std::string(id.text) + "'");
    }

    Lexer lexer_;
    const ParameterTablePtr& params_;
    const std::vector<std::string>* basis_;
    Token current_;
};

}  // namespace

Polynomial parse_expression(std::string_view text, const ParameterTablePtr& params, SourcePosition origin) {
    LinearForm value = Parser(text, params, nullptr, origin).parse_all();
    Polynomial out = value.scalar;
    if (!out.table()) out = out + Polynomial(params, 0);
    return out;
}

Vector parse_bracket_value(std::string_view text, const std::vector<std::string>& basis,
                           const ParameterTablePtr& params, SourcePosition origin) {
    LinearForm value = Parser(text, params, &basis, origin).parse_all();
    if (!value.scalar.is_zero())
        throw ParseError(origin, "bracket value has a term without a basis vector");
    Vector out(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) out[k] = Polynomial(params, 0);
    for (const auto& [k, c] : value.vectors) out[k] = c;
    return out;
}

// ---------------------------------------------------------------------------
// Algebra files

namespace {

struct Word {
    std::string_view text;
    std::size_t column;
};

std::vector<Word> split_words(std::string_view line) {
    std::vector<Word> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        words.push_back({line.substr(start, i - start), start + 1});
    }
    return words;
}

std::string_view strip_comment(std::string_view line) {
    const auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

}  // namespace

AlgebraDocument parse_algebra_file(std::string_view text) {
    AlgebraDocument doc;
    doc.params = make_parameter_table({});
    bool have_dim = false, have_basis = false, have_params = false, have_metric = false;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> listed;  // (i,j) -> entry index
    std::size_t line_no = 0;
    std::size_t pos = 0;

    auto basis_index = [&](const Word& w) -> std::size_t {
        auto it = std::find(doc.basis.begin(), doc.basis.end(), w.text);
        if (it == doc.basis.end())
            throw ParseError({line_no, w.column}, "unknown basis vector '" + std::string(w.text) + "'");
        return static_cast<std::size_t>(it - doc.basis.begin());
    };

    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view raw = text.substr(pos, eol - pos);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        pos = eol + 1;
        ++line_no;
        const std::string_view line = strip_comment(raw);
        const auto words = split_words(line);
        if (words.empty()) continue;
        const Word& key = words.front();
        const SourcePosition at{line_no, key.column};

        if (!have_dim && key.text != "dim") throw ParseError(at, "the first line must be 'dim <n>'");
        if (key.text == "dim") {
            if (have_dim) throw ParseError(at, "'dim' given twice");
            if (words.size() != 2) throw ParseError(at, "expected 'dim <n>'");
            const auto& n = words[1].text;
            if (n.empty() || n.size() > 3 || !std::all_of(n.begin(), n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw ParseError({line_no, words[1].column}, "dimension must be a positive integer");
            doc.dim = std::stoul(std::string(n));
            if (doc.dim == 0) throw ParseError({line_no, words[1].column}, "dimension must be a positive integer");
            have_dim = true;
        } else if (key.text == "basis") {
            if (have_basis) throw ParseError(at, "'basis' given twice");
            if (words.size() - 1 != doc.dim)
                throw ParseError(at, "basis lists " + std::to_string(words.size() - 1) + " names but dim is " +
                                         std::to_string(doc.dim));
            for (std::size_t w = 1; w < words.size(); ++w) {
                const SourcePosition wp{line_no, words[w].column};
                if (!is_identifier(words[w].text)) throw ParseError(wp, "invalid basis name '" + std::string(words[w].text) + "'");
                if (std::find(doc.basis.begin(), doc.basis.end(), words[w].text) != doc.basis.end())
                    throw ParseError(wp, "duplicate basis name '" + std::string(words[w].text) + "'");
                if (doc.params->index_of(words[w].text))
                    throw ParseError(wp, "basis name '" + std::string(words[w].text) + "' collides with a parameter");
                doc.basis.emplace_back(words[w].text);
            }
            have_basis = true;
        } else if (key.text == "params") {
            if (have_params) throw ParseError(at, "'params' given twice");
            std::vector<std::string> names;
            for (std::size_t w = 1; w < words.size(); ++w) {
                const SourcePosition wp{line_no, words[w].column};
                if (!is_identifier(words[w].text)) throw ParseError(wp, "invalid parameter name '" + std::string(words[w].text) + "'");
                if (std::find(names.begin(), names.end(), words[w].text) != names.end())
                    throw ParseError(wp, "duplicate parameter name '" + std::string(words[w].text) + "'");
                if (std::find(doc.basis.begin(), doc.basis.end(), words[w].text) != doc.basis.end())
                    throw ParseError(wp, "parameter name '" + std::string(words[w].text) + "' collides with a basis vector");
                names.emplace_back(words[w].text);
            }
            if (!doc.brackets.empty()) throw ParseError(at, "'params' must precede every 'bracket' line");
            doc.params = make_parameter_table(std::move(names));
            have_params = true;
        } else if (key.text == "metric") {
            if (have_metric) throw ParseError(at, "'metric' given twice");
            if (words.size() != 2 || words[1].text != "orthonormal")
                throw ParseError(at, "only 'metric orthonormal' is supported");
            have_metric = true;
        } else if (key.text == "bracket") {
            if (!have_basis) throw ParseError(at, "'basis' must precede 'bracket' lines");
            if (words.size() < 5 || words[3].text != "=")
                throw ParseError(at, "expected 'bracket <A> <B> = <value>'");
            const std::size_t i = basis_index(words[1]);
            const std::size_t j = basis_index(words[2]);
            if (i == j) throw ParseError({line_no, words[2].column}, "bracket of a basis vector with itself is identically zero");
            const std::size_t value_column = words[3].column + 1;
            Vector value = parse_bracket_value(line.substr(value_column - 1), doc.basis, doc.params,
                                               {line_no, value_column});
            if (auto it = listed.find({i, j}); it != listed.end())
                throw ParseError(at, "duplicate bracket [" + doc.basis[i] + ", " + doc.basis[j] + "]");
            if (auto it = listed.find({j, i}); it != listed.end()) {
                if (doc.brackets[it->second].value == -value)
                    throw ParseError(at, "bracket [" + doc.basis[i] + ", " + doc.basis[j] + "] is already implied by [" +
                                             doc.basis[j] + ", " + doc.basis[i] + "]");
                throw ParseError(at, "inconsistent antisymmetric pair [" + doc.basis[j] + ", " + doc.basis[i] +
                                         "] and [" + doc.basis[i] + ", " + doc.basis[j] + "]");
            }
            listed.emplace(std::make_pair(i, j), doc.brackets.size());
            doc.brackets.push_back({i, j, std::move(value), at});
        } else if (key.text == "vertical") {
            if (doc.vertical) throw ParseError(at, "'vertical' given twice");
            if (!have_basis) throw ParseError(at, "'basis' must precede 'vertical'");
            if (words.size() < 2) throw ParseError(at, "'vertical' needs at least one basis name");
            std::vector<std::size_t> indices;
            for (std::size_t w = 1; w < words.size(); ++w) {
                const std::size_t index = basis_index(words[w]);
                if (std::find(indices.begin(), indices.end(), index) != indices.end())
                    throw ParseError({line_no, words[w].column}, "vertical lists '" + std::string(words[w].text) + "' twice");
                indices.push_back(index);
            }
            std::sort(indices.begin(), indices.end());
            doc.vertical = std::move(indices);
        } else {
            throw ParseError(at, "unknown directive '" + std::string(key.text) + "'");
        }
    }

    const SourcePosition end{line_no == 0 ? 1 : line_no, 1};
    if (!have_dim) throw ParseError(end, "missing 'dim' line");
    if (!have_basis) throw ParseError(end, "missing 'basis' line");
    if (!have_metric) throw ParseError(end, "missing 'metric orthonormal' line");
    return doc;
}

LieAlgebraSpec AlgebraDocument::to_spec() const {
    LieAlgebraBuilder builder(basis, params);
    for (const auto& b : brackets) builder.set(b.i, b.j, b.value);
    LieAlgebraSpec g = builder.build();
    return g.with_vertical(vertical);
}

bool operator==(const AlgebraDocument& a, const AlgebraDocument& b) {
    if (a.dim != b.dim || a.basis != b.basis || a.vertical != b.vertical) return false;
    if (!a.params || !b.params || a.params->names() != b.params->names()) return false;
    if (a.brackets.size() != b.brackets.size()) return false;
    for (std::size_t n = 0; n < a.brackets.size(); ++n) {
        const auto& x = a.brackets[n];
        const auto& y = b.brackets[n];
        if (x.i != y.i || x.j != y.j || x.value != y.value) return false;
    }
    return true;
}

std::string format_algebra_file(const AlgebraDocument& doc) {
    std::ostringstream out;
    out << "dim " << doc.dim << '\n';
    out << "basis";
    for (const auto& b : doc.basis) out << ' ' << b;
    out << "\nparams";
    if (doc.params) {
        for (const auto& p : doc.params->names()) out << ' ' << p;
    }
    out << "\nmetric orthonormal\n";
    for (const auto& b : doc.brackets) {
        out << "bracket " << doc.basis[b.i] << ' ' << doc.basis[b.j] << " = " << format_vector(b.value, doc.basis)
            << '\n';
    }
    if (doc.vertical) {
        out << "vertical";
        for (auto v : *doc.vertical) out << ' ' << doc.basis[v];
        out << '\n';
    }
    return out.str();
}

AlgebraDocument to_document(const LieAlgebraSpec& g) {
    AlgebraDocument doc;
    doc.dim = g.dim();
    doc.basis = g.basis();
    doc.params = g.params();
    doc.vertical = g.vertical();
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            Vector v = g.bracket_of(i, j);
            if (!v.is_zero()) doc.brackets.push_back({i, j, std::move(v), {}});
        }
    }
    return doc;
}

}  // namespace invgeo
