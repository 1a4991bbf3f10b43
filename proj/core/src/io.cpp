#include "bb/io.hpp"

#include "bb/errors.hpp"
#include "bb/linalg.hpp"
#include "bb/stable_span.hpp"
#include "bb/term_order.hpp"
#include "bb/universe.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

namespace bb {

namespace {

bool identifier_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool identifier_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_identifier(const std::string& name) {
    if (name.empty() || !identifier_start(name[0])) {
        return false;
    }
    return std::all_of(name.begin(), name.end(), identifier_char);
}

} // namespace

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) {
        throw parse_error("no variable names given");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!is_identifier(names_[i])) {
            throw parse_error("invalid variable name '" + names_[i] + "'");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (names_[i] == names_[j]) {
                throw parse_error("duplicate variable name '" + names_[i] + "'");
            }
        }
    }
}

VarTable VarTable::numbered(unsigned n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (unsigned i = 1; i <= n; ++i) {
        names.push_back("x" + std::to_string(i));
    }
    return VarTable(std::move(names));
}

std::optional<unsigned> VarTable::index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) {
            return static_cast<unsigned>(i);
        }
    }
    return std::nullopt;
}

namespace {

// Recursive-descent parser for the polynomial grammar:
//   poly   := [sign] term (sign term)*
//   term   := coefficient ['*'] factors | coefficient | factors
//   coefficient := digits ['/' digits]
//   factors := factor (['*'] factor)*
//   factor := name ['^' digits]
// Whitespace may appear between any two tokens.
class PolyParser {
  public:
    PolyParser(const std::string& text, const VarTable& vars) : text_(text), vars_(vars) {}

    Polynomial parse() {
        skip_ws();
        if (at_end()) {
            fail("empty polynomial");
        }
        std::vector<Term> terms;
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        for (;;) {
            terms.push_back(parse_term(negative));
            skip_ws();
            if (at_end()) {
                break;
            }
            char c = peek();
            if (c != '+' && c != '-') {
                fail("expected '+' or '-' between terms");
            }
            negative = c == '-';
            ++pos_;
        }
        return Polynomial(vars_.size(), std::move(terms));
    }

  private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }
    [[noreturn]] void fail(const std::string& message) const { throw parse_error(message, pos_); }

    Term parse_term(bool negative) {
        skip_ws();
        if (at_end()) {
            fail("missing term");
        }
        Rational coefficient(1);
        bool have_coefficient = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coefficient = parse_coefficient();
            have_coefficient = true;
        }
        std::vector<unsigned> exponents(vars_.size(), 0);
        bool have_factor = false;
        bool want_factor = false;
        if (have_coefficient) {
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                want_factor = true;
            }
        }
        for (;;) {
            skip_ws();
            if (at_end() || !identifier_start(peek())) {
                break;
            }
            parse_factor(exponents);
            have_factor = true;
            want_factor = false;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                want_factor = true;
            }
        }
        if (want_factor) {
            fail("expected a variable after '*'");
        }
        if (!have_coefficient && !have_factor) {
            fail("expected a number or a variable");
        }
        if (negative) {
            coefficient = -coefficient;
        }
        return Term{Monomial(std::move(exponents)), std::move(coefficient)};
    }

    // name ['^' digits]; accumulates into the exponent vector.
    void parse_factor(std::vector<unsigned>& exponents) {
        std::size_t start = pos_;
        std::string name;
        while (!at_end() && identifier_char(peek())) {
            name += text_[pos_++];
        }
        std::optional<unsigned> index = vars_.index(name);
        if (!index) {
            throw parse_error("unknown variable '" + name + "'", start);
        }
        unsigned exponent = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            exponent = parse_exponent();
        }
        exponents[*index] += exponent;
    }

    unsigned parse_exponent() {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("expected an exponent after '^'");
        }
        unsigned long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + static_cast<unsigned long>(peek() - '0');
            if (value > 1000000) {
                fail("exponent too large");
            }
            ++pos_;
        }
        return static_cast<unsigned>(value);
    }

    Rational parse_coefficient() {
        Integer numerator = parse_digits("numerator");
        std::size_t after_numerator = pos_;
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t denominator_start = pos_;
            Integer denominator = parse_digits("denominator");
            if (denominator == 0) {
                throw parse_error("zero denominator", denominator_start);
            }
            return make_rational(numerator, denominator);
        }
        pos_ = after_numerator;
        return Rational(numerator);
    }

    Integer parse_digits(const char* what) {
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            fail(std::string("expected digits in ") + what);
        }
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += text_[pos_++];
        }
        return Integer(digits, 10);
    }

    const std::string& text_;
    const VarTable& vars_;
    std::size_t pos_ = 0;
};

// Strips comments ('#' to end of line) and surrounding whitespace.
std::string significant_part(const std::string& raw) {
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
        line.erase(hash);
    }
    std::size_t begin = line.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return "";
    }
    std::size_t end = line.find_last_not_of(" \t\r\n");
    return line.substr(begin, end - begin + 1);
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream stream(line);
    std::string token;
    while (stream >> token) {
        tokens.push_back(token);
    }
    return tokens;
}

[[noreturn]] void fail_line(unsigned line_no, const std::string& message) {
    throw parse_error("line " + std::to_string(line_no) + ": " + message);
}

unsigned parse_count(const std::string& token, const char* what, unsigned line_no) {
    if (token.empty() ||
        !std::all_of(token.begin(), token.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        fail_line(line_no, std::string("expected a non-negative integer ") + what);
    }
    try {
        unsigned long value = std::stoul(token);
        if (value > 1000000) {
            fail_line(line_no, std::string(what) + " out of range");
        }
        return static_cast<unsigned>(value);
    } catch (const std::out_of_range&) {
        fail_line(line_no, std::string(what) + " out of range");
    }
}

} // namespace

Polynomial parse_polynomial(const std::string& text, const VarTable& vars) {
    return PolyParser(text, vars).parse();
}

PolynomialSystem parse_system(std::istream& in) {
    std::optional<VarTable> vars;
    std::vector<Polynomial> polynomials;
    std::string raw;
    unsigned line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = significant_part(raw);
        if (line.empty()) {
            continue;
        }
        if (!vars) {
            std::vector<std::string> tokens = split_ws(line);
            if (tokens.empty() || tokens[0] != "vars") {
                fail_line(line_no, "expected a 'vars' header line");
            }
            tokens.erase(tokens.begin());
            try {
                vars.emplace(std::move(tokens));
            } catch (const parse_error& e) {
                fail_line(line_no, e.what());
            }
            continue;
        }
        try {
            polynomials.push_back(parse_polynomial(line, *vars));
        } catch (const parse_error& e) {
            fail_line(line_no, e.what());
        }
    }
    if (!vars) {
        throw parse_error("missing 'vars' header line");
    }
    return PolynomialSystem{std::move(*vars), std::move(polynomials)};
}

PolynomialSystem parse_system(const std::string& text) {
    std::istringstream stream(text);
    return parse_system(stream);
}

void write_system(std::ostream& out, const PolynomialSystem& system) {
    out << "vars";
    for (const std::string& name : system.vars.names()) {
        out << ' ' << name;
    }
    out << '\n';
    for (const Polynomial& p : system.polynomials) {
        out << p.str(system.vars.names()) << '\n';
    }
}

PointSet parse_points(std::istream& in) {
    std::optional<unsigned> dimension;
    std::vector<std::vector<Rational>> points;
    std::string raw;
    unsigned line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = significant_part(raw);
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> tokens = split_ws(line);
        if (!dimension) {
            if (tokens.size() != 2 || tokens[0] != "dim") {
                fail_line(line_no, "expected a 'dim <n>' header line");
            }
            unsigned n = parse_count(tokens[1], "dimension", line_no);
            if (n == 0) {
                fail_line(line_no, "dimension must be positive");
            }
            dimension = n;
            continue;
        }
        if (tokens.size() != *dimension) {
            fail_line(line_no, "expected " + std::to_string(*dimension) + " coordinates, found " +
                                   std::to_string(tokens.size()));
        }
        std::vector<Rational> point;
        point.reserve(tokens.size());
        for (const std::string& token : tokens) {
            try {
                point.push_back(parse_rational(token));
            } catch (const error& e) {
                fail_line(line_no, "bad coordinate '" + token + "': " + e.what());
            }
        }
        if (std::find(points.begin(), points.end(), point) != points.end()) {
            fail_line(line_no, "duplicate point");
        }
        points.push_back(std::move(point));
    }
    if (!dimension) {
        throw parse_error("missing 'dim' header line");
    }
    return PointSet{*dimension, std::move(points)};
}

PointSet parse_points(const std::string& text) {
    std::istringstream stream(text);
    return parse_points(stream);
}

namespace {

Rational evaluate_monomial(const Monomial& m, const std::vector<Rational>& point) {
    Rational value(1);
    for (unsigned i = 0; i < m.var_count(); ++i) {
        for (unsigned e = 0; e < m.exponent(i); ++e) {
            value *= point[i];
        }
    }
    return value;
}

// In-place reduced row echelon form; returns the pivot column of each
// surviving row (ascending) and truncates the zero rows.
std::vector<std::size_t> reduced_echelon(std::vector<std::vector<Rational>>& matrix) {
    std::vector<std::size_t> pivots;
    if (matrix.empty()) {
        return pivots;
    }
    std::size_t rows = matrix.size();
    std::size_t cols = matrix[0].size();
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < cols && next_row < rows; ++c) {
        std::size_t candidate = next_row;
        while (candidate < rows && is_zero(matrix[candidate][c])) {
            ++candidate;
        }
        if (candidate == rows) {
            continue;
        }
        std::swap(matrix[candidate], matrix[next_row]);
        Rational lead = matrix[next_row][c];
        for (std::size_t j = c; j < cols; ++j) {
            matrix[next_row][j] /= lead;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == next_row || is_zero(matrix[i][c])) {
                continue;
            }
            Rational factor = matrix[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                matrix[i][j] -= factor * matrix[next_row][j];
            }
        }
        pivots.push_back(c);
        ++next_row;
    }
    matrix.resize(pivots.size());
    return pivots;
}

} // namespace

std::vector<Polynomial> vanishing_ideal(const PointSet& points, unsigned degree_cap) {
    unsigned n = points.dimension;
    if (n == 0) {
        throw precondition_error("points need at least one coordinate");
    }
    if (points.points.empty()) {
        throw precondition_error("vanishing ideal needs at least one point");
    }
    for (std::size_t i = 0; i < points.points.size(); ++i) {
        if (points.points[i].size() != n) {
            throw precondition_error("point " + std::to_string(i + 1) +
                                     " does not match the declared dimension");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (points.points[i] == points.points[j]) {
                throw precondition_error("duplicate point at index " + std::to_string(i + 1));
            }
        }
    }

    TermOrdering ordering = TermOrdering::degrevlex(n);
    std::vector<Polynomial> generators;
    for (unsigned d = 1; d <= degree_cap; ++d) {
        Universe universe(n, d);
        // Ascending column layout: the kernel vector of a free column then has
        // that column's monomial as its leading term.
        std::vector<Monomial> columns = universe.columns();
        std::reverse(columns.begin(), columns.end());

        std::vector<std::vector<Rational>> matrix;
        matrix.reserve(points.points.size());
        for (const std::vector<Rational>& point : points.points) {
            std::vector<Rational> row;
            row.reserve(columns.size());
            for (const Monomial& m : columns) {
                row.push_back(evaluate_monomial(m, point));
            }
            matrix.push_back(std::move(row));
        }
        std::vector<std::size_t> pivots = reduced_echelon(matrix);
        std::vector<char> is_pivot(columns.size(), 0);
        for (std::size_t p : pivots) {
            is_pivot[p] = 1;
        }

        // Membership test against the ideal generated so far, extended with
        // each newly accepted relation.
        auto column_map =
            std::make_shared<const ColumnMap>(ColumnMap::sorted_descending(universe, ordering));
        ReducedSet reducer(column_map, /*full_reduce=*/false);
        if (!generators.empty()) {
            for (const Polynomial& row : stable_span(generators, universe, ordering).rows) {
                reducer.insert(row);
            }
        }
        for (std::size_t f = 0; f < columns.size(); ++f) {
            if (is_pivot[f]) {
                continue;
            }
            std::vector<Term> terms;
            terms.push_back({columns[f], Rational(1)});
            for (std::size_t r = 0; r < pivots.size(); ++r) {
                if (!is_zero(matrix[r][f])) {
                    terms.push_back({columns[pivots[r]], -matrix[r][f]});
                }
            }
            Polynomial relation(n, std::move(terms));
            if (!reducer.reduce(relation).is_zero()) {
                generators.push_back(relation);
                reducer.insert(relation);
            }
        }

        if (generators.empty()) {
            continue;
        }
        SpanBasis span = stable_span(generators, universe, ordering);
        std::size_t top_rows = 0;
        for (const Polynomial& row : span.rows) {
            if (row.degree() == d) {
                ++top_rows;
            }
        }
        bool covered = top_rows == monomial_count(n, d);
        bool expected_quotient = universe.size() - span.rows.size() == points.points.size();
        if (covered && expected_quotient) {
            return generators;
        }
    }
    throw degree_cap_error("degree cap " + std::to_string(degree_cap) +
                           " reached before the vanishing ideal stabilized");
}

namespace {

[[noreturn]] void bad_key(const std::string& key) {
    throw parse_error("invalid monomial key '" + key + "'");
}

unsigned long key_digits(const std::string& digits, const std::string& key) {
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        bad_key(key);
    }
    try {
        return std::stoul(digits);
    } catch (const std::out_of_range&) {
        bad_key(key);
    }
}

} // namespace

Monomial parse_monomial_key(const std::string& key, unsigned var_count) {
    if (key == "1") {
        return Monomial::unit(var_count);
    }
    if (key.empty()) {
        bad_key(key);
    }
    std::vector<unsigned> exponents(var_count, 0);
    std::size_t start = 0;
    while (start <= key.size()) {
        std::size_t dot = key.find('.', start);
        std::string part =
            dot == std::string::npos ? key.substr(start) : key.substr(start, dot - start);
        std::size_t caret = part.find('^');
        std::string variable_part = caret == std::string::npos ? part : part.substr(0, caret);
        if (variable_part.size() < 2 || variable_part[0] != 'x') {
            bad_key(key);
        }
        unsigned long index = key_digits(variable_part.substr(1), key);
        if (index == 0 || index > var_count) {
            throw parse_error("variable index out of range in monomial key '" + key + "'");
        }
        unsigned long exponent = 1;
        if (caret != std::string::npos) {
            exponent = key_digits(part.substr(caret + 1), key);
            if (exponent == 0 || exponent > 1000000) {
                bad_key(key);
            }
        }
        if (exponents[index - 1] != 0) {
            throw parse_error("repeated variable in monomial key '" + key + "'");
        }
        exponents[index - 1] = static_cast<unsigned>(exponent);
        if (dot == std::string::npos) {
            break;
        }
        start = dot + 1;
    }
    return Monomial(std::move(exponents));
}

Preference parse_preference(const std::string& text, unsigned var_count) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw parse_error("preference must be a JSON object mapping monomials to weights");
    }
    Preference c;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (!it.value().is_number_integer()) {
            throw parse_error("weight for '" + it.key() + "' must be an integer");
        }
        c.set(parse_monomial_key(it.key(), var_count), it.value().get<long long>());
    }
    return c;
}

std::string preference_to_json(const Preference& c) {
    std::vector<std::pair<Monomial, long long>> entries(c.weights().begin(), c.weights().end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) {
            return a.first.degree() < b.first.degree();
        }
        return column_before(a.first, b.first);
    });
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [monomial, weight] : entries) {
        out[monomial.str()] = weight;
    }
    return out.dump();
}

Graph parse_graph(std::istream& in) {
    std::optional<Graph> graph;
    std::size_t expected_edges = 0;
    std::size_t seen_edges = 0;
    std::string raw;
    unsigned line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = significant_part(raw);
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> tokens = split_ws(line);
        if (!graph) {
            if (tokens.size() != 2) {
                fail_line(line_no, "expected a header line with vertex and edge counts");
            }
            unsigned n = parse_count(tokens[0], "vertex count", line_no);
            expected_edges = parse_count(tokens[1], "edge count", line_no);
            graph.emplace(n);
            continue;
        }
        if (seen_edges == expected_edges) {
            fail_line(line_no, "unexpected content after the last edge");
        }
        if (tokens.size() != 2) {
            fail_line(line_no, "expected an edge line 'u v'");
        }
        unsigned u = parse_count(tokens[0], "endpoint", line_no);
        unsigned v = parse_count(tokens[1], "endpoint", line_no);
        if (u == 0 || v == 0 || u > graph->vertex_count() || v > graph->vertex_count()) {
            fail_line(line_no, "edge endpoint out of range (vertices are 1-based)");
        }
        try {
            graph->add_edge(u - 1, v - 1);
        } catch (const error& e) {
            fail_line(line_no, e.what());
        }
        ++seen_edges;
    }
    if (!graph) {
        throw parse_error("missing graph header line");
    }
    if (seen_edges != expected_edges) {
        throw parse_error("expected " + std::to_string(expected_edges) + " edges, found " +
                          std::to_string(seen_edges));
    }
    return std::move(*graph);
}

Graph parse_graph(const std::string& text) {
    std::istringstream stream(text);
    return parse_graph(stream);
}

} // namespace bb
