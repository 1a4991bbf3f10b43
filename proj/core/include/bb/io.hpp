#pragma once

#include "bb/hardness.hpp"
#include "bb/monomial.hpp"
#include "bb/polynomial.hpp"
#include "bb/preference.hpp"
#include "bb/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bb {

// An ordered set of distinct variable names. Names must look like C
// identifiers ([A-Za-z_][A-Za-z0-9_]*).
class VarTable {
  public:
    // Throws parse_error on empty, duplicate, or ill-formed names.
    explicit VarTable(std::vector<std::string> names);
    // The default names x1, ..., xn.
    static VarTable numbered(unsigned n);

    unsigned size() const { return static_cast<unsigned>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<unsigned> index(const std::string& name) const;

  private:
    std::vector<std::string> names_;
};

// Parses a polynomial written as a signed sum of terms. Each term is an
// optional rational coefficient ("3", "-1/2") followed by an optional '*'
// and a product of powers like x^2*y. Whitespace is insignificant. Throws
// parse_error (with a byte offset) on malformed input or unknown variables.
Polynomial parse_polynomial(const std::string& text, const VarTable& vars);

// A generator system file:
//   # comment
//   vars x y z
//   x^2 - y
//   ...
// The first significant line must declare the variables; every later
// significant line is one polynomial. '#' starts a comment anywhere.
struct PolynomialSystem {
    VarTable vars;
    std::vector<Polynomial> polynomials;
};
PolynomialSystem parse_system(std::istream& in);
PolynomialSystem parse_system(const std::string& text);
// Canonical form: a "vars" line, then one polynomial per line. Parsing the
// output reproduces the system exactly.
void write_system(std::ostream& out, const PolynomialSystem& system);

// A point set file:
//   # comment
//   dim 3
//   0 0 1
//   1/2 -1 0
// Coordinates are rationals separated by whitespace, one point per line.
// Duplicate points are rejected.
struct PointSet {
    unsigned dimension = 0;
    std::vector<std::vector<Rational>> points;
};
PointSet parse_points(std::istream& in);
PointSet parse_points(const std::string& text);

// Generators of the ideal of all polynomials vanishing on the given points:
// per degree, a basis of the new relations found in the kernel of the
// evaluation matrix, stopping once the accumulated ideal covers the top
// degree and its quotient dimension equals the number of points. Throws
// degree_cap_error if the cap is reached first.
std::vector<Polynomial> vanishing_ideal(const PointSet& points, unsigned degree_cap = 20);

// Parses a canonical monomial key like "x1^2.x2" ("1" is the unit monomial)
// over the numbered variables x1..xn.
Monomial parse_monomial_key(const std::string& key, unsigned var_count);

// A preference is a JSON object mapping monomial keys to integer weights:
//   {"x1.x2": 3, "x2^2": -1}
Preference parse_preference(const std::string& text, unsigned var_count);
std::string preference_to_json(const Preference& c);

// A graph file: first significant line "n m" (vertex and edge counts), then
// m lines "u v" with 1-based endpoints. '#' starts a comment anywhere.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);

} // namespace bb
