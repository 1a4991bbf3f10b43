#pragma once

#include "bb/io.hpp"
#include "bb/polynomial.hpp"

#include <string>
#include <vector>

namespace bb::testing {

// Shorthand monomial from an exponent vector.
Monomial mono(std::vector<unsigned> exponents);

// parse_polynomial over the numbered variables x1..xn.
Polynomial poly(const std::string& text, unsigned var_count);

// x1 + x2 + x3 - x4 - x5 together with x_i^{e_i} - x_i, where `exponents`
// holds the five digits e_1..e_5 (e.g. "22222", "33222").
std::vector<Polynomial> balance5_system(const std::string& exponents);

// x1 + x2 + x3 - x4 - x5 + x6 together with all six x_i^2 - x_i.
std::vector<Polynomial> balance6_system();

// {x1^3, x1*x2^2 + x2^3} in two variables.
std::vector<Polynomial> cubic_pair_system();

// The seven rational points in dimension 4 whose vanishing ideal has
// signature (1, 4, 2).
PointSet seven_points();

// vanishing_ideal(seven_points()).
std::vector<Polynomial> seven_points_system();

// {x1^3 + x1*x2, x1^2*x2, x1*x2^2, x2^3}: a deglex Groebner basis whose
// standard order ideal is all monomials of degree <= 2 and which also
// admits the non-degree-compatible order ideal
// {1, x1, x2, x1^2, x1^3, x2^2}.
std::vector<Polynomial> square_example_system();

// {x2^2 + x1*x2 + x1^2, x1*x2^2, x2^4}: a homogeneous ideal admitting the
// order ideal {1, x1, x2, x1^2, x2^2, x2^3}, which no term ordering induces.
std::vector<Polynomial> twisted_example_system();

} // namespace bb::testing
