#pragma once

#include "bb/border_basis.hpp"
#include "bb/hardness.hpp"
#include "bb/order_ideal.hpp"
#include "bb/polynomial.hpp"
#include "bb/preference.hpp"
#include "bb/rational.hpp"
#include "bb/term_order.hpp"
#include "bb/universe.hpp"

#include <cstdint>
#include <utility>
#include <vector>

// First-principles reference implementations used to cross-check the library:
// nothing here touches the span/canonical-form/oracle machinery. Everything
// is exhaustive or textbook-direct capability, built only on the arithmetic
// types, and intended for small inputs.
namespace bb::testing {

// Componentwise maximum of the exponent vectors.
Monomial lcm(const Monomial& a, const Monomial& b);

// Full multivariate division remainder of p by the set g: no remainder term
// is divisible by any leading term of g.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& g,
                       const TermOrdering& ordering);

// Textbook Buchberger fixpoint returning the reduced Groebner basis (monic,
// interreduced, sorted by leading term). Exponential worst case; desk-scale
// inputs only.
std::vector<Polynomial> groebner_basis(std::vector<Polynomial> f, const TermOrdering& ordering);

// Per-degree sizes of the staircase (monomials outside the leading-term
// ideal). Throws precondition_error when the staircase is infinite (checked
// against a generous degree cap).
DegreeSignature staircase_signature(const std::vector<Polynomial>& gb,
                                    const TermOrdering& ordering);

// Spanning rows of the degree-<= bound slice of the ideal generated by a
// Groebner basis under a degree-compatible ordering: every multiple m * g
// with deg(m * g) <= bound. (The standard-representation property makes
// these span the full truncation.)
std::vector<Polynomial> ideal_truncation(const std::vector<Polynomial>& gb, unsigned var_count,
                                         unsigned bound);

// Every downward-closed monomial set whose per-degree sizes match the
// signature, enumerated directly over the full monomial slices (no oracle,
// no model). Deterministic order.
std::vector<OrderIdeal> closed_signature_sets(unsigned var_count, const DegreeSignature& sig);

// True iff the span of o's members intersects the span of the truncation
// rows trivially: rank([rows; units of o]) = rank(rows) + |o| over the full
// degree-<= bound universe. `truncation_rank` must be the precomputed rank
// of the rows alone.
bool rank_admissible(const OrderIdeal& o, const std::vector<Polynomial>& truncation_rows,
                     std::size_t truncation_rank, unsigned bound);

// closed_signature_sets filtered by rank_admissible against the Groebner
// truncation: the reference answer for "order ideals supporting a border
// basis".
std::vector<OrderIdeal> reference_admissible_sets(unsigned var_count, const DegreeSignature& sig,
                                                  const std::vector<Polynomial>& gb);

// Fraction-free integer (Bareiss) rank of a dense rational matrix; an
// algorithmically independent check of matrix_rank.
std::size_t bareiss_rank(std::vector<std::vector<Rational>> matrix);

// Exhaustive k-clique test.
bool brute_force_has_clique(const Graph& g, unsigned k);

// Maximum preference score over every downward-closed subset of the
// universe, by enumerating all 2^|L| subsets. |L| <= 25 enforced.
long long brute_force_closure_score(const Universe& u, const Preference& c);

} // namespace bb::testing
