#pragma once

#include "bb/linalg.hpp"
#include "bb/polynomial.hpp"
#include "bb/term_order.hpp"
#include "bb/universe.hpp"

#include <vector>

namespace bb {

// All polynomials of f together with every product x_j * f_i, duplicates
// removed, in deterministic order (inputs first, then multiples by input and
// variable index).
std::vector<Polynomial> neighborhood_extension(const std::vector<Polynomial>& f);

// An echelon basis (pairwise distinct leading terms, leading coefficients 1)
// of the smallest subspace of <universe> that contains f and is closed under
// the one-step variable extension: extending by x_j and cutting back to the
// universe adds nothing new.
struct SpanBasis {
    std::vector<Polynomial> rows;
    Universe universe;
    TermOrdering ordering;
    bool stabilized = false;
};

// Iterates variable extension and elimination until no new row of degree
// <= universe bound appears. Inputs must be supported inside the universe;
// zero polynomials are dropped.
SpanBasis stable_span(const std::vector<Polynomial>& f, const Universe& universe,
                      const TermOrdering& ordering);

// True iff one more extension round adds no new row inside the universe.
// The extension is eliminated unfiltered (rows one degree above the bound
// participate as intermediaries) so cross-cancellations that fall back into
// the universe are seen.
bool is_stabilized(const SpanBasis& span);

// Runs stable_span with the bound growing from max(deg f) until every
// monomial of top degree is a leading term of the span; that bound makes the
// span the full truncation of the generated ideal. Throws degree_cap_error
// when the cap is reached first (the ideal is then likely not
// zero-dimensional).
SpanBasis terminal_span(const std::vector<Polynomial>& f, const TermOrdering& ordering,
                        unsigned degree_cap = 20);

} // namespace bb
