#pragma once

#include "bb/border_basis.hpp"
#include "bb/linalg.hpp"
#include "bb/optimize.hpp"
#include "bb/polytope.hpp"
#include "bb/preference.hpp"
#include "bb/stable_span.hpp"

#include <functional>
#include <vector>

namespace bb {

// Everything derived from a terminal stable span in one place: the span, its
// canonical form, the degree signature, the per-degree rank oracle, and the
// 0/1 constraint model. Immutable after construction; safe to share.
struct StableModel {
    SpanBasis span;
    CanonicalForm canonical;
    DegreeSignature signature;
    RankOracle oracle;
    PolytopeModel model;
};

// Grows the universe until the span covers its top degree, then derives the
// admissibility machinery. Throws degree_cap_error when the cap is reached
// first (the ideal is then likely not zero-dimensional).
StableModel build_stable_model(const std::vector<Polynomial>& f, const TermOrdering& ordering,
                               unsigned degree_cap = 20);

// Strategy hook choosing the order ideal for the generalized pipeline.
using OrderIdealSelector = std::function<OrderIdeal(const StableModel&)>;

// The classical choice: the complement of the span's leading terms.
OrderIdealSelector term_order_selector();
// The admissible order ideal with maximal preference score.
OrderIdealSelector preference_selector(Preference c, EnumerationOptions options = {});
// A fixed order ideal supplied by the caller.
OrderIdealSelector explicit_selector(OrderIdeal o);

// Generalized pipeline: builds the stable model, lets the selector pick an
// order ideal, validates it against the rank oracle, and extracts the basis
// by the head-based transformation. Throws inadmissible_error when the
// selector's choice fails the oracle.
BorderBasis border_basis_general(const StableModel& model, const OrderIdealSelector& selector);
BorderBasis border_basis_general(const std::vector<Polynomial>& f, const TermOrdering& ordering,
                                 const OrderIdealSelector& selector, unsigned degree_cap = 20);

} // namespace bb
