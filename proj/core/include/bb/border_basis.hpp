#pragma once

#include "bb/linalg.hpp"
#include "bb/order_ideal.hpp"
#include "bb/polynomial.hpp"
#include "bb/stable_span.hpp"
#include "bb/term_order.hpp"
#include "bb/universe.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bb {

// Per-degree sizes of a degree-compatible order ideal of the ideal:
// sizes[i] = (number of degree-i monomials) - (number of degree-i rows of the
// canonical form). Trailing zeros are trimmed, so the vector length is the
// first degree from which the quotient contributes nothing.
struct DegreeSignature {
    std::vector<unsigned> sizes;

    unsigned at(unsigned degree) const {
        return degree < sizes.size() ? sizes[degree] : 0;
    }
    std::uint64_t quotient_dimension() const;
    // "(1, 4, 5)"; "()" for the zero quotient.
    std::string str() const;

    bool operator==(const DegreeSignature& other) const = default;
};

// Reads the signature off a canonical form. The form must be stabilized and
// must cover its top degree (every top-degree monomial is a pivot), otherwise
// the block sizes do not measure the ideal's filtration.
DegreeSignature degree_signature(const CanonicalForm& m);

// A border basis: for the order ideal O = {t_1..t_mu} with border
// {b_1..b_nu}, the elements g_j = b_j - sum_i alpha(i,j) t_i, one per border
// term, in border order. Each element is supported on its border term (with
// coefficient 1) plus O. Immutable after construction.
class BorderBasis {
public:
    // elements[j] must match border(order_ideal)[j]; throws precondition_error
    // when the count, the unit border coefficient, or the support shape fails.
    BorderBasis(OrderIdeal order_ideal, std::vector<Polynomial> elements);

    unsigned var_count() const { return order_ideal_.var_count(); }
    const OrderIdeal& order_ideal() const { return order_ideal_; }
    const std::vector<Monomial>& border_terms() const { return border_; }
    const std::vector<Polynomial>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    // g_j = b_j - sum_i alpha(i, j) t_i, with t_i = order_ideal().monomials()[i].
    Rational alpha(std::size_t i, std::size_t j) const;

    bool operator==(const BorderBasis& other) const;

private:
    OrderIdeal order_ideal_;
    std::vector<Monomial> border_;
    std::vector<Polynomial> elements_;
};

// Final reduction: interreduces a stabilized span fully and extracts the
// border basis rows. Requires span.stabilized, o exactly the complement of
// the span's leading terms within the universe, and the border of o inside
// the universe; throws precondition_error otherwise.
BorderBasis final_reduction(const SpanBasis& span, const OrderIdeal& o);

// Basis transformation: eliminates the span under the column order that
// moves all o-columns to the right (both parts descending canonically), so
// row heads land outside o exactly when o is admissible. Rows whose head is
// a border term form the basis. Throws inadmissible_error when a head falls
// into o or the row count differs from |universe| - |o|; precondition_error
// when o or its border leaves the universe or span.stabilized is unset.
BorderBasis transform_basis(const SpanBasis& span, const OrderIdeal& o);

// Classic pipeline: grows the universe until the span covers its top degree,
// takes O = non-leading-term monomials, and runs the final reduction.
// Throws degree_cap_error when the cap is hit first.
BorderBasis border_basis_classic(const std::vector<Polynomial>& f, const TermOrdering& ordering,
                                 unsigned degree_cap = 20);

// Checks the border-basis definition against a generating system inside a
// universe: (i) element shape b_j - tail in <O>, (ii) every element lies in
// the stable span of f within the universe, (iii) the span and <O> decompose
// the whole truncated polynomial space (dimension count and joint rank).
// Returns false (never throws) on failure; *diagnostic, when given, receives
// the first failed condition.
bool verify_border_basis(const BorderBasis& basis, const std::vector<Polynomial>& f,
                         const Universe& universe, std::string* diagnostic = nullptr);

} // namespace bb
