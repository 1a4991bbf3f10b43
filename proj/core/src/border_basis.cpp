#include "bb/border_basis.hpp"

#include "bb/errors.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace bb {

std::uint64_t DegreeSignature::quotient_dimension() const {
    std::uint64_t total = 0;
    for (unsigned s : sizes) {
        total += s;
    }
    return total;
}

std::string DegreeSignature::str() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i > 0) {
            out << ", ";
        }
        out << sizes[i];
    }
    out << ')';
    return out.str();
}

DegreeSignature degree_signature(const CanonicalForm& m) {
    if (!m.stabilized) {
        throw precondition_error("degree signature requires a stabilized canonical form");
    }
    if (!m.covers_top_degree()) {
        throw precondition_error(
            "degree signature requires the top degree to be fully covered by pivots");
    }
    const unsigned n = m.universe.var_count();
    DegreeSignature sig;
    for (unsigned i = 0; i <= m.universe.degree_bound(); ++i) {
        const std::uint64_t all = monomial_count(n, i);
        const std::uint64_t cut = m.block(i).size();
        sig.sizes.push_back(static_cast<unsigned>(all - cut));
    }
    while (!sig.sizes.empty() && sig.sizes.back() == 0) {
        sig.sizes.pop_back();
    }
    return sig;
}

BorderBasis::BorderBasis(OrderIdeal order_ideal, std::vector<Polynomial> elements)
    : order_ideal_(std::move(order_ideal)),
      border_(border(order_ideal_)),
      elements_(std::move(elements)) {
    if (elements_.size() != border_.size()) {
        throw precondition_error("border basis needs exactly one element per border term (" +
                                 std::to_string(border_.size()) + " expected, " +
                                 std::to_string(elements_.size()) + " given)");
    }
    for (std::size_t j = 0; j < border_.size(); ++j) {
        const Polynomial& g = elements_[j];
        const Monomial& b = border_[j];
        if (g.var_count() != order_ideal_.var_count()) {
            throw precondition_error("border basis element in the wrong ring");
        }
        if (g.coefficient(b) != Rational(1)) {
            throw precondition_error("border term " + b.str() +
                                     " must carry coefficient 1 in its element");
        }
        for (const Term& t : g.terms()) {
            if (t.monomial != b && !order_ideal_.contains(t.monomial)) {
                throw precondition_error("element for border term " + b.str() +
                                         " has support outside the order ideal: " +
                                         t.monomial.str());
            }
        }
    }
}

Rational BorderBasis::alpha(std::size_t i, std::size_t j) const {
    if (i >= order_ideal_.size() || j >= elements_.size()) {
        throw precondition_error("alpha index out of range");
    }
    return -elements_[j].coefficient(order_ideal_.monomials()[i]);
}

bool BorderBasis::operator==(const BorderBasis& other) const {
    return order_ideal_ == other.order_ideal_ && elements_ == other.elements_;
}

namespace {

// Pivot monomial -> row index of a ReducedSet.
std::unordered_map<Monomial, std::size_t, MonomialHash> pivot_index(const ReducedSet& set) {
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    index.reserve(set.row_count());
    for (std::size_t s = 0; s < set.row_count(); ++s) {
        index.emplace(set.pivot_monomial(s), s);
    }
    return index;
}

void require_inside_universe(const std::vector<Monomial>& monomials, const Universe& universe,
                             const char* what) {
    for (const Monomial& m : monomials) {
        if (!universe.contains(m)) {
            throw precondition_error(std::string(what) + " leaves the universe: " + m.str());
        }
    }
}

} // namespace

BorderBasis final_reduction(const SpanBasis& span, const OrderIdeal& o) {
    if (!span.stabilized) {
        throw precondition_error("final reduction requires a stabilized span");
    }
    const Universe& universe = span.universe;
    require_inside_universe(o.monomials(), universe, "order ideal");
    const std::vector<Monomial> bord = border(o);
    require_inside_universe(bord, universe, "border");

    std::unordered_set<Monomial, MonomialHash> leading;
    leading.reserve(span.rows.size());
    for (const Polynomial& row : span.rows) {
        leading.insert(leading_term(row, span.ordering));
    }
    for (const Monomial& t : o.monomials()) {
        if (leading.count(t)) {
            throw precondition_error("order ideal intersects the span's leading terms at " +
                                     t.str());
        }
    }
    if (o.size() + span.rows.size() != universe.size()) {
        throw precondition_error(
            "order ideal is not the full complement of the span's leading terms");
    }

    auto columns = std::make_shared<const ColumnMap>(
        ColumnMap::sorted_descending(universe, span.ordering));
    ReducedSet reduced(columns, /*full_reduce=*/true);
    for (const Polynomial& row : span.rows) {
        reduced.insert(row);
    }
    auto rows_by_pivot = pivot_index(reduced);
    std::vector<Polynomial> elements;
    elements.reserve(bord.size());
    for (const Monomial& b : bord) {
        auto hit = rows_by_pivot.find(b);
        if (hit == rows_by_pivot.end()) {
            throw precondition_error("border term " + b.str() +
                                     " is not a leading term of the span");
        }
        elements.push_back(reduced.row_polynomial(hit->second));
    }
    return BorderBasis(o, std::move(elements));
}

BorderBasis transform_basis(const SpanBasis& span, const OrderIdeal& o) {
    if (!span.stabilized) {
        throw precondition_error("basis transformation requires a stabilized span");
    }
    const Universe& universe = span.universe;
    require_inside_universe(o.monomials(), universe, "order ideal");
    const std::vector<Monomial> bord = border(o);
    require_inside_universe(bord, universe, "border");

    // Column layout: everything outside o first, o-columns right-most, both
    // parts keeping the canonical universe order.
    std::vector<Monomial> layout;
    layout.reserve(universe.size());
    for (const Monomial& m : universe.columns()) {
        if (!o.contains(m)) {
            layout.push_back(m);
        }
    }
    for (const Monomial& m : universe.columns()) {
        if (o.contains(m)) {
            layout.push_back(m);
        }
    }
    auto columns = std::make_shared<const ColumnMap>(ColumnMap(std::move(layout)));
    ReducedSet reduced(columns, /*full_reduce=*/true);
    for (const Polynomial& row : span.rows) {
        reduced.insert(row);
    }
    if (reduced.row_count() + o.size() != universe.size()) {
        throw inadmissible_error("order ideal size " + std::to_string(o.size()) +
                                 " does not complement the span (need " +
                                 std::to_string(universe.size() - reduced.row_count()) + ")");
    }
    for (std::size_t s = 0; s < reduced.row_count(); ++s) {
        const Monomial& head = reduced.pivot_monomial(s);
        if (o.contains(head)) {
            throw inadmissible_error("elimination head lands inside the order ideal at " +
                                     head.str());
        }
    }
    auto rows_by_head = pivot_index(reduced);
    std::vector<Polynomial> elements;
    elements.reserve(bord.size());
    for (const Monomial& b : bord) {
        elements.push_back(reduced.row_polynomial(rows_by_head.at(b)));
    }
    return BorderBasis(o, std::move(elements));
}

BorderBasis border_basis_classic(const std::vector<Polynomial>& f, const TermOrdering& ordering,
                                 unsigned degree_cap) {
    SpanBasis span = terminal_span(f, ordering, degree_cap);
    std::unordered_set<Monomial, MonomialHash> leading;
    leading.reserve(span.rows.size());
    for (const Polynomial& row : span.rows) {
        leading.insert(leading_term(row, ordering));
    }
    std::vector<Monomial> complement;
    complement.reserve(span.universe.size() - span.rows.size());
    for (const Monomial& m : span.universe.columns()) {
        if (!leading.count(m)) {
            complement.push_back(m);
        }
    }
    OrderIdeal o(span.universe.var_count(), std::move(complement));
    return final_reduction(span, o);
}

namespace {

bool fail(std::string* diagnostic, const std::string& message) {
    if (diagnostic) {
        *diagnostic = message;
    }
    return false;
}

} // namespace

bool verify_border_basis(const BorderBasis& basis, const std::vector<Polynomial>& f,
                         const Universe& universe, std::string* diagnostic) {
    const OrderIdeal& o = basis.order_ideal();
    if (basis.var_count() != universe.var_count()) {
        return fail(diagnostic, "basis and universe live in different rings");
    }
    for (const Monomial& t : o.monomials()) {
        if (!universe.contains(t)) {
            return fail(diagnostic, "order ideal member outside the universe: " + t.str());
        }
    }
    for (const Monomial& b : basis.border_terms()) {
        if (!universe.contains(b)) {
            return fail(diagnostic, "border term outside the universe: " + b.str());
        }
    }
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const Polynomial& g = basis.elements()[j];
        const Monomial& b = basis.border_terms()[j];
        if (g.coefficient(b) != Rational(1)) {
            return fail(diagnostic, "border term " + b.str() + " lacks coefficient 1");
        }
        for (const Term& t : g.terms()) {
            if (t.monomial != b && !o.contains(t.monomial)) {
                return fail(diagnostic, "element support escapes {border term} + order ideal at " +
                                            t.monomial.str());
            }
        }
    }

    SpanBasis span({}, universe, TermOrdering::degrevlex(universe.var_count()), false);
    try {
        span = stable_span(f, universe, span.ordering);
    } catch (const precondition_error& e) {
        return fail(diagnostic, std::string("stable span unavailable: ") + e.what());
    }

    auto columns = std::make_shared<const ColumnMap>(
        ColumnMap::sorted_descending(universe, span.ordering));
    ReducedSet membership(columns, /*full_reduce=*/false);
    for (const Polynomial& row : span.rows) {
        membership.insert(row);
    }
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (!membership.reduce(basis.elements()[j]).is_zero()) {
            return fail(diagnostic, "element for border term " + basis.border_terms()[j].str() +
                                        " lies outside the span of the input system");
        }
    }

    if (span.rows.size() + o.size() != universe.size()) {
        return fail(diagnostic,
                    "span dimension " + std::to_string(span.rows.size()) + " plus order ideal size " +
                        std::to_string(o.size()) + " does not fill the universe (" +
                        std::to_string(universe.size()) + ")");
    }
    std::vector<Polynomial> stacked = span.rows;
    for (const Monomial& t : o.monomials()) {
        stacked.push_back(Polynomial(universe.var_count(), {Term{t, Rational(1)}}));
    }
    if (matrix_rank(stacked, universe.columns()) != universe.size()) {
        return fail(diagnostic, "span and order ideal overlap: joint rank is deficient");
    }
    return true;
}

} // namespace bb
