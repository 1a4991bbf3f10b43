#include "bb/term_order.hpp"

#include "bb/errors.hpp"

#include <algorithm>
#include <numeric>

namespace bb {

TermOrdering::TermOrdering(OrderKind kind, std::vector<unsigned> priority)
    : kind_(kind), priority_(std::move(priority)) {}

TermOrdering TermOrdering::degrevlex(unsigned var_count) {
    std::vector<unsigned> priority(var_count);
    std::iota(priority.begin(), priority.end(), 0u);
    return TermOrdering(OrderKind::degrevlex, std::move(priority));
}

TermOrdering TermOrdering::deglex(unsigned var_count) {
    std::vector<unsigned> priority(var_count);
    std::iota(priority.begin(), priority.end(), 0u);
    return TermOrdering(OrderKind::deglex, std::move(priority));
}

TermOrdering TermOrdering::make(OrderKind kind, std::vector<unsigned> priority) {
    std::vector<unsigned> sorted(priority);
    std::sort(sorted.begin(), sorted.end());
    for (unsigned i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != i) {
            throw precondition_error("variable priority is not a permutation");
        }
    }
    return TermOrdering(kind, std::move(priority));
}

std::strong_ordering TermOrdering::compare(const Monomial& a, const Monomial& b) const {
    if (a.var_count() != var_count() || b.var_count() != var_count()) {
        throw precondition_error("term ordering applied to wrong variable count");
    }
    if (a.degree() != b.degree()) {
        return a.degree() <=> b.degree();
    }
    if (kind_ == OrderKind::deglex) {
        // First priority position with differing exponent decides; the larger
        // exponent wins.
        for (unsigned rank = 0; rank < var_count(); ++rank) {
            unsigned v = priority_[rank];
            if (a.exponent(v) != b.exponent(v)) {
                return a.exponent(v) <=> b.exponent(v);
            }
        }
        return std::strong_ordering::equal;
    }
    // Degrevlex: the last priority position with differing exponent decides;
    // the smaller exponent wins.
    for (unsigned rank = var_count(); rank-- > 0;) {
        unsigned v = priority_[rank];
        if (a.exponent(v) != b.exponent(v)) {
            return b.exponent(v) <=> a.exponent(v);
        }
    }
    return std::strong_ordering::equal;
}

} // namespace bb
