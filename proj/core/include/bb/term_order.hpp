#pragma once

#include "bb/monomial.hpp"

#include <compare>
#include <vector>

namespace bb {

enum class OrderKind {
    degrevlex, // degree, then reverse lexicographic on the priority order
    deglex,    // degree, then lexicographic on the priority order
};

// A degree-compatible term ordering: monomials are compared by total degree
// first, ties broken by the chosen tie rule over a variable priority
// permutation (priority[0] is the most significant variable).
class TermOrdering {
public:
    static TermOrdering degrevlex(unsigned var_count);
    static TermOrdering deglex(unsigned var_count);
    // priority must be a permutation of {0, ..., var_count-1}.
    static TermOrdering make(OrderKind kind, std::vector<unsigned> priority);

    OrderKind kind() const { return kind_; }
    unsigned var_count() const { return static_cast<unsigned>(priority_.size()); }
    const std::vector<unsigned>& priority() const { return priority_; }

    // <0, ==0, >0 resp. a < b, a == b, a > b in the ordering.
    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::greater;
    }

    bool operator==(const TermOrdering& other) const = default;

private:
    TermOrdering(OrderKind kind, std::vector<unsigned> priority);

    OrderKind kind_;
    std::vector<unsigned> priority_;
};

} // namespace bb
