#pragma once

#include "bb/monomial.hpp"

#include <map>
#include <optional>
#include <vector>

namespace bb {

// True iff the set is downward closed under divisibility (every divisor of a
// member is a member). The empty set qualifies.
bool is_order_ideal(const std::vector<Monomial>& monomials);

// A finite downward-closed set of monomials. Immutable after construction.
// The variable count is part of the value so that the empty order ideal still
// knows its ambient ring.
class OrderIdeal {
public:
    // Validates downward-closure; throws precondition_error otherwise.
    OrderIdeal(unsigned var_count, std::vector<Monomial> monomials);
    static OrderIdeal empty(unsigned var_count) { return OrderIdeal(var_count, {}); }

    unsigned var_count() const { return var_count_; }
    std::size_t size() const { return sorted_.size(); }
    bool contains(const Monomial& m) const;
    // Members sorted by degree ascending, degrevlex-descending within degree.
    const std::vector<Monomial>& monomials() const { return sorted_; }
    // The degree-i members (same inner order); empty vector if none.
    const std::vector<Monomial>& slice(unsigned degree) const;
    // Largest member degree; 0 for the empty set.
    unsigned max_degree() const;
    // Per-degree cardinalities |slice(0)|, ..., |slice(max_degree)|.
    std::vector<unsigned> slice_sizes() const;

    bool operator==(const OrderIdeal& other) const;

private:
    unsigned var_count_;
    std::vector<Monomial> sorted_;
    std::map<unsigned, std::vector<Monomial>> slices_;
};

// The border: monomials x_j * t for t in the ideal and each variable x_j,
// minus the ideal itself; sorted like OrderIdeal::monomials(). The border of
// the empty order ideal is {1} by convention.
std::vector<Monomial> border(const OrderIdeal& ideal);

} // namespace bb
