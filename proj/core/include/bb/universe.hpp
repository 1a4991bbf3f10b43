#pragma once

#include "bb/monomial.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace bb {

// C(n+k-1, k), the number of monomials of degree exactly k in n variables.
std::uint64_t monomial_count(unsigned var_count, unsigned degree);

// All monomials of degree exactly `degree` in `var_count` variables, listed
// in the canonical column order (degrevlex-descending within the degree).
std::vector<Monomial> monomials_of_degree(unsigned var_count, unsigned degree);

// The truncated monomial universe: all monomials of degree <= degree_bound in
// var_count variables, with the canonical matrix-column layout
// (degree-descending blocks, degrevlex-descending inside each block).
// Immutable after construction and freely shareable between threads.
class Universe {
public:
    Universe(unsigned var_count, unsigned degree_bound);

    unsigned var_count() const { return var_count_; }
    unsigned degree_bound() const { return degree_bound_; }
    std::size_t size() const { return columns_.size(); }

    // Columns left to right (degree d block first, degree 0 last).
    const std::vector<Monomial>& columns() const { return columns_; }
    // The degree-i block, degrevlex-descending. i <= degree_bound.
    const std::vector<Monomial>& block(unsigned degree) const;

    bool contains(const Monomial& m) const;
    // Position in columns(); throws precondition_error if absent.
    std::size_t column_index(const Monomial& m) const;

private:
    unsigned var_count_;
    unsigned degree_bound_;
    std::vector<std::vector<Monomial>> blocks_;
    std::vector<Monomial> columns_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

} // namespace bb
