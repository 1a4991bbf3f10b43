#pragma once

#include "bb/errors.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bb {

// A power product of a fixed set of variables, stored as an exponent vector.
// The number of variables is part of the value; mixing monomials of different
// variable counts in one operation is a contract violation.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exponents);

    // The constant monomial in n variables (all exponents zero).
    static Monomial unit(unsigned var_count);
    // x_index (0-based) in n variables.
    static Monomial variable(unsigned index, unsigned var_count);

    unsigned var_count() const { return static_cast<unsigned>(exponents_.size()); }
    unsigned degree() const { return degree_; }
    unsigned exponent(unsigned index) const { return exponents_[index]; }
    const std::vector<unsigned>& exponents() const { return exponents_; }
    bool is_unit() const { return degree_ == 0; }

    Monomial operator*(const Monomial& other) const;
    // Exact division; throws precondition_error unless other divides *this.
    Monomial operator/(const Monomial& other) const;

    bool operator==(const Monomial& other) const = default;

    // The monomials m / x_j for each variable x_j with positive exponent,
    // i.e. all divisors one degree down. Distinct, in variable-index order.
    std::vector<Monomial> lower_neighbors() const;

    // Serialized form used in JSON, LP files and preference keys:
    // "1" for the unit, otherwise variables joined by '.', e.g. "x1^2.x2".
    std::string str() const;
    // Same shape but with caller-supplied variable names and '*' separators,
    // e.g. "x^2*y"; used by the polynomial pretty-printer.
    std::string str(const std::vector<std::string>& names) const;

private:
    std::vector<unsigned> exponents_;
    unsigned degree_ = 0;
};

// True iff a divides b (componentwise <=). Throws on var_count mismatch.
bool divides(const Monomial& a, const Monomial& b);

// Canonical matrix-column layout: higher total degree first, then
// degree-reverse-lexicographically larger first (priority x1 > x2 > ...).
// column_before(a, b) is true iff column a lies left of column b. This fixed
// layout is used for all coefficient matrices and for the term storage order
// inside Polynomial.
bool column_before(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 1469598103934665603ull;
        for (unsigned e : m.exponents()) {
            h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace bb
