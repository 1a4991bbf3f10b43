#pragma once

#include "bb/monomial.hpp"
#include "bb/rational.hpp"
#include "bb/term_order.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bb {

struct Term {
    Monomial monomial;
    Rational coefficient;

    bool operator==(const Term& other) const = default;
};

// A multivariate polynomial with exact rational coefficients, stored as a
// vector of nonzero terms sorted in the canonical column order (degree
// descending, degrevlex descending). The variable count is part of the value
// and is well defined even for the zero polynomial.
class Polynomial {
public:
    explicit Polynomial(unsigned var_count) : var_count_(var_count) {}
    // Merges duplicates, drops zero coefficients, sorts canonically.
    Polynomial(unsigned var_count, std::vector<Term> terms);

    static Polynomial zero(unsigned var_count) { return Polynomial(var_count); }
    static Polynomial constant(unsigned var_count, const Rational& value);
    static Polynomial from_monomial(const Monomial& m, const Rational& coeff = Rational(1));

    unsigned var_count() const { return var_count_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Total degree. Calling this on the zero polynomial is a contract
    // violation and throws precondition_error.
    unsigned degree() const;

    // Coefficient of m (zero if absent).
    Rational coefficient(const Monomial& m) const;
    std::vector<Monomial> support() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(const Rational& factor) const;
    Polynomial times_monomial(const Monomial& m) const;
    // *this + factor * other, the elimination workhorse.
    Polynomial axpy(const Rational& factor, const Polynomial& other) const;

    // Exact evaluation at a rational point (size must equal var_count).
    Rational evaluate(const std::vector<Rational>& point) const;

    bool operator==(const Polynomial& other) const;

    // Round-trippable text form, e.g. "x^2*y - 1/2*z + 3". Uses canonical
    // names x1..xn when no name table is given.
    std::string str() const;
    std::string str(const std::vector<std::string>& names) const;

private:
    unsigned var_count_;
    std::vector<Term> terms_; // canonical order, nonzero coefficients
};

// sigma-largest monomial of p. Contract violation on the zero polynomial.
const Monomial& leading_term(const Polynomial& p, const TermOrdering& ordering);
Rational leading_coefficient(const Polynomial& p, const TermOrdering& ordering);
// The homogeneous part of maximal total degree (ordering-independent).
Polynomial leading_form(const Polynomial& p);

} // namespace bb
