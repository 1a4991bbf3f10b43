#include "bb/polynomial.hpp"

#include "bb/errors.hpp"

#include <algorithm>
#include <map>

namespace bb {

namespace {

struct TermLess {
    bool operator()(const Term& a, const Term& b) const {
        return column_before(a.monomial, b.monomial);
    }
};

} // namespace

Polynomial::Polynomial(unsigned var_count, std::vector<Term> terms)
    : var_count_(var_count) {
    for (const Term& t : terms) {
        if (t.monomial.var_count() != var_count_) {
            throw precondition_error("term variable count mismatch");
        }
    }
    std::sort(terms.begin(), terms.end(), TermLess{});
    terms_.reserve(terms.size());
    for (Term& t : terms) {
        if (!terms_.empty() && terms_.back().monomial == t.monomial) {
            terms_.back().coefficient += t.coefficient;
            if (bb::is_zero(terms_.back().coefficient)) {
                terms_.pop_back();
            }
        } else if (!bb::is_zero(t.coefficient)) {
            terms_.push_back(std::move(t));
        }
    }
}

Polynomial Polynomial::constant(unsigned var_count, const Rational& value) {
    return Polynomial(var_count, {Term{Monomial::unit(var_count), value}});
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Rational& coeff) {
    return Polynomial(m.var_count(), {Term{m, coeff}});
}

unsigned Polynomial::degree() const {
    if (terms_.empty()) {
        throw precondition_error("degree of the zero polynomial is undefined");
    }
    return terms_.front().monomial.degree();
}

Rational Polynomial::coefficient(const Monomial& m) const {
    for (const Term& t : terms_) {
        if (t.monomial == m) {
            return t.coefficient;
        }
    }
    return Rational(0);
}

std::vector<Monomial> Polynomial::support() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        out.push_back(t.monomial);
    }
    return out;
}

Polynomial Polynomial::axpy(const Rational& factor, const Polynomial& other) const {
    if (var_count_ != other.var_count_) {
        throw precondition_error("polynomial arithmetic across variable counts");
    }
    if (bb::is_zero(factor) || other.is_zero()) {
        return *this;
    }
    Polynomial result(var_count_);
    result.terms_.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < terms_.size() || j < other.terms_.size()) {
        bool take_left;
        if (i == terms_.size()) {
            take_left = false;
        } else if (j == other.terms_.size()) {
            take_left = true;
        } else if (terms_[i].monomial == other.terms_[j].monomial) {
            Rational c = terms_[i].coefficient + factor * other.terms_[j].coefficient;
            if (!bb::is_zero(c)) {
                result.terms_.push_back(Term{terms_[i].monomial, std::move(c)});
            }
            ++i;
            ++j;
            continue;
        } else {
            take_left = column_before(terms_[i].monomial, other.terms_[j].monomial);
        }
        if (take_left) {
            result.terms_.push_back(terms_[i]);
            ++i;
        } else {
            result.terms_.push_back(
                Term{other.terms_[j].monomial, factor * other.terms_[j].coefficient});
            ++j;
        }
    }
    return result;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    return axpy(Rational(1), other);
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return axpy(Rational(-1), other);
}

Polynomial Polynomial::operator-() const {
    return scaled(Rational(-1));
}

Polynomial Polynomial::scaled(const Rational& factor) const {
    if (bb::is_zero(factor)) {
        return Polynomial(var_count_);
    }
    Polynomial result(*this);
    for (Term& t : result.terms_) {
        t.coefficient *= factor;
    }
    return result;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
    Polynomial result(*this);
    for (Term& t : result.terms_) {
        t.monomial = t.monomial * m;
    }
    // Multiplying by a fixed monomial preserves the canonical term order.
    return result;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (var_count_ != other.var_count_) {
        throw precondition_error("polynomial arithmetic across variable counts");
    }
    std::vector<Term> terms;
    terms.reserve(terms_.size() * other.terms_.size());
    for (const Term& a : terms_) {
        for (const Term& b : other.terms_) {
            terms.push_back(Term{a.monomial * b.monomial, a.coefficient * b.coefficient});
        }
    }
    return Polynomial(var_count_, std::move(terms));
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != var_count_) {
        throw precondition_error("evaluation point dimension mismatch");
    }
    Rational total(0);
    for (const Term& t : terms_) {
        Rational value = t.coefficient;
        for (unsigned v = 0; v < var_count_; ++v) {
            for (unsigned e = 0; e < t.monomial.exponent(v); ++e) {
                value *= point[v];
            }
        }
        total += value;
    }
    return total;
}

bool Polynomial::operator==(const Polynomial& other) const {
    return var_count_ == other.var_count_ && terms_ == other.terms_;
}

std::string Polynomial::str() const {
    std::vector<std::string> names;
    names.reserve(var_count_);
    for (unsigned i = 0; i < var_count_; ++i) {
        names.push_back("x" + std::to_string(i + 1));
    }
    return str(names);
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        Rational c = abs(t.coefficient);
        bool negative = sgn(t.coefficient) < 0;
        if (i == 0) {
            if (negative) {
                out += "-";
            }
        } else {
            out += negative ? " - " : " + ";
        }
        if (t.monomial.is_unit()) {
            out += to_string(c);
        } else if (c == 1) {
            out += t.monomial.str(names);
        } else {
            out += to_string(c);
            out += "*";
            out += t.monomial.str(names);
        }
    }
    return out;
}

const Monomial& leading_term(const Polynomial& p, const TermOrdering& ordering) {
    if (p.is_zero()) {
        throw precondition_error("leading term of the zero polynomial is undefined");
    }
    const Term* best = &p.terms().front();
    for (const Term& t : p.terms()) {
        if (ordering.greater(t.monomial, best->monomial)) {
            best = &t;
        }
    }
    return best->monomial;
}

Rational leading_coefficient(const Polynomial& p, const TermOrdering& ordering) {
    return p.coefficient(leading_term(p, ordering));
}

Polynomial leading_form(const Polynomial& p) {
    if (p.is_zero()) {
        return p;
    }
    unsigned d = p.degree();
    std::vector<Term> terms;
    for (const Term& t : p.terms()) {
        if (t.monomial.degree() == d) {
            terms.push_back(t);
        }
    }
    return Polynomial(p.var_count(), std::move(terms));
}

} // namespace bb
