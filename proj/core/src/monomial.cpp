#include "bb/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace bb {

Monomial::Monomial(std::vector<unsigned> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0u)) {}

Monomial Monomial::unit(unsigned var_count) {
    return Monomial(std::vector<unsigned>(var_count, 0));
}

Monomial Monomial::variable(unsigned index, unsigned var_count) {
    if (index >= var_count) {
        throw precondition_error("variable index out of range");
    }
    std::vector<unsigned> exps(var_count, 0);
    exps[index] = 1;
    return Monomial(std::move(exps));
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (var_count() != other.var_count()) {
        throw precondition_error("monomial product across different variable counts");
    }
    std::vector<unsigned> exps(exponents_);
    for (unsigned i = 0; i < other.var_count(); ++i) {
        exps[i] += other.exponents_[i];
    }
    return Monomial(std::move(exps));
}

Monomial Monomial::operator/(const Monomial& other) const {
    if (!bb::divides(other, *this)) {
        throw precondition_error("monomial division is not exact");
    }
    std::vector<unsigned> exps(exponents_);
    for (unsigned i = 0; i < other.var_count(); ++i) {
        exps[i] -= other.exponents_[i];
    }
    return Monomial(std::move(exps));
}

std::vector<Monomial> Monomial::lower_neighbors() const {
    std::vector<Monomial> result;
    for (unsigned i = 0; i < var_count(); ++i) {
        if (exponents_[i] > 0) {
            std::vector<unsigned> exps(exponents_);
            --exps[i];
            result.emplace_back(std::move(exps));
        }
    }
    return result;
}

std::string Monomial::str() const {
    if (is_unit()) {
        return "1";
    }
    std::string out;
    for (unsigned i = 0; i < var_count(); ++i) {
        if (exponents_[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '.';
        }
        out += 'x';
        out += std::to_string(i + 1);
        if (exponents_[i] > 1) {
            out += '^';
            out += std::to_string(exponents_[i]);
        }
    }
    return out;
}

std::string Monomial::str(const std::vector<std::string>& names) const {
    if (names.size() != var_count()) {
        throw precondition_error("variable name table size mismatch");
    }
    if (is_unit()) {
        return "1";
    }
    std::string out;
    for (unsigned i = 0; i < var_count(); ++i) {
        if (exponents_[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += names[i];
        if (exponents_[i] > 1) {
            out += '^';
            out += std::to_string(exponents_[i]);
        }
    }
    return out;
}

bool divides(const Monomial& a, const Monomial& b) {
    if (a.var_count() != b.var_count()) {
        throw precondition_error("divisibility across different variable counts");
    }
    for (unsigned i = 0; i < a.var_count(); ++i) {
        if (a.exponent(i) > b.exponent(i)) {
            return false;
        }
    }
    return true;
}

bool column_before(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) {
        return a.degree() > b.degree();
    }
    // Degrevlex within a degree: a is larger (further left) iff the last
    // variable where the exponents differ has a smaller exponent in a.
    for (unsigned i = a.var_count(); i-- > 0;) {
        if (a.exponent(i) != b.exponent(i)) {
            return a.exponent(i) < b.exponent(i);
        }
    }
    return false;
}

} // namespace bb
