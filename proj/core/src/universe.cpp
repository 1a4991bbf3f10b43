#include "bb/universe.hpp"

#include "bb/errors.hpp"

#include <algorithm>

namespace bb {

std::uint64_t monomial_count(unsigned var_count, unsigned degree) {
    if (var_count == 0) {
        return degree == 0 ? 1 : 0;
    }
    // C(n + k - 1, k) computed incrementally; exact for all sizes used here.
    std::uint64_t result = 1;
    for (unsigned i = 1; i <= degree; ++i) {
        result = result * (var_count - 1 + i) / i;
    }
    return result;
}

namespace {

void generate(unsigned var_count, unsigned degree, unsigned index,
              std::vector<unsigned>& current, std::vector<Monomial>& out) {
    if (index + 1 == var_count) {
        current[index] = degree;
        out.emplace_back(current);
        current[index] = 0;
        return;
    }
    for (unsigned e = 0; e <= degree; ++e) {
        current[index] = e;
        generate(var_count, degree - e, index + 1, current, out);
    }
    current[index] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(unsigned var_count, unsigned degree) {
    std::vector<Monomial> out;
    if (var_count == 0) {
        if (degree == 0) {
            out.push_back(Monomial::unit(0));
        }
        return out;
    }
    std::vector<unsigned> current(var_count, 0);
    generate(var_count, degree, 0, current, out);
    std::sort(out.begin(), out.end(), column_before);
    return out;
}

Universe::Universe(unsigned var_count, unsigned degree_bound)
    : var_count_(var_count), degree_bound_(degree_bound) {
    blocks_.reserve(degree_bound + 1);
    for (unsigned i = 0; i <= degree_bound; ++i) {
        blocks_.push_back(monomials_of_degree(var_count, i));
    }
    for (unsigned i = degree_bound + 1; i-- > 0;) {
        columns_.insert(columns_.end(), blocks_[i].begin(), blocks_[i].end());
    }
    index_.reserve(columns_.size());
    for (std::size_t pos = 0; pos < columns_.size(); ++pos) {
        index_.emplace(columns_[pos], pos);
    }
}

const std::vector<Monomial>& Universe::block(unsigned degree) const {
    if (degree > degree_bound_) {
        throw precondition_error("degree outside universe bound");
    }
    return blocks_[degree];
}

bool Universe::contains(const Monomial& m) const {
    return m.var_count() == var_count_ && m.degree() <= degree_bound_;
}

std::size_t Universe::column_index(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) {
        throw precondition_error("monomial not in universe: " + m.str());
    }
    return it->second;
}

} // namespace bb
