#include "bb/order_ideal.hpp"

#include <algorithm>
#include <set>

namespace bb {

namespace {

// Output order for order ideals and borders: degree ascending, then
// degrevlex-descending within a degree (the reverse block layout of the
// matrix columns, which reads naturally from 1 upwards).
bool output_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) {
        return a.degree() < b.degree();
    }
    return column_before(a, b);
}

} // namespace

bool is_order_ideal(const std::vector<Monomial>& monomials) {
    std::set<std::vector<unsigned>> members;
    for (const Monomial& m : monomials) {
        members.insert(m.exponents());
    }
    for (const Monomial& m : monomials) {
        for (const Monomial& divisor : m.lower_neighbors()) {
            if (!members.count(divisor.exponents())) {
                return false;
            }
        }
    }
    return true;
}

OrderIdeal::OrderIdeal(unsigned var_count, std::vector<Monomial> monomials)
    : var_count_(var_count), sorted_(std::move(monomials)) {
    for (const Monomial& m : sorted_) {
        if (m.var_count() != var_count_) {
            throw precondition_error("order ideal member variable count mismatch");
        }
    }
    std::sort(sorted_.begin(), sorted_.end(), output_less);
    sorted_.erase(std::unique(sorted_.begin(), sorted_.end()), sorted_.end());
    if (!is_order_ideal(sorted_)) {
        throw precondition_error("set is not downward closed under divisibility");
    }
    for (const Monomial& m : sorted_) {
        slices_[m.degree()].push_back(m);
    }
}

bool OrderIdeal::contains(const Monomial& m) const {
    auto it = slices_.find(m.degree());
    if (it == slices_.end()) {
        return false;
    }
    return std::find(it->second.begin(), it->second.end(), m) != it->second.end();
}

const std::vector<Monomial>& OrderIdeal::slice(unsigned degree) const {
    static const std::vector<Monomial> kEmpty;
    auto it = slices_.find(degree);
    return it == slices_.end() ? kEmpty : it->second;
}

unsigned OrderIdeal::max_degree() const {
    return slices_.empty() ? 0 : slices_.rbegin()->first;
}

std::vector<unsigned> OrderIdeal::slice_sizes() const {
    std::vector<unsigned> sizes(max_degree() + 1, 0);
    for (const auto& [degree, members] : slices_) {
        sizes[degree] = static_cast<unsigned>(members.size());
    }
    return sizes;
}

bool OrderIdeal::operator==(const OrderIdeal& other) const {
    return var_count_ == other.var_count_ && sorted_ == other.sorted_;
}

std::vector<Monomial> border(const OrderIdeal& ideal) {
    if (ideal.size() == 0) {
        return {Monomial::unit(ideal.var_count())};
    }
    std::set<std::vector<unsigned>> members;
    for (const Monomial& m : ideal.monomials()) {
        members.insert(m.exponents());
    }
    std::set<std::vector<unsigned>> seen;
    std::vector<Monomial> result;
    for (const Monomial& m : ideal.monomials()) {
        for (unsigned v = 0; v < ideal.var_count(); ++v) {
            Monomial shifted = m * Monomial::variable(v, ideal.var_count());
            if (!members.count(shifted.exponents()) && seen.insert(shifted.exponents()).second) {
                result.push_back(shifted);
            }
        }
    }
    std::sort(result.begin(), result.end(), output_less);
    return result;
}

} // namespace bb
