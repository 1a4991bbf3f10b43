#pragma once

#include "bb/monomial.hpp"

#include <unordered_map>

namespace bb {

// Integer weights on monomials; every monomial not mentioned weighs zero.
// The score of a monomial set is the sum of its members' weights.
class Preference {
public:
    using Map = std::unordered_map<Monomial, long long, MonomialHash>;

    Preference() = default;
    explicit Preference(Map weights) : weights_(std::move(weights)) {
        for (auto it = weights_.begin(); it != weights_.end();) {
            it = (it->second == 0) ? weights_.erase(it) : std::next(it);
        }
    }

    long long weight(const Monomial& m) const {
        auto it = weights_.find(m);
        return it == weights_.end() ? 0 : it->second;
    }

    void set(const Monomial& m, long long w) {
        if (w == 0) {
            weights_.erase(m);
        } else {
            weights_[m] = w;
        }
    }

    // The nonzero entries only.
    const Map& weights() const { return weights_; }

private:
    Map weights_;
};

} // namespace bb
