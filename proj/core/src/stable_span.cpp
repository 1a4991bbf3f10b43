#include "bb/stable_span.hpp"

#include "bb/errors.hpp"

#include <algorithm>
#include <deque>
#include <memory>

namespace bb {

std::vector<Polynomial> neighborhood_extension(const std::vector<Polynomial>& f) {
    std::vector<Polynomial> result;
    result.reserve(f.size() * (f.empty() ? 1 : f.front().var_count() + 1));
    auto push_unique = [&](const Polynomial& p) {
        if (std::find(result.begin(), result.end(), p) == result.end()) {
            result.push_back(p);
        }
    };
    for (const Polynomial& p : f) {
        push_unique(p);
    }
    for (const Polynomial& p : f) {
        for (unsigned v = 0; v < p.var_count(); ++v) {
            push_unique(p.times_monomial(Monomial::variable(v, p.var_count())));
        }
    }
    return result;
}

namespace {

// Shared workhorse: eliminates f and all variable multiples of kept rows to a
// fixpoint. Rows of degree <= bound form the span; rows one degree above stay
// in the elimination state as intermediaries so that cancellations falling
// back under the bound are found (their own multiples are never taken).
SpanBasis stable_span_impl(const std::vector<Polynomial>& f, const Universe& universe,
                           const TermOrdering& ordering) {
    const unsigned bound = universe.degree_bound();
    for (const Polynomial& p : f) {
        for (const Term& t : p.terms()) {
            if (!universe.contains(t.monomial)) {
                throw precondition_error("input support outside the universe: " +
                                         t.monomial.str());
            }
        }
    }
    const unsigned var_count = universe.var_count();
    Universe work_universe(var_count, bound + 1);
    auto columns = std::make_shared<const ColumnMap>(
        ColumnMap::sorted_descending(work_universe, ordering));
    ReducedSet set(columns, /*full_reduce=*/false);

    std::vector<Polynomial> span_rows;
    std::deque<Polynomial> pending; // span rows whose multiples are not yet taken
    auto classify_new_row = [&](std::size_t row_index) {
        Polynomial row = set.row_polynomial(row_index);
        if (row.degree() <= bound) {
            span_rows.push_back(row);
            pending.push_back(std::move(row));
        }
    };
    for (const Polynomial& p : f) {
        if (p.is_zero()) {
            continue;
        }
        if (auto row = set.insert(p)) {
            classify_new_row(*row);
        }
    }
    while (!pending.empty()) {
        Polynomial row = std::move(pending.front());
        pending.pop_front();
        for (unsigned v = 0; v < var_count; ++v) {
            Polynomial multiple = row.times_monomial(Monomial::variable(v, var_count));
            if (auto added = set.insert(multiple)) {
                classify_new_row(*added);
            }
        }
    }
    return SpanBasis{std::move(span_rows), universe, ordering, true};
}

} // namespace

SpanBasis stable_span(const std::vector<Polynomial>& f, const Universe& universe,
                      const TermOrdering& ordering) {
    return stable_span_impl(f, universe, ordering);
}

bool is_stabilized(const SpanBasis& span) {
    const unsigned bound = span.universe.degree_bound();
    const unsigned var_count = span.universe.var_count();
    Universe work_universe(var_count, bound + 1);
    auto columns = std::make_shared<const ColumnMap>(
        ColumnMap::sorted_descending(work_universe, span.ordering));
    ReducedSet set(columns, /*full_reduce=*/false);
    for (const Polynomial& p : span.rows) {
        set.insert(p);
    }
    for (const Polynomial& p : span.rows) {
        for (unsigned v = 0; v < var_count; ++v) {
            auto added = set.insert(p.times_monomial(Monomial::variable(v, var_count)));
            if (added && set.row_polynomial(*added).degree() <= bound) {
                return false;
            }
        }
    }
    return true;
}

SpanBasis terminal_span(const std::vector<Polynomial>& f, const TermOrdering& ordering,
                        unsigned degree_cap) {
    unsigned var_count = 0;
    unsigned degree = 1;
    bool any_nonzero = false;
    for (const Polynomial& p : f) {
        if (var_count == 0) {
            var_count = p.var_count();
        } else if (p.var_count() != var_count) {
            throw precondition_error("mixed variable counts in the input system");
        }
        if (!p.is_zero()) {
            any_nonzero = true;
            degree = std::max(degree, p.degree());
        }
    }
    if (f.empty() || var_count == 0 || !any_nonzero) {
        throw precondition_error("input system has no nonzero polynomial");
    }
    for (;; ++degree) {
        if (degree > degree_cap) {
            throw degree_cap_error(
                "degree cap " + std::to_string(degree_cap) +
                " reached before the span covered its top degree; the ideal is likely "
                "not zero-dimensional");
        }
        SpanBasis span = stable_span_impl(f, Universe(var_count, degree), ordering);
        std::size_t top_pivots = 0;
        for (const Polynomial& row : span.rows) {
            if (row.degree() == degree) {
                ++top_pivots;
            }
        }
        if (top_pivots == monomial_count(var_count, degree)) {
            return span;
        }
    }
}

} // namespace bb
