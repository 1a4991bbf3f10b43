#pragma once

#include "bb/linalg.hpp"
#include "bb/order_ideal.hpp"
#include "bb/polytope.hpp"
#include "bb/preference.hpp"
#include "bb/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bb {

// Exact incremental independence test over a fixed small width: rows are
// accepted only when independent of the accepted set, and the most recent
// acceptance can be undone in O(1). Used for the per-degree admissibility
// profiles of the enumeration search.
class SmallEliminator {
public:
    explicit SmallEliminator(std::size_t width) : width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }

    // True iff row is independent of the accepted rows; the row is then
    // accepted. Dependent rows leave the state untouched.
    bool insert(const std::vector<Rational>& row);
    // Undoes the most recent accepted insert.
    void pop();

private:
    std::size_t width_;
    std::vector<std::vector<Rational>> rows_; // each normalized, zero at earlier pivots
    std::vector<std::size_t> pivots_;
};

struct EnumerationOptions {
    // Stop after this many order ideals (sets `truncated`).
    std::optional<std::uint64_t> limit;
    // Wall-clock budget; exceeding it stops the search with `truncated`.
    std::optional<double> time_cap_seconds;
    // Worker count for fanning the search out over degree-1 choices; 1 keeps
    // the search sequential. Collection and limits force sequential mode.
    unsigned threads = 1;
    // Store every enumerated order ideal in the result.
    bool collect = false;
};

struct EnumerationResult {
    std::uint64_t count = 0;
    bool truncated = false;
    std::vector<OrderIdeal> ideals; // filled when options.collect
};

// Enumerates every admissible degree-compatible order ideal of the ideal
// behind the oracle, depth-first degree by degree, scanning candidates in
// the canonical column order. Deterministic: identical inputs yield the same
// count, order, and truncation point.
EnumerationResult enumerate_order_ideals(const RankOracle& oracle,
                                         const EnumerationOptions& options = {});
EnumerationResult enumerate_order_ideals(const CanonicalForm& m,
                                         const EnumerationOptions& options = {});

// Counts the downward-closed monomial sets whose per-degree sizes match the
// oracle's signature, WITHOUT the independence test — i.e. the integral
// points of the divisibility+cardinality relaxation of the order-ideal
// polytope. Always >= the admissible count; exact, and exponentially larger
// on structured inputs, hence the arbitrary-precision result.
Integer count_relaxation(const RankOracle& oracle);
Integer count_relaxation(const CanonicalForm& m);

struct OptimizeResult {
    OrderIdeal ideal;
    long long score = 0;
    // Number of admissible order ideals visited by the search (after pruning).
    std::uint64_t admissible_visited = 0;
    bool truncated = false;
};

// Maximizes the preference score over all admissible order ideals by the
// same search with branch-and-bound pruning; ties resolve to the first
// order ideal in enumeration order. Throws when the search finishes without
// finding any admissible order ideal (impossible for a sound oracle).
OptimizeResult optimize_preference(const RankOracle& oracle, const Preference& c,
                                   const EnumerationOptions& options = {});
OptimizeResult optimize_preference(const CanonicalForm& m, const Preference& c,
                                   const EnumerationOptions& options = {});

} // namespace bb
