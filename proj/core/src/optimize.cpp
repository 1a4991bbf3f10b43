#include "bb/optimize.hpp"

#include "bb/errors.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <limits>
#include <unordered_map>

namespace bb {

bool SmallEliminator::insert(const std::vector<Rational>& row) {
    if (row.size() != width_) {
        throw precondition_error("eliminator row width mismatch");
    }
    std::vector<Rational> v = row;
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        const Rational& factor = v[pivots_[j]];
        if (is_zero(factor)) {
            continue;
        }
        const Rational f = factor;
        const std::vector<Rational>& base = rows_[j];
        for (std::size_t t = 0; t < width_; ++t) {
            v[t] -= f * base[t];
        }
    }
    std::size_t pivot = width_;
    for (std::size_t t = 0; t < width_; ++t) {
        if (!is_zero(v[t])) {
            pivot = t;
            break;
        }
    }
    if (pivot == width_) {
        return false;
    }
    const Rational lead = v[pivot];
    for (std::size_t t = pivot; t < width_; ++t) {
        v[t] /= lead;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

void SmallEliminator::pop() {
    if (rows_.empty()) {
        throw precondition_error("eliminator pop on empty state");
    }
    rows_.pop_back();
    pivots_.pop_back();
}

namespace {

using Clock = std::chrono::steady_clock;

// Per-degree immutable search data derived from the oracle and preference.
struct DegreePlan {
    const RankBlock* block = nullptr;
    unsigned choose = 0;                              // slice size at this degree
    std::vector<std::vector<std::uint32_t>> divisors; // per column: positions one degree below
    std::vector<std::vector<Rational>> profiles;      // per column: width-`choose` test vector
    std::vector<long long> weights;                   // per column: preference weight
    std::vector<long long> best_prefix;               // [t]: sum of the t largest positive weights
};

enum class Mode { kCount, kCollect, kOptimize };

struct SearchPlan {
    const RankOracle* oracle = nullptr;
    const Preference* pref = nullptr;
    int last_degree = -1; // highest degree with a positive slice size
    bool has_unit = false;
    long long unit_weight = 0;
    std::vector<DegreePlan> degrees; // index 1..last_degree used
    std::vector<long long> future_bound; // [i]: optimistic score of degrees >= i
};

SearchPlan make_plan(const RankOracle& oracle, const Preference* pref) {
    SearchPlan plan;
    plan.oracle = &oracle;
    plan.pref = pref;
    const DegreeSignature& sig = oracle.signature();
    plan.last_degree = static_cast<int>(sig.sizes.size()) - 1;
    plan.has_unit = sig.at(0) == 1;
    if (plan.has_unit && pref) {
        plan.unit_weight = pref->weight(Monomial::unit(oracle.var_count()));
    }
    plan.degrees.resize(plan.last_degree + 1);
    for (int i = 1; i <= plan.last_degree; ++i) {
        DegreePlan& dp = plan.degrees[i];
        dp.block = &oracle.block(static_cast<unsigned>(i));
        dp.choose = sig.at(static_cast<unsigned>(i));

        const RankBlock& below = oracle.block(static_cast<unsigned>(i - 1));
        std::unordered_map<Monomial, std::uint32_t, MonomialHash> below_pos;
        below_pos.reserve(below.columns.size());
        for (std::size_t p = 0; p < below.columns.size(); ++p) {
            below_pos.emplace(below.columns[p], static_cast<std::uint32_t>(p));
        }
        const std::size_t cols = dp.block->columns.size();
        dp.divisors.resize(cols);
        dp.profiles.resize(cols);
        dp.weights.assign(cols, 0);
        std::vector<std::size_t> free_rank(cols, 0);
        for (std::size_t k = 0; k < dp.block->free_columns.size(); ++k) {
            free_rank[dp.block->free_columns[k]] = k;
        }
        for (std::size_t p = 0; p < cols; ++p) {
            const Monomial& m = dp.block->columns[p];
            for (const Monomial& lower : m.lower_neighbors()) {
                dp.divisors[p].push_back(below_pos.at(lower));
            }
            int owner = dp.block->pivot_row_of_column[p];
            if (owner < 0) {
                std::vector<Rational> unit(dp.choose, Rational(0));
                unit[free_rank[p]] = Rational(1);
                dp.profiles[p] = std::move(unit);
            } else {
                dp.profiles[p] = dp.block->star[static_cast<std::size_t>(owner)];
            }
            if (pref) {
                dp.weights[p] = pref->weight(m);
            }
        }
        std::vector<long long> positives;
        for (long long w : dp.weights) {
            if (w > 0) {
                positives.push_back(w);
            }
        }
        std::sort(positives.rbegin(), positives.rend());
        dp.best_prefix.assign(dp.choose + 1, 0);
        for (std::size_t t = 1; t <= dp.choose; ++t) {
            dp.best_prefix[t] =
                dp.best_prefix[t - 1] + (t <= positives.size() ? positives[t - 1] : 0);
        }
    }
    plan.future_bound.assign(plan.last_degree + 2, 0);
    for (int i = plan.last_degree; i >= 1; --i) {
        plan.future_bound[i] =
            plan.future_bound[i + 1] + plan.degrees[i].best_prefix[plan.degrees[i].choose];
    }
    return plan;
}

std::optional<Clock::time_point> deadline_from(const EnumerationOptions& options) {
    if (!options.time_cap_seconds) {
        return std::nullopt;
    }
    return Clock::now() + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(*options.time_cap_seconds));
}

class Searcher {
public:
    Searcher(const SearchPlan& plan, Mode mode, const EnumerationOptions& options,
             std::optional<Clock::time_point> deadline)
        : plan_(plan), mode_(mode), options_(options), deadline_(deadline) {
        const int last = plan_.last_degree;
        member_.resize(last + 1);
        chosen_.resize(last + 1);
        candidates_.resize(last + 1);
        for (int i = 1; i <= last; ++i) {
            member_[i].assign(plan_.degrees[i].block->columns.size(), 0);
            eliminators_.emplace_back(plan_.degrees[i].choose);
        }
        if (last >= 0) {
            member_0_.assign(1, 1); // the unit monomial is always a member
        }
        score_ = plan_.unit_weight;
    }

    // Full search from the root.
    void run() { descend(1); }

    // Search with the degree-1 slice fixed (positions must be admissible).
    void run_with_first(const std::vector<std::uint32_t>& first) {
        if (plan_.last_degree < 1) {
            descend(1);
            return;
        }
        for (std::uint32_t p : first) {
            if (!eliminators_[0].insert(plan_.degrees[1].profiles[p])) {
                throw error("fixed degree-1 slice is not independent");
            }
            member_[1][p] = 1;
            chosen_[1].push_back(p);
            score_ += plan_.degrees[1].weights[p];
        }
        descend(2);
    }

    // Emits each admissible degree-1 slice (without descending further).
    std::vector<std::vector<std::uint32_t>> degree_one_slices() {
        first_slices_only_ = true;
        descend(1);
        first_slices_only_ = false;
        return std::move(first_slices_);
    }

    std::uint64_t count() const { return count_; }
    bool truncated() const { return truncated_; }
    std::vector<OrderIdeal>& ideals() { return ideals_; }
    bool has_best() const { return has_best_; }
    long long best_score() const { return best_score_; }
    OrderIdeal best_ideal() const { return make_ideal(best_slices_); }

private:
    void check_budget() {
        if (deadline_ && Clock::now() >= *deadline_) {
            stop_ = true;
            truncated_ = true;
        }
    }

    void descend(int degree) {
        if (stop_) {
            return;
        }
        if (degree > plan_.last_degree) {
            leaf();
            return;
        }
        const DegreePlan& dp = plan_.degrees[degree];
        auto& cand = candidates_[degree];
        cand.clear();
        const std::size_t cols = dp.block->columns.size();
        for (std::uint32_t p = 0; p < cols; ++p) {
            bool closed = true;
            for (std::uint32_t lower : dp.divisors[p]) {
                if (!member_at(degree - 1, lower)) {
                    closed = false;
                    break;
                }
            }
            if (closed) {
                cand.push_back(p);
            }
        }
        if (cand.size() < dp.choose) {
            return;
        }
        choose(degree, 0, dp.choose);
    }

    void choose(int degree, std::size_t start, unsigned left) {
        if (stop_) {
            return;
        }
        if (left == 0) {
            if (first_slices_only_ && degree == 1) {
                first_slices_.push_back(chosen_[1]);
                return;
            }
            descend(degree + 1);
            return;
        }
        if (mode_ == Mode::kOptimize && has_best_) {
            const DegreePlan& dp = plan_.degrees[degree];
            long long optimistic = score_ + dp.best_prefix[std::min<std::size_t>(left, dp.choose)] +
                                   plan_.future_bound[degree + 1];
            if (optimistic <= best_score_) {
                return;
            }
        }
        const DegreePlan& dp = plan_.degrees[degree];
        const auto& cand = candidates_[degree];
        for (std::size_t i = start; i + left <= cand.size(); ++i) {
            if ((++work_ & 0xFFF) == 0) {
                check_budget();
            }
            if (stop_) {
                return;
            }
            const std::uint32_t p = cand[i];
            if (!eliminators_[degree - 1].insert(dp.profiles[p])) {
                continue;
            }
            member_[degree][p] = 1;
            chosen_[degree].push_back(p);
            score_ += dp.weights[p];
            choose(degree, i + 1, left - 1);
            score_ -= dp.weights[p];
            chosen_[degree].pop_back();
            member_[degree][p] = 0;
            eliminators_[degree - 1].pop();
        }
    }

    void leaf() {
        ++count_;
        switch (mode_) {
        case Mode::kCount:
            break;
        case Mode::kCollect:
            ideals_.push_back(make_ideal(chosen_));
            break;
        case Mode::kOptimize:
            if (!has_best_ || score_ > best_score_) {
                has_best_ = true;
                best_score_ = score_;
                best_slices_ = chosen_;
            }
            break;
        }
        if (options_.limit && count_ >= *options_.limit) {
            stop_ = true;
            truncated_ = true;
        }
    }

    bool member_at(int degree, std::uint32_t pos) const {
        return degree == 0 ? member_0_[pos] != 0 : member_[degree][pos] != 0;
    }

    OrderIdeal make_ideal(const std::vector<std::vector<std::uint32_t>>& slices) const {
        std::vector<Monomial> members;
        if (plan_.has_unit) {
            members.push_back(Monomial::unit(plan_.oracle->var_count()));
        }
        for (int i = 1; i <= plan_.last_degree; ++i) {
            for (std::uint32_t p : slices[i]) {
                members.push_back(plan_.degrees[i].block->columns[p]);
            }
        }
        return OrderIdeal(plan_.oracle->var_count(), std::move(members));
    }

    const SearchPlan& plan_;
    Mode mode_;
    EnumerationOptions options_;
    std::optional<Clock::time_point> deadline_;

    std::vector<std::uint8_t> member_0_;
    std::vector<std::vector<std::uint8_t>> member_;
    std::vector<std::vector<std::uint32_t>> chosen_;
    std::vector<std::vector<std::uint32_t>> candidates_;
    std::vector<SmallEliminator> eliminators_; // [degree - 1]

    bool first_slices_only_ = false;
    std::vector<std::vector<std::uint32_t>> first_slices_;

    std::uint64_t work_ = 0;
    std::uint64_t count_ = 0;
    bool stop_ = false;
    bool truncated_ = false;
    long long score_ = 0;
    bool has_best_ = false;
    long long best_score_ = std::numeric_limits<long long>::min();
    std::vector<std::vector<std::uint32_t>> best_slices_;
    std::vector<OrderIdeal> ideals_;
};

// Counts signature-sized downward-closed sets with no independence test.
// The last degree never constrains anything deeper, so its choices collapse
// into one binomial coefficient per branch.
class RelaxationCounter {
public:
    explicit RelaxationCounter(const SearchPlan& plan) : plan_(plan) {
        member_.resize(plan_.last_degree + 1);
        for (int i = 1; i <= plan_.last_degree; ++i) {
            member_[i].assign(plan_.degrees[i].block->columns.size(), 0);
        }
    }

    Integer run() {
        if (plan_.last_degree < 1) {
            return 1;
        }
        descend(1);
        return total_;
    }

private:
    void descend(int degree) {
        if (degree > plan_.last_degree) {
            total_ += 1;
            return;
        }
        const DegreePlan& dp = plan_.degrees[degree];
        std::vector<std::uint32_t> cand;
        const std::size_t cols = dp.block->columns.size();
        for (std::uint32_t p = 0; p < cols; ++p) {
            bool closed = true;
            for (std::uint32_t lower : dp.divisors[p]) {
                if (degree >= 2 && member_[degree - 1][lower] == 0) {
                    closed = false;
                    break;
                }
            }
            if (closed) {
                cand.push_back(p);
            }
        }
        if (cand.size() < dp.choose) {
            return;
        }
        if (degree == plan_.last_degree) {
            Integer ways;
            mpz_bin_uiui(ways.get_mpz_t(), cand.size(), dp.choose);
            total_ += ways;
            return;
        }
        choose(degree, cand, 0, dp.choose);
    }

    void choose(int degree, const std::vector<std::uint32_t>& cand, std::size_t start,
                unsigned left) {
        if (left == 0) {
            descend(degree + 1);
            return;
        }
        for (std::size_t i = start; i + left <= cand.size(); ++i) {
            member_[degree][cand[i]] = 1;
            choose(degree, cand, i + 1, left - 1);
            member_[degree][cand[i]] = 0;
        }
    }

    const SearchPlan& plan_;
    std::vector<std::vector<std::uint8_t>> member_;
    Integer total_ = 0;
};

struct TaskOutcome {
    std::uint64_t count = 0;
    bool truncated = false;
    bool has_best = false;
    long long best_score = 0;
    std::optional<OrderIdeal> best_ideal;
};

// Runs the search fanned out over the admissible degree-1 slices; outcomes
// come back per slice, in slice order, so merging stays deterministic. The
// slice listing itself runs uncapped (it is tiny: subsets of the variables),
// so a time cap can never silently drop whole subtrees.
std::vector<TaskOutcome> run_parallel(const SearchPlan& plan, Mode mode,
                                      const EnumerationOptions& options,
                                      std::optional<Clock::time_point> deadline) {
    Searcher scout(plan, Mode::kCount, options, std::nullopt);
    std::vector<std::vector<std::uint32_t>> slices = scout.degree_one_slices();
    std::vector<TaskOutcome> outcomes(slices.size());
    const unsigned workers = std::max(1u, options.threads);
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w]() {
            for (std::size_t s = w; s < slices.size(); s += workers) {
                Searcher searcher(plan, mode, options, deadline);
                searcher.run_with_first(slices[s]);
                TaskOutcome& outcome = outcomes[s];
                outcome.count = searcher.count();
                outcome.truncated = searcher.truncated();
                outcome.has_best = searcher.has_best();
                if (searcher.has_best()) {
                    outcome.best_score = searcher.best_score();
                    outcome.best_ideal = searcher.best_ideal();
                }
            }
        }));
    }
    for (auto& f : futures) {
        f.get();
    }
    return outcomes;
}

} // namespace

EnumerationResult enumerate_order_ideals(const RankOracle& oracle,
                                         const EnumerationOptions& options) {
    SearchPlan plan = make_plan(oracle, nullptr);
    auto deadline = deadline_from(options);
    EnumerationResult result;
    const bool parallel =
        options.threads > 1 && !options.collect && !options.limit && plan.last_degree >= 2;
    if (parallel) {
        for (const TaskOutcome& outcome : run_parallel(plan, Mode::kCount, options, deadline)) {
            result.count += outcome.count;
            result.truncated = result.truncated || outcome.truncated;
        }
        return result;
    }
    Searcher searcher(plan, options.collect ? Mode::kCollect : Mode::kCount, options, deadline);
    searcher.run();
    result.count = searcher.count();
    result.truncated = searcher.truncated();
    if (options.collect) {
        result.ideals = std::move(searcher.ideals());
    }
    return result;
}

EnumerationResult enumerate_order_ideals(const CanonicalForm& m,
                                         const EnumerationOptions& options) {
    return enumerate_order_ideals(RankOracle(m), options);
}

Integer count_relaxation(const RankOracle& oracle) {
    SearchPlan plan = make_plan(oracle, nullptr);
    RelaxationCounter counter(plan);
    return counter.run();
}

Integer count_relaxation(const CanonicalForm& m) {
    return count_relaxation(RankOracle(m));
}

OptimizeResult optimize_preference(const RankOracle& oracle, const Preference& c,
                                   const EnumerationOptions& options) {
    SearchPlan plan = make_plan(oracle, &c);
    auto deadline = deadline_from(options);
    const bool parallel = options.threads > 1 && !options.limit && plan.last_degree >= 2;
    if (parallel) {
        std::vector<TaskOutcome> outcomes = run_parallel(plan, Mode::kOptimize, options, deadline);
        OptimizeResult result{OrderIdeal::empty(oracle.var_count()), 0, 0, false};
        bool has_best = false;
        for (TaskOutcome& outcome : outcomes) {
            result.admissible_visited += outcome.count;
            result.truncated = result.truncated || outcome.truncated;
            if (outcome.has_best && (!has_best || outcome.best_score > result.score)) {
                has_best = true;
                result.score = outcome.best_score;
                result.ideal = std::move(*outcome.best_ideal);
            }
        }
        if (!has_best) {
            throw error("no admissible order ideal found; the oracle input is inconsistent");
        }
        return result;
    }
    Searcher searcher(plan, Mode::kOptimize, options, deadline);
    searcher.run();
    if (!searcher.has_best()) {
        throw error("no admissible order ideal found; the oracle input is inconsistent");
    }
    return OptimizeResult{searcher.best_ideal(), searcher.best_score(), searcher.count(),
                          searcher.truncated()};
}

OptimizeResult optimize_preference(const CanonicalForm& m, const Preference& c,
                                   const EnumerationOptions& options) {
    return optimize_preference(RankOracle(m), c, options);
}

} // namespace bb
