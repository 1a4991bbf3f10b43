// Microbenchmarks for the hot paths: stable-span computation, canonical-form
// reduction, order-ideal enumeration, relaxation counting, and the min-cut
// closure optimizer. Run ./bb_bench --benchmark_filter=... to narrow.

#include "bb/flow.hpp"
#include "bb/io.hpp"
#include "bb/linalg.hpp"
#include "bb/optimize.hpp"
#include "bb/pipeline.hpp"
#include "bb/stable_span.hpp"
#include "bb/term_order.hpp"
#include "bb/universe.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

namespace {

using namespace bb;

Polynomial poly(const std::string& text, unsigned var_count) {
    return parse_polynomial(text, VarTable::numbered(var_count));
}

// The signed linear form plus x_i^{e_i} - x_i, e.g. digits "33222".
std::vector<Polynomial> balance5(const std::string& digits) {
    std::vector<Polynomial> f = {poly("x1 + x2 + x3 - x4 - x5", 5)};
    for (unsigned i = 0; i < 5; ++i) {
        const std::string var = "x" + std::to_string(i + 1);
        f.push_back(poly(var + "^" + digits.substr(i, 1) + " - " + var, 5));
    }
    return f;
}

void BM_TerminalSpan(benchmark::State& state) {
    const std::vector<Polynomial> f = balance5("22222");
    const TermOrdering ordering = TermOrdering::degrevlex(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(terminal_span(f, ordering));
    }
}
BENCHMARK(BM_TerminalSpan);

void BM_CanonicalForm(benchmark::State& state) {
    const std::vector<Polynomial> f = balance5("33222");
    const TermOrdering ordering = TermOrdering::degrevlex(5);
    const SpanBasis span = terminal_span(f, ordering);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(span.rows, span.universe, ordering, true));
    }
}
BENCHMARK(BM_CanonicalForm);

void BM_EnumerateOrderIdeals(benchmark::State& state) {
    const StableModel model =
        build_stable_model(balance5("33222"), TermOrdering::degrevlex(5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_order_ideals(model.oracle));
    }
}
BENCHMARK(BM_EnumerateOrderIdeals);

void BM_CountRelaxation(benchmark::State& state) {
    const StableModel model =
        build_stable_model(balance5("33222"), TermOrdering::degrevlex(5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_relaxation(model.oracle));
    }
}
BENCHMARK(BM_CountRelaxation);

void BM_MinCutClosure(benchmark::State& state) {
    const Universe universe(3, 4); // 35 monomials
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> weight(-10, 10);
    Preference pref;
    for (const Monomial& m : universe.columns()) {
        pref.set(m, weight(rng));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_cut_closure(universe, pref));
    }
}
BENCHMARK(BM_MinCutClosure);

void BM_OptimizePreference(benchmark::State& state) {
    const StableModel model =
        build_stable_model(balance5("22222"), TermOrdering::degrevlex(5));
    std::mt19937_64 rng(6789);
    std::uniform_int_distribution<long long> weight(-10, 10);
    Preference pref;
    for (const Monomial& m : model.model.variables()) {
        pref.set(m, weight(rng));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize_preference(model.oracle, pref));
    }
}
BENCHMARK(BM_OptimizePreference);

} // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) {
        return 1;
    }
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
