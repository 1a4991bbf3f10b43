#include "bb/hardness.hpp"

#include "bb/errors.hpp"
#include "bb/pipeline.hpp"
#include "bb/universe.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace bb {

Graph::Graph(unsigned vertex_count) : vertex_count_(vertex_count) {}

void Graph::add_edge(unsigned u, unsigned v) {
    if (u == v) {
        throw precondition_error("graph edge is a loop at vertex " + std::to_string(u));
    }
    if (u >= vertex_count_ || v >= vertex_count_) {
        throw precondition_error("graph edge endpoint out of range");
    }
    auto edge = std::minmax(u, v);
    if (!edges_.insert({edge.first, edge.second}).second) {
        throw precondition_error("duplicate graph edge " + std::to_string(edge.first) + "-" +
                                 std::to_string(edge.second));
    }
}

bool Graph::has_edge(unsigned u, unsigned v) const {
    if (u == v) {
        return false;
    }
    auto edge = std::minmax(u, v);
    return edges_.count({edge.first, edge.second}) > 0;
}

std::vector<Polynomial> clique_system(unsigned n, unsigned k) {
    if (n == 0) {
        throw precondition_error("clique system needs at least one variable");
    }
    if (k == 0 || k > n) {
        throw precondition_error("clique parameter must satisfy 1 <= k <= " + std::to_string(n));
    }
    std::vector<Polynomial> system;
    for (unsigned j = 1; j + k <= n; ++j) {
        std::vector<Term> terms;
        terms.reserve(n);
        for (unsigned i = 1; i <= n; ++i) {
            Integer coefficient;
            mpz_ui_pow_ui(coefficient.get_mpz_t(), i, j);
            terms.push_back({Monomial::variable(i - 1, n), Rational(coefficient)});
        }
        system.emplace_back(n, std::move(terms));
    }
    for (const Monomial& m : monomials_of_degree(n, 3)) {
        system.emplace_back(n, std::vector<Term>{{m, Rational(1)}});
    }
    return system;
}

Preference clique_preference(const Graph& g) {
    Preference c;
    unsigned n = g.vertex_count();
    for (const auto& [u, v] : g.edges()) {
        c.set(Monomial::variable(u, n) * Monomial::variable(v, n), 1);
    }
    return c;
}

namespace {

// The expected shape of one admissible ideal for clique_system(n, k): the
// unit, a k-set of variables, and all pairwise products of that set.
bool has_clique_shape(const OrderIdeal& o, unsigned k) {
    if (o.max_degree() > 2) {
        return false;
    }
    std::vector<Monomial> degree_one = o.slice(1);
    if (degree_one.size() != k || o.slice(0).size() != 1) {
        return false;
    }
    std::vector<Monomial> expected;
    for (std::size_t a = 0; a < degree_one.size(); ++a) {
        for (std::size_t b = a; b < degree_one.size(); ++b) {
            expected.push_back(degree_one[a] * degree_one[b]);
        }
    }
    std::vector<Monomial> actual = o.slice(2);
    auto descending = [](const Monomial& x, const Monomial& y) { return column_before(x, y); };
    std::sort(expected.begin(), expected.end(), descending);
    std::sort(actual.begin(), actual.end(), descending);
    return expected == actual;
}

unsigned long long binomial_exact(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    unsigned long long value = 1;
    for (unsigned i = 1; i <= k; ++i) {
        value = value * (n - k + i) / i;
    }
    return value;
}

} // namespace

bool admissible_structure_check(unsigned n, unsigned k) {
    StableModel model = build_stable_model(clique_system(n, k), TermOrdering::degrevlex(n));
    EnumerationOptions options;
    options.collect = true;
    EnumerationResult result = enumerate_order_ideals(model.oracle, options);
    if (result.truncated || result.count != binomial_exact(n, k)) {
        return false;
    }
    std::set<std::string> seen_variable_sets;
    for (const OrderIdeal& o : result.ideals) {
        if (!has_clique_shape(o, k)) {
            return false;
        }
        std::string set_key;
        for (const Monomial& m : o.slice(1)) {
            set_key += m.str();
            set_key += '.';
        }
        seen_variable_sets.insert(set_key);
    }
    // Distinct k-sets of variables, and as many as there are k-subsets.
    return seen_variable_sets.size() == result.ideals.size();
}

CliqueDecision k_clique_decide(const Graph& g, unsigned k, const EnumerationOptions& options) {
    unsigned n = g.vertex_count();
    if (k == 0 || k > n) {
        throw precondition_error("clique parameter must satisfy 1 <= k <= " + std::to_string(n));
    }
    StableModel model = build_stable_model(clique_system(n, k), TermOrdering::degrevlex(n));
    OptimizeResult best = optimize_preference(model.oracle, clique_preference(g), options);
    long long threshold = static_cast<long long>(k) * (k - 1) / 2;
    return CliqueDecision{best.score == threshold, best.score, threshold, std::move(best.ideal)};
}

} // namespace bb
