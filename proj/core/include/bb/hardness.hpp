#pragma once

#include "bb/optimize.hpp"
#include "bb/order_ideal.hpp"
#include "bb/polynomial.hpp"
#include "bb/preference.hpp"

#include <set>
#include <utility>
#include <vector>

namespace bb {

// Simple undirected graph on vertices 0..vertex_count-1 (no loops, no
// parallel edges). Edges are stored with the smaller endpoint first.
class Graph {
  public:
    explicit Graph(unsigned vertex_count);

    unsigned vertex_count() const { return vertex_count_; }
    // Throws precondition_error on loops, out-of-range endpoints, or
    // duplicate edges.
    void add_edge(unsigned u, unsigned v);
    bool has_edge(unsigned u, unsigned v) const;
    const std::set<std::pair<unsigned, unsigned>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

  private:
    unsigned vertex_count_ = 0;
    std::set<std::pair<unsigned, unsigned>> edges_;
};

// The clique-encoding generator system in n variables with parameter k
// (1 <= k <= n): the power-sum forms sum_i i^j x_i for j = 1..n-k together
// with every monomial of degree three. Its quotient has dimension
// 1 + k + k(k+1)/2 and its admissible order ideals correspond one-to-one to
// the k-element subsets of the variables.
std::vector<Polynomial> clique_system(unsigned n, unsigned k);

// Weight 1 on x_u * x_v for every edge of the graph, 0 elsewhere.
Preference clique_preference(const Graph& g);

// Exhaustively enumerates the admissible order ideals of clique_system(n, k)
// and checks the expected combinatorial structure: exactly C(n, k) ideals,
// each consisting of 1, a k-set S of variables, and all products of two
// members of S (squares included), with nothing of degree three.
bool admissible_structure_check(unsigned n, unsigned k);

struct CliqueDecision {
    bool has_clique = false;   // score reached the k-clique threshold
    long long score = 0;       // best preference score over admissible ideals
    long long threshold = 0;   // k*(k-1)/2
    OrderIdeal ideal;          // an ideal attaining the best score
};

// Decides whether g contains a k-clique by maximizing the clique preference
// over the admissible order ideals of clique_system(|V|, k).
CliqueDecision k_clique_decide(const Graph& g, unsigned k,
                               const EnumerationOptions& options = {});

} // namespace bb
