#pragma once

#include "bb/order_ideal.hpp"
#include "bb/preference.hpp"
#include "bb/universe.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace bb {

// A directed flow network with integer capacities. Arcs are added in pairs
// with zero-capacity reverse edges so residual capacities are tracked
// in place.
class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t node_count);

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t add_node();
    // Directed arc with capacity >= 0 (throws precondition_error otherwise).
    void add_arc(std::size_t from, std::size_t to, std::int64_t capacity);

    struct Result {
        std::int64_t value = 0;
        // Per node: on the source side of the minimum cut (reachable from the
        // source in the residual network).
        std::vector<std::uint8_t> source_side;
    };

    // Dinic's algorithm. Consumes the capacities: call once per network.
    Result max_flow(std::size_t source, std::size_t sink);

private:
    struct Arc {
        std::size_t to;
        std::size_t reverse; // index of the paired arc in adjacency_[to]
        std::int64_t capacity;
    };

    bool build_levels(std::size_t source, std::size_t sink);
    std::int64_t push(std::size_t node, std::size_t sink, std::int64_t limit);

    std::vector<std::vector<Arc>> adjacency_;
    std::vector<int> level_;
    std::vector<std::size_t> next_arc_;
};

// Maximum-weight downward-closed subset of the universe (no ideal
// constraints): infinite-capacity arcs from each monomial to its lower
// neighbors force closures, positive weights hang off the source, negative
// weights off the sink, and the source side of a minimum cut is an optimal
// closure with score = (sum of positive weights) - (cut value).
std::pair<OrderIdeal, long long> min_cut_closure(const Universe& u, const Preference& c);

} // namespace bb
