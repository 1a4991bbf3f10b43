#include "bb/flow.hpp"

#include "bb/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace bb {

FlowNetwork::FlowNetwork(std::size_t node_count) : adjacency_(node_count) {}

std::size_t FlowNetwork::add_node() {
    adjacency_.emplace_back();
    return adjacency_.size() - 1;
}

void FlowNetwork::add_arc(std::size_t from, std::size_t to, std::int64_t capacity) {
    if (from >= adjacency_.size() || to >= adjacency_.size()) {
        throw precondition_error("flow arc endpoint out of range");
    }
    if (capacity < 0) {
        throw precondition_error("flow arc capacity must be non-negative");
    }
    adjacency_[from].push_back(Arc{to, adjacency_[to].size(), capacity});
    adjacency_[to].push_back(Arc{from, adjacency_[from].size() - 1, 0});
}

bool FlowNetwork::build_levels(std::size_t source, std::size_t sink) {
    level_.assign(adjacency_.size(), -1);
    std::deque<std::size_t> queue{source};
    level_[source] = 0;
    while (!queue.empty()) {
        std::size_t node = queue.front();
        queue.pop_front();
        for (const Arc& arc : adjacency_[node]) {
            if (arc.capacity > 0 && level_[arc.to] < 0) {
                level_[arc.to] = level_[node] + 1;
                queue.push_back(arc.to);
            }
        }
    }
    return level_[sink] >= 0;
}

std::int64_t FlowNetwork::push(std::size_t node, std::size_t sink, std::int64_t limit) {
    if (node == sink) {
        return limit;
    }
    for (std::size_t& i = next_arc_[node]; i < adjacency_[node].size(); ++i) {
        Arc& arc = adjacency_[node][i];
        if (arc.capacity <= 0 || level_[arc.to] != level_[node] + 1) {
            continue;
        }
        std::int64_t sent = push(arc.to, sink, std::min(limit, arc.capacity));
        if (sent > 0) {
            arc.capacity -= sent;
            adjacency_[arc.to][arc.reverse].capacity += sent;
            return sent;
        }
    }
    return 0;
}

FlowNetwork::Result FlowNetwork::max_flow(std::size_t source, std::size_t sink) {
    if (source >= adjacency_.size() || sink >= adjacency_.size() || source == sink) {
        throw precondition_error("invalid flow terminals");
    }
    Result result;
    while (build_levels(source, sink)) {
        next_arc_.assign(adjacency_.size(), 0);
        while (std::int64_t sent =
                   push(source, sink, std::numeric_limits<std::int64_t>::max())) {
            result.value += sent;
        }
    }
    // level_ holds the final residual reachability (sink unreachable).
    result.source_side.assign(adjacency_.size(), 0);
    for (std::size_t v = 0; v < adjacency_.size(); ++v) {
        result.source_side[v] = level_[v] >= 0 ? 1 : 0;
    }
    return result;
}

std::pair<OrderIdeal, long long> min_cut_closure(const Universe& u, const Preference& c) {
    long long positive_total = 0;
    for (const Monomial& m : u.columns()) {
        long long w = c.weight(m);
        if (w > 0) {
            positive_total += w;
        }
    }
    const std::int64_t infinite = positive_total + 1;

    // Node 0 = source, node 1 = sink, monomial at column i = node 2 + i.
    FlowNetwork net(2 + u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const Monomial& m = u.columns()[i];
        long long w = c.weight(m);
        if (w > 0) {
            net.add_arc(0, 2 + i, w);
        } else if (w < 0) {
            net.add_arc(2 + i, 1, -w);
        }
        for (const Monomial& lower : m.lower_neighbors()) {
            net.add_arc(2 + i, 2 + u.column_index(lower), infinite);
        }
    }
    FlowNetwork::Result cut = net.max_flow(0, 1);

    std::vector<Monomial> members;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (cut.source_side[2 + i]) {
            members.push_back(u.columns()[i]);
        }
    }
    return {OrderIdeal(u.var_count(), std::move(members)),
            positive_total - static_cast<long long>(cut.value)};
}

} // namespace bb
