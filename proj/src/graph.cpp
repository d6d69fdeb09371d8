// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "sparc/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "sparc/errors.hpp"

namespace sparc {

void RelationGraph::add_statement(int a, int b, int triple) {
    for (auto& [node, edge_idx] : adjacency_[static_cast<std::size_t>(a)]) {
        if (node != b) continue;
        GraphEdge& e = edges_[static_cast<std::size_t>(edge_idx)];
        int& slot = (e.a == a) ? e.triple_ab : e.triple_ba;
        if (slot < 0) slot = triple;
        return;
    }
    int idx = static_cast<int>(edges_.size());
    edges_.push_back(GraphEdge{a, b, triple, -1});
    adjacency_[static_cast<std::size_t>(a)].emplace_back(b, idx);
    adjacency_[static_cast<std::size_t>(b)].emplace_back(a, idx);
}

const GraphEdge* RelationGraph::edge_between(int a, int b) const {
    for (const auto& [node, edge_idx] : adjacency_[static_cast<std::size_t>(a)])
        if (node == b) return &edges_[static_cast<std::size_t>(edge_idx)];
    return nullptr;
}

int RelationGraph::component_count() const {
    int n = node_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int components = 0;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        ++components;
        std::deque<int> queue{start};
        seen[static_cast<std::size_t>(start)] = 1;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            for (const auto& [next, edge_idx] : neighbors(cur)) {
                (void)edge_idx;
                if (!seen[static_cast<std::size_t>(next)]) {
                    seen[static_cast<std::size_t>(next)] = 1;
                    queue.push_back(next);
                }
            }
        }
    }
    return components;
}

RelationGraph build_graph(const SymbolicContext& ctx) {
    RelationGraph graph(static_cast<int>(ctx.entities.size()));
    for (std::size_t i = 0; i < ctx.triples.size(); ++i) {
        const ContextTriple& t = ctx.triples[i];
        graph.add_statement(ctx.entity_index(t.head), ctx.entity_index(t.tail), static_cast<int>(i));
    }
    return graph;
}

std::vector<int> shortest_path(const RelationGraph& graph, const SymbolicContext& ctx, int from, int to) {
    constexpr int kUnreached = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(graph.node_count()), kUnreached);
    std::deque<int> queue{to};
    dist[static_cast<std::size_t>(to)] = 0;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (const auto& [next, edge_idx] : graph.neighbors(cur)) {
            (void)edge_idx;
            if (dist[static_cast<std::size_t>(next)] == kUnreached) {
                dist[static_cast<std::size_t>(next)] = dist[static_cast<std::size_t>(cur)] + 1;
                queue.push_back(next);
            }
        }
    }
    if (dist[static_cast<std::size_t>(from)] == kUnreached)
        throw NoPathError("no path between '" + ctx.entities[static_cast<std::size_t>(from)].id + "' and '" +
                          ctx.entities[static_cast<std::size_t>(to)].id + "'");

    // Greedy descent over distance-to-target; the smallest feasible id at each
    // hop yields the lexicographically smallest intermediate sequence.
    std::vector<int> path{from};
    int cur = from;
    while (cur != to) {
        int best = -1;
        for (const auto& [next, edge_idx] : graph.neighbors(cur)) {
            (void)edge_idx;
            if (dist[static_cast<std::size_t>(next)] != dist[static_cast<std::size_t>(cur)] - 1) continue;
            if (best < 0 || ctx.entities[static_cast<std::size_t>(next)].id < ctx.entities[static_cast<std::size_t>(best)].id)
                best = next;
        }
        path.push_back(best);
        cur = best;
    }
    return path;
}

}  // namespace sparc
