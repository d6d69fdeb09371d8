// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "sparc/context.hpp"

namespace sparc {

// Undirected connectivity edge over one unordered entity pair. A pair stated
// in both directions shares one edge; each slot remembers the triple carrying
// that orientation (-1 when unstated).
struct GraphEdge {
    int a = -1;
    int b = -1;
    int triple_ab = -1;  // triple stated a -> b
    int triple_ba = -1;  // triple stated b -> a
};

class RelationGraph {
public:
    RelationGraph() = default;
    explicit RelationGraph(int node_count) : adjacency_(static_cast<std::size_t>(node_count)) {}

    int node_count() const { return static_cast<int>(adjacency_.size()); }
    const std::vector<GraphEdge>& edges() const { return edges_; }

    // Neighbors as (node, edge index) pairs in insertion order.
    const std::vector<std::pair<int, int>>& neighbors(int node) const {
        return adjacency_[static_cast<std::size_t>(node)];
    }

    // Records the stated orientation a -> b, reusing the pair's edge if present.
    void add_statement(int a, int b, int triple);

    const GraphEdge* edge_between(int a, int b) const;

    int component_count() const;

private:
    std::vector<GraphEdge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

RelationGraph build_graph(const SymbolicContext& ctx);

// Shortest node sequence from `from` to `to` (inclusive), hop count minimal.
// Ties resolve to the lexicographically smallest sequence of entity ids along
// the walk. Throws NoPathError when the endpoints are disconnected.
std::vector<int> shortest_path(const RelationGraph& graph, const SymbolicContext& ctx, int from, int to);

}  // namespace sparc
