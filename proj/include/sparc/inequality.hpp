// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "sparc/property_set.hpp"
#include "sparc/relation_set.hpp"

namespace sparc {

// Boundary variables of one extended object's bounding box.
enum class BoundaryVar : std::uint8_t { XStart, XEnd, YStart, YEnd };

// Order constraints (u <= v, u < v) over boundary variables, kept as a
// directed graph from lesser to greater. Registering an entity adds the
// strict extent edges x_s < x_e and y_s < y_e. Consistency means no
// cycle through a strict edge; entailment of u <= v means a directed
// path u -> v (or u == v).
class InequalityStore {
  public:
    void register_entity(const std::string& id);
    bool has_entity(const std::string& id) const;

    void add_le(const std::string& a, BoundaryVar va, const std::string& b, BoundaryVar vb);
    void add_lt(const std::string& a, BoundaryVar va, const std::string& b, BoundaryVar vb);

    bool consistent() const;
    bool entails_le(const std::string& a, BoundaryVar va, const std::string& b, BoundaryVar vb) const;

    // Edges as (from, to, strict) over dense variable indices; for the
    // model enumeration used in tests.
    struct Edge {
        int from;
        int to;
        bool strict;
    };
    const std::vector<Edge>& edges() const { return edges_; }
    int variable_count() const { return static_cast<int>(adjacency_.size()); }
    int variable_index(const std::string& id, BoundaryVar v) const;

  private:
    int intern(const std::string& id, BoundaryVar v);
    void add_edge(int from, int to, bool strict);
    bool reachable(int from, int to) const;

    std::unordered_map<std::string, int> entity_base_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;  // indices into edges_
};

// The primary-axis inequality of one directional statement between
// extended objects, e.g. right(head, tail) is x_s(head) >= x_e(tail).
struct PrimaryInequality {
    std::string lesser_entity;
    BoundaryVar lesser_var;
    std::string greater_entity;
    BoundaryVar greater_var;
};
PrimaryInequality primary_inequality(Label l, const std::string& head, const std::string& tail);

// Asserts one stated triple into the store. Every directional label
// contributes its primary-axis inequality. Under complete relations a
// single-label statement also pins the orthogonal projections to
// overlap; multi-label statements assert primary inequalities only.
// Throws InconsistencyError if the store stops being satisfiable.
void assert_context_inequalities(const std::string& head, const RelationSet& relations,
                                 const std::string& tail, InequalityStore& store,
                                 Completeness completeness);

// Which of the four planar directions hold between head and tail given
// the store. Entailment mode (the default) deduces a relation only when
// its primary inequality holds in every model of the store. Literal
// mode instead keeps any relation whose inequality can be added without
// contradiction, mirroring a consistency check rather than a proof, and
// inserts each accepted inequality before trying the next direction in
// the fixed order left, right, above, below.
enum class DeductionMode : std::uint8_t { Entailment, Literal };
RelationSet deduce_directions(const std::string& head, const std::string& tail, InequalityStore& store,
                              DeductionMode mode = DeductionMode::Entailment);

// Progressive merge step: deduces the directions between first.head and
// second.tail after both pairs' statements are already asserted.
// Requires first.tail == second.head.
struct EntityPair {
    std::string head;
    std::string tail;
};
RelationSet compose_inequalities(const EntityPair& first, const EntityPair& second,
                                 InequalityStore& store, DeductionMode mode = DeductionMode::Entailment);

}  // namespace sparc
