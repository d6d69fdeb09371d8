// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "sparc/context.hpp"
#include "sparc/graph.hpp"
#include "sparc/inequality.hpp"
#include "sparc/relation_set.hpp"

namespace sparc {

// One traversal edge. r_c holds the relations stated head -> tail, r_ic
// the relations stated tail -> head, and r_d the deductions head -> tail,
// which start as the inverse of r_ic so every link reads in traversal
// direction.
struct ReasoningLink {
    std::string head;
    std::string tail;
    RelationSet r_c;
    RelationSet r_ic;
    RelationSet r_d;
};

// Chained links from the question head to the question tail:
// links[i].head == links[i-1].tail, at least one link.
struct ReasoningPath {
    std::vector<ReasoningLink> links;

    const std::string& head() const { return links.front().head; }
    const std::string& tail() const { return links.back().tail; }
    int num_hops() const { return static_cast<int>(links.size()); }
};

// Minimal-hop path between two entities; ties resolve to the
// lexicographically smallest intermediate id sequence. Throws
// NoPathError when either id is unknown or unreachable.
ReasoningPath find_path(const SymbolicContext& ctx, const RelationGraph& graph, const std::string& h_q,
                        const std::string& t_q);

ReasoningPath reverse_path(const ReasoningPath& path);

// Progressive merge states. spans[k] is the relation set deduced between
// the question head and links[k].tail; spans.back() is the answer. A span
// (including the final one) may be empty when nothing is deducible yet.
struct DerivationTrace {
    std::vector<RelationSet> spans;
    RelationSet answer;
};

// Folds the path under the property set's composition engine:
// quantitative offsets (point objects, specified), sign-only offsets
// (point objects, unspecified), the derivation-rule closure (extended 3D,
// incomplete), or boundary inequalities (extended 2D, unspecified). The
// mode switch picks entailment or literal semantics for the inequality
// engine only. An empty answer is the nothing-deducible signal, not an
// error.
DerivationTrace derive_trace(const ReasoningPath& path, const PropertySet& ps,
                             DeductionMode mode = DeductionMode::Entailment);
RelationSet derive_answer(const ReasoningPath& path, const PropertySet& ps,
                          DeductionMode mode = DeductionMode::Entailment);

// A context/question pair with its derived path and answer. reasoning is
// filled by the step verbalizer when instances are materialized for files.
struct QAInstance {
    std::string id;
    SymbolicContext context;
    std::string question_head;
    std::string question_tail;
    RelationSet answer;
    ReasoningPath path;
    int num_hops = 0;
    std::vector<std::string> reasoning;
};

}  // namespace sparc
