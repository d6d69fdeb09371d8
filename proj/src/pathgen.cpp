// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "sparc/pathgen.hpp"

#include <algorithm>

#include "sparc/errors.hpp"
#include "sparc/offsets.hpp"
#include "sparc/spartun.hpp"

namespace sparc {

namespace {

// Relations known in traversal direction: stated ones plus the inverted
// tail -> head statements (label union, magnitudes merged).
RelationSet forward_relations(const ReasoningLink& link) {
    if (link.r_c.empty()) return link.r_d;
    if (link.r_d.empty()) return link.r_c;
    return link.r_c.union_with(link.r_d);
}

DerivationTrace trace_offsets(const ReasoningPath& path, bool quantitative) {
    DerivationTrace trace;
    OffsetVector span = relations_to_offset(forward_relations(path.links.front()), path.links.front().head,
                                            path.links.front().tail);
    trace.spans.push_back(offset_to_relations(span, quantitative));
    for (std::size_t i = 1; i < path.links.size(); ++i) {
        const ReasoningLink& link = path.links[i];
        OffsetVector next = relations_to_offset(forward_relations(link), link.head, link.tail);
        span = compose_offsets(span, next, quantitative);
        trace.spans.push_back(offset_to_relations(span, quantitative));
    }
    trace.answer = trace.spans.back();
    return trace;
}

void add_rule_facts(FactSet& facts, const std::string& head, const RelationSet& rels, const std::string& tail) {
    for (Label l : rels.labels()) facts.push_back({head, relation_of(l), tail});
}

RelationSet read_off(const FactSet& closure, const std::string& head, const std::string& tail) {
    RelationSet out;
    for (const RuleFact& f : closure) {
        if (f.head != head || f.tail != tail) continue;
        for (Label l : canonical_labels(f.relation)) out.insert(l);
    }
    return out;
}

// Extended-object 3D links: facts grow link by link in their stated
// directions and the closure is re-read between the question head and the
// current link tail. The combination rule can span three links, so the
// whole prefix is closed each round rather than composing pairwise.
DerivationTrace trace_closure(const ReasoningPath& path) {
    DerivationTrace trace;
    FactSet facts;
    const std::string& h_q = path.links.front().head;
    for (const ReasoningLink& link : path.links) {
        add_rule_facts(facts, link.head, link.r_c, link.tail);
        add_rule_facts(facts, link.tail, link.r_ic, link.head);
        facts = normalize_facts(std::move(facts));
        trace.spans.push_back(read_off(spartun_closure(facts), h_q, link.tail));
    }
    trace.answer = trace.spans.back();
    return trace;
}

// Extended-object planar links: the whole story is on the table before
// deduction starts, so every statement's inequalities go in first; the
// span is then deduced pair by pair along the path.
DerivationTrace trace_inequalities(const ReasoningPath& path, Completeness completeness, DeductionMode mode) {
    DerivationTrace trace;
    InequalityStore store;
    store.register_entity(path.links.front().head);
    for (const ReasoningLink& link : path.links) {
        store.register_entity(link.tail);
        if (!link.r_c.empty()) assert_context_inequalities(link.head, link.r_c, link.tail, store, completeness);
        if (!link.r_ic.empty()) assert_context_inequalities(link.tail, link.r_ic, link.head, store, completeness);
    }
    const std::string& h_q = path.links.front().head;
    trace.spans.push_back(deduce_directions(h_q, path.links.front().tail, store, mode));
    for (std::size_t i = 1; i < path.links.size(); ++i) {
        const ReasoningLink& link = path.links[i];
        trace.spans.push_back(compose_inequalities({h_q, link.head}, {link.head, link.tail}, store, mode));
    }
    trace.answer = trace.spans.back();
    return trace;
}

}  // namespace

ReasoningPath find_path(const SymbolicContext& ctx, const RelationGraph& graph, const std::string& h_q,
                        const std::string& t_q) {
    int from = ctx.entity_index(h_q);
    int to = ctx.entity_index(t_q);
    if (from < 0 || to < 0) {
        throw NoPathError("unknown entity in question: '" + (from < 0 ? h_q : t_q) + "'");
    }
    if (from == to) throw NoPathError("question relates '" + h_q + "' to itself");
    std::vector<int> nodes = shortest_path(graph, ctx, from, to);

    ReasoningPath path;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        const GraphEdge* e = graph.edge_between(nodes[i], nodes[i + 1]);
        ReasoningLink link;
        link.head = ctx.entities[static_cast<std::size_t>(nodes[i])].id;
        link.tail = ctx.entities[static_cast<std::size_t>(nodes[i + 1])].id;
        int forward = (e->a == nodes[i]) ? e->triple_ab : e->triple_ba;
        int backward = (e->a == nodes[i]) ? e->triple_ba : e->triple_ab;
        if (forward >= 0) link.r_c = ctx.triples[static_cast<std::size_t>(forward)].relations;
        if (backward >= 0) link.r_ic = ctx.triples[static_cast<std::size_t>(backward)].relations;
        link.r_d = link.r_ic.inverted();
        path.links.push_back(std::move(link));
    }
    return path;
}

ReasoningPath reverse_path(const ReasoningPath& path) {
    ReasoningPath out;
    for (auto it = path.links.rbegin(); it != path.links.rend(); ++it) {
        ReasoningLink link;
        link.head = it->tail;
        link.tail = it->head;
        link.r_c = it->r_ic;
        link.r_ic = it->r_c;
        link.r_d = link.r_ic.inverted();
        out.links.push_back(std::move(link));
    }
    return out;
}

DerivationTrace derive_trace(const ReasoningPath& path, const PropertySet& ps, DeductionMode mode) {
    if (path.links.empty()) throw Error("cannot derive over an empty path");
    if (ps.objects == ObjectKind::Point) return trace_offsets(path, ps.quantitative());
    if (ps.dimensions == 3) return trace_closure(path);
    return trace_inequalities(path, ps.completeness, mode);
}

RelationSet derive_answer(const ReasoningPath& path, const PropertySet& ps, DeductionMode mode) {
    return derive_trace(path, ps, mode).answer;
}

}  // namespace sparc
