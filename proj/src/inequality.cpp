// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "sparc/inequality.hpp"

#include <deque>

#include "sparc/errors.hpp"

namespace sparc {

namespace {

constexpr int var_offset(BoundaryVar v) { return static_cast<int>(v); }

}  // namespace

void InequalityStore::register_entity(const std::string& id) {
    if (entity_base_.count(id)) return;
    int base = static_cast<int>(adjacency_.size());
    entity_base_[id] = base;
    adjacency_.resize(adjacency_.size() + 4);
    // Non-degenerate extents.
    add_edge(base + var_offset(BoundaryVar::XStart), base + var_offset(BoundaryVar::XEnd), true);
    add_edge(base + var_offset(BoundaryVar::YStart), base + var_offset(BoundaryVar::YEnd), true);
}

bool InequalityStore::has_entity(const std::string& id) const { return entity_base_.count(id) > 0; }

int InequalityStore::variable_index(const std::string& id, BoundaryVar v) const {
    auto it = entity_base_.find(id);
    if (it == entity_base_.end()) throw Error("entity not registered: " + id);
    return it->second + var_offset(v);
}

int InequalityStore::intern(const std::string& id, BoundaryVar v) {
    register_entity(id);
    return variable_index(id, v);
}

void InequalityStore::add_edge(int from, int to, bool strict) {
    edges_.push_back({from, to, strict});
    adjacency_[static_cast<std::size_t>(from)].push_back(static_cast<int>(edges_.size()) - 1);
}

void InequalityStore::add_le(const std::string& a, BoundaryVar va, const std::string& b, BoundaryVar vb) {
    add_edge(intern(a, va), intern(b, vb), false);
}

void InequalityStore::add_lt(const std::string& a, BoundaryVar va, const std::string& b, BoundaryVar vb) {
    add_edge(intern(a, va), intern(b, vb), true);
}

bool InequalityStore::reachable(int from, int to) const {
    if (from == to) return true;
    std::vector<char> seen(adjacency_.size(), 0);
    std::deque<int> queue{from};
    seen[static_cast<std::size_t>(from)] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int e : adjacency_[static_cast<std::size_t>(v)]) {
            int next = edges_[static_cast<std::size_t>(e)].to;
            if (seen[static_cast<std::size_t>(next)]) continue;
            if (next == to) return true;
            seen[static_cast<std::size_t>(next)] = 1;
            queue.push_back(next);
        }
    }
    return false;
}

bool InequalityStore::consistent() const {
    // A strict edge inside a cycle forces v < v. Graphs here are tiny,
    // so a reachability probe per strict edge is plenty.
    for (const auto& e : edges_) {
        if (e.strict && reachable(e.to, e.from)) return false;
    }
    return true;
}

bool InequalityStore::entails_le(const std::string& a, BoundaryVar va, const std::string& b,
                                 BoundaryVar vb) const {
    auto ia = entity_base_.find(a);
    auto ib = entity_base_.find(b);
    if (ia == entity_base_.end() || ib == entity_base_.end()) return false;
    return reachable(ia->second + var_offset(va), ib->second + var_offset(vb));
}

PrimaryInequality primary_inequality(Label l, const std::string& head, const std::string& tail) {
    switch (l) {
        case Label::Left:  // x_e(head) <= x_s(tail)
            return {head, BoundaryVar::XEnd, tail, BoundaryVar::XStart};
        case Label::Right:  // x_s(head) >= x_e(tail)
            return {tail, BoundaryVar::XEnd, head, BoundaryVar::XStart};
        case Label::Above:  // y_s(head) >= y_e(tail)
            return {tail, BoundaryVar::YEnd, head, BoundaryVar::YStart};
        case Label::Below:  // y_e(head) <= y_s(tail)
            return {head, BoundaryVar::YEnd, tail, BoundaryVar::YStart};
        default:
            throw Error("label \"" + label_text(l) + "\" has no primary inequality");
    }
}

void assert_context_inequalities(const std::string& head, const RelationSet& relations,
                                 const std::string& tail, InequalityStore& store,
                                 Completeness completeness) {
    store.register_entity(head);
    store.register_entity(tail);
    auto dirs = relations.directional_labels();
    for (Label l : dirs) {
        auto pi = primary_inequality(l, head, tail);
        store.add_le(pi.lesser_entity, pi.lesser_var, pi.greater_entity, pi.greater_var);
    }
    // A lone directional statement under complete relations also says
    // the two objects are not separated on the other axis.
    if (completeness == Completeness::Complete && dirs.size() == 1) {
        bool horizontal = is_horizontal(dirs[0]);
        BoundaryVar s = horizontal ? BoundaryVar::YStart : BoundaryVar::XStart;
        BoundaryVar e = horizontal ? BoundaryVar::YEnd : BoundaryVar::XEnd;
        store.add_le(head, s, tail, e);
        store.add_le(tail, s, head, e);
    }
    if (!store.consistent()) {
        throw InconsistencyError("statement " + head + " {" + relations.answer_text() + "} " + tail +
                                 " contradicts earlier statements");
    }
}

RelationSet deduce_directions(const std::string& head, const std::string& tail, InequalityStore& store,
                              DeductionMode mode) {
    static const Label kOrder[] = {Label::Left, Label::Right, Label::Above, Label::Below};
    RelationSet out;
    for (Label l : kOrder) {
        auto pi = primary_inequality(l, head, tail);
        if (mode == DeductionMode::Entailment) {
            if (store.entails_le(pi.lesser_entity, pi.lesser_var, pi.greater_entity, pi.greater_var)) {
                out.insert(l);
                store.add_le(pi.lesser_entity, pi.lesser_var, pi.greater_entity, pi.greater_var);
            }
            continue;
        }
        // Literal mode: keep the direction if its inequality is merely
        // consistent, then let it constrain the following candidates.
        InequalityStore probe = store;
        probe.add_le(pi.lesser_entity, pi.lesser_var, pi.greater_entity, pi.greater_var);
        if (probe.consistent()) {
            out.insert(l);
            store.add_le(pi.lesser_entity, pi.lesser_var, pi.greater_entity, pi.greater_var);
        }
    }
    return out;
}

RelationSet compose_inequalities(const EntityPair& first, const EntityPair& second,
                                 InequalityStore& store, DeductionMode mode) {
    if (first.tail != second.head) {
        throw ChainBreakError("cannot compose (" + first.head + " -> " + first.tail + ") with (" +
                              second.head + " -> " + second.tail + "): inner entities differ");
    }
    return deduce_directions(first.head, second.tail, store, mode);
}

}  // namespace sparc
