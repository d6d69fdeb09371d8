// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "sparc/context.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "sparc/errors.hpp"

namespace sparc {

namespace {

std::string collapse_ws(const std::string& s) {
    std::string out;
    bool pending = false;
    for (char c : s) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            if (!out.empty()) pending = true;
            continue;
        }
        if (pending) {
            out.push_back(' ');
            pending = false;
        }
        out.push_back(c);
    }
    return out;
}

void merge_magnitudes(Magnitudes& into, const Magnitudes& from, const ContextTriple& t) {
    auto merge_axis = [&](std::optional<int>& a, const std::optional<int>& b, const char* axis) {
        if (!b) return;
        if (a && *a != *b) {
            throw ContradictionError("conflicting " + std::string(axis) + " magnitudes between " +
                                     t.head + " and " + t.tail);
        }
        a = b;
    };
    merge_axis(into.x, from.x, "horizontal");
    merge_axis(into.y, from.y, "vertical");
}

}  // namespace

bool SymbolicContext::operator==(const SymbolicContext& o) const {
    return id == o.id && property_set->name == o.property_set->name && entities == o.entities &&
           triples == o.triples && text == o.text;
}

const Entity* SymbolicContext::find_entity(const std::string& eid) const {
    for (const auto& e : entities) {
        if (e.id == eid) return &e;
    }
    return nullptr;
}

int SymbolicContext::entity_index(const std::string& eid) const {
    for (std::size_t i = 0; i < entities.size(); ++i) {
        if (entities[i].id == eid) return static_cast<int>(i);
    }
    return -1;
}

void add_triple(SymbolicContext& ctx, ContextTriple triple) {
    triple.head = collapse_ws(triple.head);
    triple.tail = collapse_ws(triple.tail);
    if (triple.head.empty() || triple.tail.empty()) throw Error("triple with empty entity id");
    if (triple.head == triple.tail) {
        throw Error("triple relates \"" + triple.head + "\" to itself");
    }
    if (triple.relations.empty()) {
        throw Error("triple " + triple.head + " -> " + triple.tail + " with empty relation set");
    }
    for (const auto& eid : {triple.head, triple.tail}) {
        if (!ctx.find_entity(eid)) {
            ctx.entities.push_back({eid, eid.find(' ') != std::string::npos});
        }
    }
    for (auto& existing : ctx.triples) {
        if (existing.head == triple.head && existing.tail == triple.tail) {
            Magnitudes merged = existing.relations.magnitudes();
            merge_magnitudes(merged, triple.relations.magnitudes(), triple);
            existing.relations = existing.relations.union_with(triple.relations);
            existing.relations.set_magnitudes(merged);
            if (!existing.sentence_index) existing.sentence_index = triple.sentence_index;
            return;
        }
    }
    ctx.triples.push_back(std::move(triple));
}

nlohmann::json emit(const SymbolicContext& ctx) {
    nlohmann::json rec;
    rec["id"] = ctx.id;
    rec["property_set"] = ctx.property_set->name;
    rec["text"] = ctx.text;
    nlohmann::json ents = nlohmann::json::array();
    for (const auto& e : ctx.entities) ents.push_back(e.id);
    rec["entities"] = ents;
    nlohmann::json triples = nlohmann::json::array();
    for (const auto& t : ctx.triples) {
        nlohmann::json jt;
        jt["head"] = t.head;
        jt["tail"] = t.tail;
        nlohmann::json rels = nlohmann::json::array();
        for (Label l : t.relations.labels()) rels.push_back(label_text(l));
        jt["relations"] = rels;
        const auto& m = t.relations.magnitudes();
        if (m.empty()) {
            jt["magnitudes"] = nullptr;
        } else {
            nlohmann::json jm;
            if (m.x) jm["dx"] = *m.x;
            if (m.y) jm["dy"] = *m.y;
            jt["magnitudes"] = jm;
        }
        jt["sentence"] = t.sentence_index ? nlohmann::json(*t.sentence_index) : nlohmann::json(nullptr);
        triples.push_back(jt);
    }
    rec["triples"] = triples;
    return rec;
}

SymbolicContext ingest_annotated(const nlohmann::json& record) {
    std::vector<std::string> missing;
    for (const char* field : {"id", "text", "entities", "triples", "property_set"}) {
        if (!record.contains(field)) missing.emplace_back(field);
    }
    if (!missing.empty()) {
        std::string msg = "context record missing field(s):";
        for (const auto& f : missing) msg += " " + f;
        throw SchemaError(msg);
    }
    if (!record["text"].is_array() || !record["entities"].is_array() || !record["triples"].is_array()) {
        throw SchemaError("context record: text, entities and triples must be arrays");
    }

    SymbolicContext ctx;
    ctx.id = record["id"].get<std::string>();
    ctx.property_set = &PropertySet::by_name(record["property_set"].get<std::string>());
    for (const auto& s : record["text"]) ctx.text.push_back(s.get<std::string>());
    for (const auto& e : record["entities"]) {
        std::string id = collapse_ws(e.get<std::string>());
        if (!ctx.find_entity(id)) ctx.entities.push_back({id, id.find(' ') != std::string::npos});
    }
    for (const auto& jt : record["triples"]) {
        std::vector<std::string> tmissing;
        for (const char* field : {"head", "relations", "tail"}) {
            if (!jt.contains(field)) tmissing.emplace_back(field);
        }
        if (!tmissing.empty()) {
            std::string msg = "triple record missing field(s):";
            for (const auto& f : tmissing) msg += " " + f;
            throw SchemaError(msg);
        }
        ContextTriple t;
        t.head = jt["head"].get<std::string>();
        t.tail = jt["tail"].get<std::string>();
        RelationSet rels;
        for (const auto& r : jt["relations"]) {
            auto l = parse_label_text(r.get<std::string>());
            if (!l) {
                // Accept any token the general parser knows (relation
                // names, e.g. "NTPP"), mapped to canonical labels.
                for (Label cl : canonical_labels(parse_label(r.get<std::string>()))) rels.insert(cl);
                continue;
            }
            rels.insert(*l);
        }
        if (jt.contains("magnitudes") && !jt["magnitudes"].is_null()) {
            Magnitudes m;
            if (jt["magnitudes"].contains("dx")) m.x = jt["magnitudes"]["dx"].get<int>();
            if (jt["magnitudes"].contains("dy")) m.y = jt["magnitudes"]["dy"].get<int>();
            rels.set_magnitudes(m);
        }
        t.relations = rels;
        if (jt.contains("sentence") && !jt["sentence"].is_null()) {
            t.sentence_index = jt["sentence"].get<int>();
        }
        add_triple(ctx, std::move(t));
    }
    return ctx;
}

}  // namespace sparc
