// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sparc/property_set.hpp"
#include "sparc/relation_set.hpp"

namespace sparc {

struct Entity {
    std::string id;           // case preserved, inner whitespace collapsed
    bool described = false;   // multiword noun phrase rather than a bare token

    bool operator==(const Entity&) const = default;
};

// One stated relation between two entities, in the direction the story
// states it. sentence_index points into SymbolicContext::text.
struct ContextTriple {
    std::string head;
    RelationSet relations;
    std::string tail;
    std::optional<int> sentence_index;

    bool operator==(const ContextTriple&) const = default;
};

struct SymbolicContext {
    std::string id;
    const PropertySet* property_set = &PropertySet::ps2();
    std::vector<Entity> entities;
    std::vector<ContextTriple> triples;
    std::vector<std::string> text;  // one sentence per element

    bool operator==(const SymbolicContext& o) const;
    const Entity* find_entity(const std::string& id) const;
    int entity_index(const std::string& id) const;  // -1 when absent
};

// Appends a triple, merging with an existing statement over the same
// ordered pair by label union (magnitudes must agree per axis where both
// state one). Registers unseen entities. Throws ContradictionError when
// a union would hold a label and its inverse or two region-connection
// members, and Error on head == tail or an empty relation set.
void add_triple(SymbolicContext& ctx, ContextTriple triple);

// JSON record round trip ("id", "text", "entities", "triples",
// "property_set"). ingest validates field presence and types and
// reports every missing field in one SchemaError.
nlohmann::json emit(const SymbolicContext& ctx);
SymbolicContext ingest_annotated(const nlohmann::json& record);

}  // namespace sparc
