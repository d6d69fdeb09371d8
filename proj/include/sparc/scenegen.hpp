// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "sparc/context.hpp"
#include "sparc/property_set.hpp"
#include "sparc/rng.hpp"

namespace sparc {

// Where an entity really sits: integer box corners with start <= end per
// axis. Points have zero extent; planar objects keep z at zero.
struct ScenePlacement {
    std::string id;
    int x0 = 0, y0 = 0, z0 = 0;
    int x1 = 0, y1 = 0, z1 = 0;

    bool operator==(const ScenePlacement&) const = default;
};

// A generated story plus the geometry it was read off from. Every stated
// triple holds in the geometry, so any sound deduction over the context
// agrees with the placements.
struct Scene {
    SymbolicContext context;
    std::vector<ScenePlacement> placements;  // creation order, not sentence order

    const ScenePlacement* find(const std::string& id) const;
};

// Builds a consistent random scene for the property set: a chain of
// points for the planar point sets, a chain of rectangles for the planar
// extended set, and nested boxes in directionally related rooms for the
// three-dimensional set. Statement sentences stay within the stock
// pattern table, so parsing the text reproduces the triples. n_entities
// spans 2 through 26.
Scene gen_scene(const PropertySet& ps, int n_entities, Rng& rng);

}  // namespace sparc
