// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "sparc/pathgen.hpp"
#include "sparc/relation_set.hpp"
#include "sparc/rng.hpp"
#include "sparc/scenegen.hpp"
#include "sparc/spartun.hpp"

// Independent re-derivations of engine answers. Each oracle recomputes a
// result by a method that shares no code with the engine it checks —
// coordinate read-off, brute-force enumeration, or a plainly restated
// rule loop — so agreement certifies the engine, not the test.
namespace sparc::testing {

// Point-pair answer read straight off stored coordinates, composition
// bypassed entirely. Magnitudes attach when with_magnitudes.
RelationSet offsets_from_scene(const Scene& scene, const std::string& head, const std::string& tail,
                               bool with_magnitudes);

// Sign-only path answer by enumerating concrete unit counts. Every
// stated direction contributes an unknown count in {1 .. links+1} on its
// axis; a direction is asserted exactly when all assignments agree on
// the sign of the summed displacement, and "overlapping" when both axes
// sum to zero under every assignment. The bound suffices: with p
// positive and n negative contributions on an axis (p, n >= 1, p + n <=
// links), counts of links+1 on one side and 1 on the other realize both
// signs, and counts n/gcd vs p/gcd realize zero.
RelationSet signs_by_enumeration(const ReasoningPath& path);

// Draws `samples` random count assignments in [1, 10] per contribution
// and checks `labels` holds in each — signs beyond the enumeration bound.
bool signs_hold_under_sampling(const ReasoningPath& path, const RelationSet& labels, Rng& rng,
                               int samples);

// Boundary-inequality path answer by exhaustive placement: every path
// entity becomes an integer interval per axis on 0 .. grid_max(n), and a
// direction is asserted exactly when its defining inequality holds in
// every placement satisfying all statements along the path. Statements
// constrain consecutive entities only, so placements are enumerated as
// reachable (first interval, current interval) pairs walked down the
// chain — the same space as the naive product, factored.
RelationSet directions_by_placement(const ReasoningPath& path);

// The unfactored check on a fixed grid, affordable for short paths only.
// Used to certify the walk above enumerates the same space.
RelationSet directions_by_bruteforce(const ReasoningPath& path, int grid_max);

// Grid wide enough that any real-coordinate placement of n entities maps
// onto it order-exactly: 2n endpoint values need 2n grid points.
int placement_grid_max(int n_entities);

// Rule closure recomputed by a deliberately plain loop: apply inverse,
// symmetry, same-member transitivity, and the part-direction-whole
// combination until nothing new appears. Throws ContradictionError when
// a fact and its reverse meet on one ordered pair, like the engine.
FactSet closure_by_iteration(const FactSet& facts);

// Facts a path states (both stated directions) / a context states.
FactSet facts_of_path(const ReasoningPath& path);
FactSet facts_of_context(const SymbolicContext& ctx);

// Labels between head and tail read from a closed fact set with a
// hand-written member-to-label table.
RelationSet labels_from_closure(const FactSet& closed, const std::string& head, const std::string& tail);

// True when every asserted label is consistent with the stored boxes:
// directions mean separation along their axis, containment means the head
// box sits within the tail box (boundary contact allowed), outside means
// disjoint boxes. Near and far carry no fixed threshold and pass as-is.
bool labels_geometrically_sound(const Scene& scene, const std::string& head, const std::string& tail,
                                const RelationSet& labels);

}  // namespace sparc::testing
