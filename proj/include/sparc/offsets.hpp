// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "sparc/relation_set.hpp"

namespace sparc {

// One axis of a signed offset. Invalid marks an axis where composition
// hit opposite signs without magnitudes to resolve them; it is absorbing.
struct AxisDelta {
    bool valid = true;
    int units = 0;  // meaningless when !valid

    static AxisDelta invalid() { return {false, 0}; }
    bool operator==(const AxisDelta&) const = default;
};

// Signed planar offset of head relative to tail: dx > 0 means head is
// right of tail, dy > 0 means head is above tail.
struct OffsetVector {
    std::string head;
    std::string tail;
    AxisDelta dx;
    AxisDelta dy;

    bool both_invalid() const { return !dx.valid && !dy.valid; }
};

// Sums the two offsets axis by axis. Without magnitudes (quantitative ==
// false) an accumulated delta meeting an incoming delta of strictly
// opposite sign cannot be resolved, so that axis becomes Invalid.
// Requires first.tail == second.head (ChainBreakError otherwise).
OffsetVector compose_offsets(const OffsetVector& first, const OffsetVector& second, bool quantitative);

// Reads the label set off an offset: sign of each valid axis, nothing
// for zero or Invalid axes, {overlapping} for an exact (0,0). Unit
// counts are attached only when with_magnitudes is set. An empty result
// with at least one Invalid axis means nothing can be concluded.
RelationSet offset_to_relations(const OffsetVector& v, bool with_magnitudes);

// Builds an offset from directional labels and optional magnitudes
// (default one unit per stated label). Only planar directional labels
// and "overlapping" are representable; overlapping cannot be combined
// with a directional label on the same pair.
OffsetVector relations_to_offset(const RelationSet& rs, const std::string& head, const std::string& tail);

}  // namespace sparc
