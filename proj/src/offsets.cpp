// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "sparc/offsets.hpp"

#include "sparc/errors.hpp"

namespace sparc {

namespace {

AxisDelta fold_axis(AxisDelta acc, AxisDelta incoming, bool quantitative) {
    if (!acc.valid || !incoming.valid) return AxisDelta::invalid();
    // Opposite signs cancel by an unknown amount when unit counts are
    // not stated, so the axis stops being decidable.
    if (!quantitative && acc.units * incoming.units < 0) return AxisDelta::invalid();
    return {true, acc.units + incoming.units};
}

}  // namespace

OffsetVector compose_offsets(const OffsetVector& first, const OffsetVector& second, bool quantitative) {
    if (first.tail != second.head) {
        throw ChainBreakError("cannot compose (" + first.head + " -> " + first.tail + ") with (" +
                              second.head + " -> " + second.tail + "): inner entities differ");
    }
    OffsetVector merged;
    merged.head = first.head;
    merged.tail = second.tail;
    merged.dx = fold_axis(first.dx, second.dx, quantitative);
    merged.dy = fold_axis(first.dy, second.dy, quantitative);
    return merged;
}

RelationSet offset_to_relations(const OffsetVector& v, bool with_magnitudes) {
    RelationSet out;
    if (v.dx.valid && v.dy.valid && v.dx.units == 0 && v.dy.units == 0) {
        out.insert(Label::Overlapping);
        return out;
    }
    Magnitudes mags;
    if (v.dy.valid && v.dy.units != 0) {
        out.insert(v.dy.units > 0 ? Label::Above : Label::Below);
        if (with_magnitudes) mags.y = v.dy.units > 0 ? v.dy.units : -v.dy.units;
    }
    if (v.dx.valid && v.dx.units != 0) {
        out.insert(v.dx.units > 0 ? Label::Right : Label::Left);
        if (with_magnitudes) mags.x = v.dx.units > 0 ? v.dx.units : -v.dx.units;
    }
    out.set_magnitudes(mags);
    return out;
}

OffsetVector relations_to_offset(const RelationSet& rs, const std::string& head, const std::string& tail) {
    OffsetVector v;
    v.head = head;
    v.tail = tail;
    bool directional = false;
    for (Label l : rs.labels()) {
        switch (l) {
            case Label::Right:
                v.dx.units = rs.magnitudes().x.value_or(1);
                directional = true;
                break;
            case Label::Left:
                v.dx.units = -rs.magnitudes().x.value_or(1);
                directional = true;
                break;
            case Label::Above:
                v.dy.units = rs.magnitudes().y.value_or(1);
                directional = true;
                break;
            case Label::Below:
                v.dy.units = -rs.magnitudes().y.value_or(1);
                directional = true;
                break;
            case Label::Overlapping:
                break;  // handled below
            default:
                throw ContradictionError("label \"" + label_text(l) + "\" has no planar offset");
        }
    }
    if (rs.contains(Label::Overlapping) && directional) {
        throw ContradictionError("overlapping cannot combine with a directional label");
    }
    return v;
}

}  // namespace sparc
