// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "sparc/relations.hpp"

namespace sparc {

enum class ObjectKind : std::uint8_t { Point, Extended };
enum class Completeness : std::uint8_t { Incomplete, Complete };
enum class Quantification : std::uint8_t { Specified, Unspecified };

// A configuration of the spatial properties a dataset is generated and
// reasoned under. The four shipped configurations:
//   PS1: extended objects, incomplete relations, unquantified (rule engine)
//   PS2: point objects, complete relations, quantified   (offset engine)
//   PS3: point objects, complete relations, unquantified (offset engine)
//   PS4: extended objects, complete relations, unquantified (inequalities)
// Point of view is fixed-orientation for all of them.
struct PropertySet {
    std::string name;
    ObjectKind objects = ObjectKind::Point;
    Completeness completeness = Completeness::Complete;
    Quantification quantification = Quantification::Unspecified;
    int dimensions = 2;
    std::vector<Formalism> formalisms;

    bool quantitative() const { return quantification == Quantification::Specified; }
    bool extended() const { return objects == ObjectKind::Extended; }

    // Answer/choice vocabulary. PS1 spans all sixteen labels; the point
    // configurations add "overlapping" for coincident positions; PS4 is
    // the four planar directions only.
    std::vector<Label> label_universe() const;

    static const PropertySet& ps1();
    static const PropertySet& ps2();
    static const PropertySet& ps3();
    static const PropertySet& ps4();
    static const PropertySet& by_name(const std::string& name);  // "PS1".."PS4", case-insensitive
    static const std::vector<const PropertySet*>& all();
};

}  // namespace sparc
