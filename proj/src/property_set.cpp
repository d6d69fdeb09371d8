// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "sparc/property_set.hpp"

#include "sparc/errors.hpp"

namespace sparc {

std::vector<Label> PropertySet::label_universe() const {
    if (objects == ObjectKind::Extended && completeness == Completeness::Incomplete) {
        std::vector<Label> all;
        for (std::size_t i = 0; i < kLabelCount; ++i) all.push_back(static_cast<Label>(i));
        return all;
    }
    if (objects == ObjectKind::Point) {
        return {Label::Above, Label::Below, Label::Left, Label::Right, Label::Overlapping};
    }
    return {Label::Above, Label::Below, Label::Left, Label::Right};
}

const PropertySet& PropertySet::ps1() {
    static const PropertySet ps{
        "PS1",
        ObjectKind::Extended,
        Completeness::Incomplete,
        Quantification::Unspecified,
        3,
        {Formalism::Topological, Formalism::DirectionalRelative, Formalism::Distance},
    };
    return ps;
}

const PropertySet& PropertySet::ps2() {
    static const PropertySet ps{
        "PS2",
        ObjectKind::Point,
        Completeness::Complete,
        Quantification::Specified,
        2,
        {Formalism::DirectionalRelative, Formalism::DirectionalCardinal, Formalism::DirectionalClock},
    };
    return ps;
}

const PropertySet& PropertySet::ps3() {
    static const PropertySet ps{
        "PS3",
        ObjectKind::Point,
        Completeness::Complete,
        Quantification::Unspecified,
        2,
        {Formalism::DirectionalRelative, Formalism::DirectionalCardinal, Formalism::DirectionalClock},
    };
    return ps;
}

const PropertySet& PropertySet::ps4() {
    static const PropertySet ps{
        "PS4",
        ObjectKind::Extended,
        Completeness::Complete,
        Quantification::Unspecified,
        2,
        {Formalism::DirectionalRelative},
    };
    return ps;
}

const PropertySet& PropertySet::by_name(const std::string& name) {
    std::string n = normalize_token(name);
    if (n == "ps1") return ps1();
    if (n == "ps2") return ps2();
    if (n == "ps3") return ps3();
    if (n == "ps4") return ps4();
    throw SchemaError("unknown property set: \"" + name + "\" (expected PS1..PS4)");
}

const std::vector<const PropertySet*>& PropertySet::all() {
    static const std::vector<const PropertySet*> v{&ps1(), &ps2(), &ps3(), &ps4()};
    return v;
}

}  // namespace sparc
