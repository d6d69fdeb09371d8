// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "sparc/relations.hpp"

namespace sparc {

// One directed atom over the rule-engine vocabulary: relative directions,
// region connection, and near/far. Cardinal and clock members are
// canonicalized away before facts are built.
struct RuleFact {
    std::string head;
    Relation relation;
    std::string tail;

    bool operator==(const RuleFact&) const = default;
    auto operator<=>(const RuleFact&) const = default;
};

using FactSet = std::vector<RuleFact>;  // kept sorted and unique

// True for members the directional rules range over (the six relative
// directions) and the proper-part members TPP/NTPP/TPPI/NTPPI.
bool rule_directional(Relation r);
bool rule_proper_part(Relation r);

// Facts derivable by exactly one application of the four derivation
// rules, minus what is already present:
//   inverse:      R(y,x)              => reverse(R)(x,y)   for directional or proper-part R
//   symmetry:     R(y,x)              => R(x,y)             for symmetric R
//   transitivity: R(x,z), R(z,y)      => R(x,y)             for directional or proper-part R
//   combination:  PP(x,z), R(z,h), PPi(h,y) => R(x,y)       for directional R
// Throws ContradictionError if the input or the one-step extension holds
// both a fact and its reverse over the same ordered pair.
FactSet spartun_step(const FactSet& facts);

// Least fixpoint of spartun_step over the input. Idempotent; monotone in
// the input; same contradiction behavior.
FactSet spartun_closure(const FactSet& facts);

// Sorted/unique normalization used by both entry points.
FactSet normalize_facts(FactSet facts);

}  // namespace sparc
