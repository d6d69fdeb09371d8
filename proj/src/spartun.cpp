// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "sparc/spartun.hpp"

#include <algorithm>
#include <set>

#include "sparc/errors.hpp"

namespace sparc {

namespace {

bool rule_scope(Relation r) { return rule_directional(r) || rule_proper_part(r); }

void check_reverses(const std::set<RuleFact>& facts) {
    for (const auto& f : facts) {
        if (!rule_scope(f.relation)) continue;
        RuleFact reversed{f.head, inverse(f.relation), f.tail};
        if (facts.count(reversed)) {
            throw ContradictionError("contradiction: " + f.head + " is both " +
                                     relation_name(f.relation) + " and " +
                                     relation_name(reversed.relation) + " of " + f.tail);
        }
    }
}

std::set<RuleFact> one_step(const std::set<RuleFact>& facts) {
    std::set<RuleFact> derived;
    auto emit = [&](RuleFact f) {
        if (!facts.count(f)) derived.insert(std::move(f));
    };

    for (const auto& f : facts) {
        if (rule_scope(f.relation)) {
            emit({f.tail, inverse(f.relation), f.head});
        } else if (is_symmetric(f.relation)) {
            emit({f.tail, f.relation, f.head});
        }
    }

    // transitivity: R(x,z), R(z,y) => R(x,y)
    for (const auto& a : facts) {
        if (!rule_scope(a.relation)) continue;
        for (const auto& b : facts) {
            if (b.relation != a.relation || b.head != a.tail) continue;
            if (a.head == b.tail) continue;  // would only assert R(x,x)
            emit({a.head, a.relation, b.tail});
        }
    }

    // combination: PP(x,z), R(z,h), PPi(h,y) => R(x,y), directional R.
    // The proper-part legs let a directional statement pass through a
    // container on each side.
    for (const auto& pp : facts) {
        if (pp.relation != Relation::TPP && pp.relation != Relation::NTPP) continue;
        for (const auto& mid : facts) {
            if (!rule_directional(mid.relation) || mid.head != pp.tail) continue;
            for (const auto& ppi : facts) {
                if (ppi.relation != Relation::TPPI && ppi.relation != Relation::NTPPI) continue;
                if (ppi.head != mid.tail) continue;
                if (pp.head == ppi.tail) continue;
                emit({pp.head, mid.relation, ppi.tail});
            }
        }
    }
    return derived;
}

}  // namespace

bool rule_directional(Relation r) {
    switch (r) {
        case Relation::LEFT:
        case Relation::RIGHT:
        case Relation::ABOVE:
        case Relation::BELOW:
        case Relation::FRONT:
        case Relation::BEHIND:
            return true;
        default:
            return false;
    }
}

bool rule_proper_part(Relation r) {
    switch (r) {
        case Relation::TPP:
        case Relation::NTPP:
        case Relation::TPPI:
        case Relation::NTPPI:
            return true;
        default:
            return false;
    }
}

FactSet normalize_facts(FactSet facts) {
    std::sort(facts.begin(), facts.end());
    facts.erase(std::unique(facts.begin(), facts.end()), facts.end());
    return facts;
}

FactSet spartun_step(const FactSet& facts) {
    std::set<RuleFact> base(facts.begin(), facts.end());
    check_reverses(base);
    std::set<RuleFact> derived = one_step(base);
    std::set<RuleFact> merged = base;
    merged.insert(derived.begin(), derived.end());
    check_reverses(merged);
    return {derived.begin(), derived.end()};
}

FactSet spartun_closure(const FactSet& facts) {
    std::set<RuleFact> all(facts.begin(), facts.end());
    check_reverses(all);
    for (;;) {
        std::set<RuleFact> derived = one_step(all);
        if (derived.empty()) break;
        all.insert(derived.begin(), derived.end());
        check_reverses(all);
    }
    return {all.begin(), all.end()};
}

}  // namespace sparc
