// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <regex>
#include <string>
#include <vector>

#include "sparc/context.hpp"
#include "sparc/relations.hpp"

namespace sparc {

// One sentence template: an anchored regex plus slot assignments that
// say which capture group carries each role. Slot values are either a
// 1-based group index or "!text" for a literal relation token.
struct SentencePattern {
    std::string name;
    std::regex regex;
    int head = 0;
    int tail = 0;
    int rel = 0;
    int rel2 = 0;
    int mag = 0;   // magnitude attached to rel's axis
    int mag2 = 0;  // magnitude attached to rel2's axis
    int clock = 0; // hour 1..12, mapped through the dial
    std::string rel_literal;
    std::string rel2_literal;
};

// Loads "name<TAB>regex<TAB>slot=value,..." lines; '#' comments and
// blank lines ignored. Patterns are tried in file order, first match
// wins, so specific templates must precede catch-alls.
class PatternTable {
  public:
    static PatternTable load(const std::string& path);
    const std::vector<SentencePattern>& patterns() const { return patterns_; }

  private:
    std::vector<SentencePattern> patterns_;
};

// Turns story sentences into a symbolic context. Each sentence must
// match one pattern and resolve to exactly one triple; otherwise an
// UnparseableSentenceError carries the sentence index and text.
// Magnitudes are recorded only when the property set is quantitative
// (stated counts, else one unit per stated directional label).
SymbolicContext parse_story(const std::vector<std::string>& sentences, const PropertySet& ps,
                            const PatternTable& patterns, const SynonymTable* synonyms = nullptr);

}  // namespace sparc
