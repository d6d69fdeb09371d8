// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "sparc/verifier.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>

#include "sparc/errors.hpp"

namespace sparc {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool iequals(const std::string& a, const std::string& b) {
    return a.size() == b.size() && lower(a) == lower(b);
}

std::string strip_article(const std::string& s) {
    std::string low = lower(s);
    if (low.rfind("the ", 0) == 0) return s.substr(4);
    return s;
}

// Canonical entity id for a surface name: exact, then case-insensitive,
// then the same two with a leading article removed.
const std::string* resolve_entity(const SymbolicContext& ctx, const std::string& name) {
    for (const Entity& e : ctx.entities) {
        if (e.id == name) return &e.id;
    }
    for (const Entity& e : ctx.entities) {
        if (iequals(e.id, name)) return &e.id;
    }
    std::string bare = strip_article(name);
    if (bare.size() != name.size()) {
        for (const Entity& e : ctx.entities) {
            if (e.id == bare || iequals(e.id, bare)) return &e.id;
        }
    }
    return nullptr;
}

bool labels_within(const RelationSet& part, const RelationSet& whole) {
    return (part.mask() & ~whole.mask()) == 0;
}

std::string describe(const RelationSet& rs) {
    if (rs.empty()) return "nothing";
    std::string out;
    for (Label l : rs.labels()) {
        if (!out.empty()) out += ", ";
        out += label_text(l);
    }
    return out;
}

bool mentions_clock(const SymbolicContext& ctx, const std::optional<int>& sentence) {
    if (!sentence || *sentence < 0 || *sentence >= static_cast<int>(ctx.text.size())) return false;
    return lower(ctx.text[static_cast<std::size_t>(*sentence)]).find("o'clock") != std::string::npos;
}

// One premise of a merge after fusing duplicate pairs and orienting along
// the walk from the merge's head to its tail.
struct MergeLink {
    StepStatement oriented;  // head -> tail along the walk
    int source_index = 0;    // first cited step that produced it
    bool reversed = false;   // consumed against its stated direction
};

RelationSet fuse(const RelationSet& a, const RelationSet& b) {
    RelationSet out = a;
    for (Label l : b.labels()) out.insert_unchecked(l);
    Magnitudes m = a.magnitudes();
    if (!m.x) m.x = b.magnitudes().x;
    if (!m.y) m.y = b.magnitudes().y;
    out.set_magnitudes(m);
    return out;
}

class ChainChecker {
  public:
    ChainChecker(const std::vector<StepStatement>& steps, const SymbolicContext& ctx, const PropertySet& ps,
                 const RelationSet& expected_answer, DeductionMode mode)
        : steps_(steps), ctx_(ctx), ps_(ps), expected_answer_(expected_answer), mode_(mode) {}

    std::vector<ErrorFinding> run() {
        for (const StepStatement& step : steps_) {
            switch (step.kind) {
                case StepKind::FromContext: check_context(step); break;
                case StepKind::Inverted: check_inverted(step); break;
                case StepKind::Inferred: check_inferred(step); break;
                case StepKind::Answer: check_answer(step); break;
            }
            if (step.kind != StepKind::Answer) by_index_.emplace(step.index, &step);
        }
        return std::move(findings_);
    }

  private:
    void flag(const StepStatement& step, ErrorKind kind, std::string detail) {
        findings_.push_back({step.index, kind, std::move(detail)});
    }

    const StepStatement* premise(int index) const {
        auto it = by_index_.find(index);
        return it == by_index_.end() ? nullptr : it->second;
    }

    void check_context(const StepStatement& step) {
        const std::string* h = resolve_entity(ctx_, step.head);
        const std::string* t = resolve_entity(ctx_, step.tail);
        if (!h || !t) {
            flag(step, ErrorKind::IncorrectExtraction,
                 "the context describes no entity named '" + (h ? step.tail : step.head) + "'");
            return;
        }
        struct Candidate {
            RelationSet expected;
            std::optional<int> sentence;
        };
        std::vector<Candidate> candidates;
        for (const ContextTriple& tr : ctx_.triples) {
            if (tr.head == *h && tr.tail == *t) {
                candidates.push_back({tr.relations, tr.sentence_index});
            } else if (tr.head == *t && tr.tail == *h) {
                candidates.push_back({tr.relations.inverted(), tr.sentence_index});
            }
        }
        if (candidates.empty()) {
            flag(step, ErrorKind::IncorrectExtraction,
                 "the context states no relation between '" + *h + "' and '" + *t + "'");
            return;
        }
        RelationSet claimed = spoken_form(step.relations);
        for (const Candidate& c : candidates) {
            if (spoken_form(c.expected) == claimed) return;
        }
        const Candidate* best = &candidates.front();
        int best_overlap = -1;
        for (const Candidate& c : candidates) {
            int overlap = std::popcount(static_cast<unsigned>(c.expected.mask() & claimed.mask()));
            if (overlap > best_overlap) {
                best_overlap = overlap;
                best = &c;
            }
        }
        std::string stated = "the context states '" + describe(best->expected) + "'";
        if (mentions_clock(ctx_, best->sentence)) {
            flag(step, ErrorKind::IncorrectClockExtraction, stated + ", located on a clock dial");
        } else if (!claimed.empty() && claimed.mask() != best->expected.mask() &&
                   labels_within(claimed, best->expected)) {
            flag(step, ErrorKind::IncompleteExtraction, stated + "; the statement names only part of it");
        } else if (claimed.same_labels(best->expected)) {
            flag(step, ErrorKind::IncorrectExtraction, stated + "; the unit counts differ");
        } else {
            flag(step, ErrorKind::IncorrectExtraction, stated + ", not '" + describe(claimed) + "'");
        }
    }

    void check_inverted(const StepStatement& step) {
        if (step.premises.empty()) {
            flag(step, ErrorKind::IncorrectReversal, "cites no step to reverse");
            return;
        }
        const StepStatement* p = premise(step.premises.front());
        if (!p) {
            flag(step, ErrorKind::IncorrectReversal,
                 "cites step " + std::to_string(step.premises.front()) + ", which does not appear");
            return;
        }
        bool swapped = iequals(step.head, p->tail) && iequals(step.tail, p->head);
        bool same_pair = iequals(step.head, p->head) && iequals(step.tail, p->tail);
        RelationSet claimed = spoken_form(step.relations);
        RelationSet expected = spoken_form(p->relations.inverted());
        if (swapped && claimed == expected) return;
        if (swapped) {
            flag(step, ErrorKind::IncorrectReversal,
                 "the reverse of '" + describe(p->relations) + "' is '" + describe(expected) + "', not '" +
                     describe(claimed) + "'");
        } else if (same_pair) {
            flag(step, ErrorKind::IncorrectReversal,
                 "restates step " + std::to_string(p->index) + " without swapping its entities");
        } else {
            flag(step, ErrorKind::IncorrectReversal,
                 "does not relate the entities of step " + std::to_string(p->index));
        }
    }

    // Fuses cited premises into per-pair links and walks them greedily from
    // head to tail, reorienting where needed. Returns nothing when some
    // premise cannot join the chain.
    std::optional<std::vector<MergeLink>> walk_premises(const StepStatement& step,
                                                        const std::vector<const StepStatement*>& cited) {
        std::vector<MergeLink> groups;
        for (const StepStatement* p : cited) {
            bool merged = false;
            for (MergeLink& g : groups) {
                if (iequals(g.oriented.head, p->head) && iequals(g.oriented.tail, p->tail)) {
                    g.oriented.relations = fuse(g.oriented.relations, p->relations);
                    merged = true;
                } else if (iequals(g.oriented.head, p->tail) && iequals(g.oriented.tail, p->head)) {
                    g.oriented.relations = fuse(g.oriented.relations, p->relations.inverted());
                    merged = true;
                }
                if (merged) {
                    if (p->kind != StepKind::Inferred) g.oriented.kind = p->kind;
                    break;
                }
            }
            if (merged) continue;
            MergeLink g;
            g.oriented = *p;
            g.oriented.premises.clear();
            g.source_index = p->index;
            groups.push_back(std::move(g));
        }

        std::vector<MergeLink> chain;
        std::string cur = step.head;
        std::vector<bool> used(groups.size(), false);
        for (std::size_t round = 0; round < groups.size(); ++round) {
            int pick = -1;
            bool reversed = false;
            for (std::size_t i = 0; i < groups.size(); ++i) {
                if (used[i]) continue;
                if (iequals(groups[i].oriented.head, cur)) {
                    pick = static_cast<int>(i);
                    reversed = false;
                    break;
                }
                if (pick < 0 && iequals(groups[i].oriented.tail, cur)) {
                    pick = static_cast<int>(i);
                    reversed = true;
                }
            }
            if (pick < 0) {
                flag(step, ErrorKind::ComposedWithoutConnection,
                     "no cited step relates '" + cur + "' onward; the merged statements do not share entities");
                return std::nullopt;
            }
            used[static_cast<std::size_t>(pick)] = true;
            MergeLink link = groups[static_cast<std::size_t>(pick)];
            if (reversed) {
                std::swap(link.oriented.head, link.oriented.tail);
                link.oriented.relations = link.oriented.relations.inverted();
                link.reversed = true;
            }
            cur = link.oriented.tail;
            chain.push_back(std::move(link));
        }
        if (!iequals(cur, step.tail)) {
            flag(step, ErrorKind::ComposedWithoutConnection,
                 "the cited steps connect '" + step.head + "' to '" + cur + "', not to '" + step.tail + "'");
            return std::nullopt;
        }
        return chain;
    }

    void check_inferred(const StepStatement& step) {
        std::vector<const StepStatement*> cited;
        for (int idx : step.premises) {
            const StepStatement* p = premise(idx);
            if (!p) {
                flag(step, ErrorKind::ComposedWithoutConnection,
                     "cites step " + std::to_string(idx) + ", which does not appear");
                return;
            }
            cited.push_back(p);
        }
        if (cited.size() < 2) {
            flag(step, ErrorKind::ComposedWithoutConnection, "merges fewer than two steps");
            return;
        }
        auto chain = walk_premises(step, cited);
        if (!chain) return;
        for (const MergeLink& link : *chain) {
            if (link.reversed) {
                flag(step, ErrorKind::ReverseStepMerge,
                     "step " + std::to_string(link.source_index) + " runs from '" + link.oriented.tail +
                         "' to '" + link.oriented.head + "' and must be reversed before merging");
                return;
            }
        }

        RelationSet composed;
        bool replayed = true;
        try {
            std::vector<StepStatement> oriented;
            oriented.reserve(chain->size());
            for (const MergeLink& link : *chain) oriented.push_back(link.oriented);
            composed = replay_merge(oriented, step.head, step.tail, ps_, mode_);
        } catch (const Error&) {
            replayed = false;  // contradictory or unrepresentable premises
        }

        RelationSet claimed = spoken_form(step.relations);
        if (replayed && spoken_form(composed) == claimed) return;
        if (replayed && claimed.same_labels(composed)) {
            flag(step, ErrorKind::QuantitativeError,
                 "merging the cited steps yields '" + describe_spoken(composed) + "', not '" +
                     describe_spoken(claimed) + "'; the unit counts are off");
            return;
        }

        // A direction stated both ways among the premises cancels, so
        // asserting it anyway is not a unit slip but a non-composition.
        if (!ps_.quantitative()) {
            RelationSet premise_union;
            for (const MergeLink& link : *chain) {
                for (Label l : link.oriented.relations.labels()) premise_union.insert_unchecked(l);
            }
            for (Label l : claimed.directional_labels()) {
                if (composed.contains(l)) continue;
                if (premise_union.contains(l) && premise_union.contains(inverse(l))) {
                    flag(step, ErrorKind::NonComposableComposition,
                         "the cited steps state both '" + label_text(l) + "' and '" + label_text(inverse(l)) +
                             "', which cancel without unit counts; neither survives the merge");
                    return;
                }
            }
        }

        for (const MergeLink& link : *chain) {
            if (spoken_form(link.oriented.relations) == claimed) {
                flag(step, ErrorKind::CopiedNotComposed,
                     "repeats step " + std::to_string(link.source_index) + " instead of composing; the merge yields '" +
                         describe(composed) + "'");
                return;
            }
        }

        flag(step, ErrorKind::QuantitativeError,
             "merging the cited steps yields '" + describe(composed) + "', not '" + describe(claimed) + "'");
    }

    void check_answer(const StepStatement& step) {
        if (step.relations.same_labels(expected_answer_)) return;
        if (!expected_answer_.empty() && step.relations.same_labels(expected_answer_.inverted())) {
            flag(step, ErrorKind::ReverseAnswer,
                 "the answer '" + step.relations.answer_text() + "' reverses the expected '" +
                     expected_answer_.answer_text() + "'; the question asks head against tail");
        }
        // Any other wrong answer traces back to the step findings above.
    }

    static std::string describe_spoken(const RelationSet& rs) {
        if (rs.empty()) return "nothing";
        std::string out;
        const Magnitudes& m = rs.magnitudes();
        for (Label l : rs.labels()) {
            if (!out.empty()) out += ", ";
            if (l == Label::Left || l == Label::Right) {
                if (m.x) out += std::to_string(*m.x) + " unit ";
            } else if (l == Label::Above || l == Label::Below) {
                if (m.y) out += std::to_string(*m.y) + " unit ";
            }
            out += label_text(l);
        }
        return out;
    }

    const std::vector<StepStatement>& steps_;
    const SymbolicContext& ctx_;
    const PropertySet& ps_;
    const RelationSet& expected_answer_;
    DeductionMode mode_;
    std::map<int, const StepStatement*> by_index_;
    std::vector<ErrorFinding> findings_;
};

}  // namespace

const std::string& error_kind_name(ErrorKind kind) {
    static const std::string names[] = {
        "IncorrectExtraction",       "IncompleteExtraction",      "IncorrectClockExtraction",
        "IncorrectReversal",         "ReverseStepMerge",          "CopiedNotComposed",
        "ComposedWithoutConnection", "NonComposableComposition",  "QuantitativeError",
        "ReverseAnswer",
    };
    return names[static_cast<std::size_t>(kind)];
}

std::vector<ErrorFinding> verify_path(const std::vector<StepStatement>& steps, const SymbolicContext& ctx,
                                      const PropertySet& ps, const RelationSet& expected_answer,
                                      DeductionMode mode) {
    return ChainChecker(steps, ctx, ps, expected_answer, mode).run();
}

int observed_num_hops(const std::vector<StepStatement>& steps) {
    int hops = 0;
    for (const StepStatement& s : steps) {
        if (s.kind == StepKind::FromContext) ++hops;
    }
    return hops;
}

}  // namespace sparc
