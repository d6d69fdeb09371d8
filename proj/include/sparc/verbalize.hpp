// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sparc/pathgen.hpp"
#include "sparc/relation_set.hpp"

namespace sparc {

enum class StepKind : std::uint8_t {
    FromContext,  // restates one stated relation
    Inverted,     // reverses one earlier step
    Inferred,     // merges two or more earlier steps
    Answer,       // final label list
};

// One sentence of a deductive chain. Magnitudes of one unit are kept
// implicit (absent), matching how they are spoken; relations of an Answer
// step carry labels only.
struct StepStatement {
    int index = 0;              // 1-based; the answer sentence renders without one
    StepKind kind = StepKind::FromContext;
    std::vector<int> premises;  // Inverted: one; Inferred: two or more, strictly earlier
    std::string head;
    std::string tail;
    RelationSet relations;

    bool operator==(const StepStatement&) const = default;
};

// How a relation set is spoken: unit counts of one stay implicit, and a
// count survives only on an axis that has a directional label. Comparing
// spoken forms equates a stated "1 unit left" with a bare "left".
RelationSet spoken_form(const RelationSet& relations);

// "I is 2 unit above and 2 unit right of W" — label phrases in canonical
// order, each with its unit count when two or more, the tail connected
// through the last label's preposition.
std::string render_clause(const std::string& head, const RelationSet& relations, const std::string& tail);

// Inverse of render_clause, tolerating a leading article on either
// entity. Returns nothing when the text is not one relation clause.
struct ParsedClause {
    std::string head;
    std::string tail;
    RelationSet relations;
};
std::optional<ParsedClause> parse_clause(const std::string& clause);

std::string render_step(const StepStatement& step);

// Re-derives what merging the given premise statements yields between
// head and tail. Premises must already run forward, chained head to tail
// in order. Statement steps count as stated knowledge; Inferred premises
// carry only what their labels say. Shared by the verbalizer (to pick
// citations that genuinely support a claim) and the chain checker (to
// test claimed merges), so both sides judge a merge the same way.
RelationSet replay_merge(const std::vector<StepStatement>& premises, const std::string& head,
                         const std::string& tail, const PropertySet& ps,
                         DeductionMode mode = DeductionMode::Entailment);

// The whole chain for a derived path: per link, a context step for each
// stated direction plus an inversion step when the statement runs against
// traversal; a merge step each time the running span gains a non-empty
// deduction (citing the previous span step and every provider since when
// that suffices to re-derive the claim, every statement so far when not);
// and the final answer sentence.
std::vector<StepStatement> verbalize_steps(const ReasoningPath& path, const PropertySet& ps,
                                           DeductionMode mode = DeductionMode::Entailment);
std::vector<std::string> render_steps(const std::vector<StepStatement>& steps);
std::string verbalize_path(const ReasoningPath& path, const PropertySet& ps,
                           DeductionMode mode = DeductionMode::Entailment);  // newline-joined

// Best-effort recovery of step structure from free text. Lines that do
// not parse are counted, not fatal; zero parsed steps is the caller's
// no-steps signal. A trailing answer sentence becomes an Answer step.
struct ParsedReasoning {
    std::vector<StepStatement> steps;
    int skipped_lines = 0;
};
ParsedReasoning parse_reasoning_text(const std::string& text);

// Labels after the last "the answer is" marker; absent marker or no
// recognizable label yields nothing.
std::optional<RelationSet> extract_final_answer(const std::string& text);

}  // namespace sparc
