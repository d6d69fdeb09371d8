// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "sparc/context.hpp"
#include "sparc/property_set.hpp"
#include "sparc/relation_set.hpp"
#include "sparc/verbalize.hpp"

namespace sparc {

// What a reasoning step got wrong, judged against the context it cites and
// a replay of the deduction it claims.
enum class ErrorKind : unsigned char {
    IncorrectExtraction,        // statement contradicts what the context says
    IncompleteExtraction,       // statement names only part of what the context says
    IncorrectClockExtraction,   // misread a sentence that locates by clock dial
    IncorrectReversal,          // inversion step does not invert its premise
    ReverseStepMerge,           // merge consumed a premise against its direction
    CopiedNotComposed,          // merge repeats one premise instead of composing
    ComposedWithoutConnection,  // merged premises share no entity chain
    NonComposableComposition,   // asserted a direction the premises cancel out
    QuantitativeError,          // merge labels or unit counts disagree with replay
    ReverseAnswer,              // final answer is the inverse of the correct one
};

const std::string& error_kind_name(ErrorKind kind);

struct ErrorFinding {
    int step_index = 0;  // the model's own numbering
    ErrorKind kind = ErrorKind::IncorrectExtraction;
    std::string detail;

    bool operator==(const ErrorFinding&) const = default;
};

// Checks every step of a parsed reasoning chain against the context and,
// for the final answer, against the expected relation set. Each step is
// judged on its own citations — statements against the context, inversions
// and merges against the steps they name — so findings never cascade: the
// facts a faulty step asserts still stand, as claimed, for later steps.
// Findings are reported in step order; an empty result means the chain is
// sound. mode must match how the chains were deduced.
std::vector<ErrorFinding> verify_path(const std::vector<StepStatement>& steps, const SymbolicContext& ctx,
                                      const PropertySet& ps, const RelationSet& expected_answer,
                                      DeductionMode mode = DeductionMode::Entailment);

// Hop count a chain exhibits: the number of statements it takes from the
// context.
int observed_num_hops(const std::vector<StepStatement>& steps);

}  // namespace sparc
