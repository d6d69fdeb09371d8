// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "mutators.hpp"
#include "sparc/errors.hpp"
#include "sparc/graph.hpp"
#include "sparc/pathgen.hpp"
#include "sparc/rng.hpp"
#include "sparc/scenegen.hpp"
#include "sparc/verbalize.hpp"
#include "sparc/verifier.hpp"

using namespace sparc;
using sparc::testing::all_mutators;
using sparc::testing::NamedMutator;

namespace {

RelationSet with_mags(RelationSet rs, std::optional<int> x, std::optional<int> y) {
    Magnitudes m;
    m.x = x;
    m.y = y;
    rs.set_magnitudes(m);
    return rs;
}

// Context from (head, relations, tail, sentence) rows plus the sentence
// list the rows point into.
SymbolicContext make_context(const PropertySet& ps,
                             const std::vector<std::tuple<std::string, RelationSet, std::string, int>>& rows,
                             std::vector<std::string> text = {}) {
    SymbolicContext ctx;
    ctx.property_set = &ps;
    ctx.text = std::move(text);
    for (const auto& [head, rels, tail, sentence] : rows) {
        ContextTriple t;
        t.head = head;
        t.relations = rels;
        t.tail = tail;
        t.sentence_index = sentence;
        add_triple(ctx, t);
    }
    return ctx;
}

std::vector<StepStatement> steps_of(const std::string& text, std::size_t expected_count) {
    ParsedReasoning parsed = parse_reasoning_text(text);
    REQUIRE(parsed.steps.size() == expected_count);
    return parsed.steps;
}

bool has_finding(const std::vector<ErrorFinding>& findings, int index, ErrorKind kind) {
    for (const ErrorFinding& f : findings) {
        if (f.step_index == index && f.kind == kind) return true;
    }
    return false;
}

const ErrorFinding* finding_at(const std::vector<ErrorFinding>& findings, int index) {
    for (const ErrorFinding& f : findings) {
        if (f.step_index == index) return &f;
    }
    return nullptr;
}

bool detail_mentions(const std::vector<ErrorFinding>& findings, int index, const std::string& needle) {
    const ErrorFinding* f = finding_at(findings, index);
    return f && f->detail.find(needle) != std::string::npos;
}

// A verbalized chain plus everything needed to re-check it.
struct CleanCase {
    std::vector<StepStatement> steps;
    SymbolicContext ctx;
    RelationSet answer;
};

std::vector<CleanCase> chain_pool(const PropertySet& ps, int scenes) {
    std::vector<CleanCase> out;
    for (int s = 0; s < scenes; ++s) {
        Rng rng(stable_seed(29, "verifier-pool-" + ps.name, static_cast<std::uint64_t>(s)));
        Scene scene = gen_scene(ps, 5 + s % 4, rng);
        RelationGraph graph = build_graph(scene.context);
        int used = 0;
        for (const Entity& h : scene.context.entities) {
            for (const Entity& t : scene.context.entities) {
                if (h.id == t.id || used >= 4) continue;
                ReasoningPath path;
                try {
                    path = find_path(scene.context, graph, h.id, t.id);
                } catch (const NoPathError&) {
                    continue;
                }
                RelationSet answer = derive_answer(path, ps);
                if (answer.empty()) continue;
                out.push_back({verbalize_steps(path, ps), scene.context, answer});
                ++used;
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("error kinds carry stable names") {
    CHECK(error_kind_name(ErrorKind::IncorrectExtraction) == "IncorrectExtraction");
    CHECK(error_kind_name(ErrorKind::IncompleteExtraction) == "IncompleteExtraction");
    CHECK(error_kind_name(ErrorKind::IncorrectClockExtraction) == "IncorrectClockExtraction");
    CHECK(error_kind_name(ErrorKind::IncorrectReversal) == "IncorrectReversal");
    CHECK(error_kind_name(ErrorKind::ReverseStepMerge) == "ReverseStepMerge");
    CHECK(error_kind_name(ErrorKind::CopiedNotComposed) == "CopiedNotComposed");
    CHECK(error_kind_name(ErrorKind::ComposedWithoutConnection) == "ComposedWithoutConnection");
    CHECK(error_kind_name(ErrorKind::NonComposableComposition) == "NonComposableComposition");
    CHECK(error_kind_name(ErrorKind::QuantitativeError) == "QuantitativeError");
    CHECK(error_kind_name(ErrorKind::ReverseAnswer) == "ReverseAnswer");
}

TEST_CASE("statements matching the context pass in either orientation") {
    const PropertySet& ps = PropertySet::ps2();
    SymbolicContext ctx = make_context(ps, {{"K", with_mags(RelationSet{Label::Right}, 1, {}), "L", 0}});
    RelationSet expected;

    // Stated orientation, with the one-unit count left implicit.
    auto findings = verify_path(steps_of("Step 1: From the context, K is right of L.", 1), ctx, ps, expected);
    CHECK(findings.empty());

    // Reversed orientation is read through the statement's inverse.
    findings = verify_path(steps_of("Step 1: From the context, L is left of K.", 1), ctx, ps, expected);
    CHECK(findings.empty());

    // Entity resolution ignores case.
    findings = verify_path(steps_of("Step 1: From the context, k is right of l.", 1), ctx, ps, expected);
    CHECK(findings.empty());
}

TEST_CASE("statements contradicting the context are flagged") {
    const PropertySet& ps = PropertySet::ps2();
    SymbolicContext ctx = make_context(ps, {{"K", with_mags(RelationSet{Label::Right}, 3, {}), "L", 0},
                                            {"L", RelationSet{Label::Above}, "M", 1}});
    RelationSet expected;

    auto findings = verify_path(steps_of("Step 1: From the context, Q is right of L.", 1), ctx, ps, expected);
    REQUIRE(findings.size() == 1);
    CHECK(has_finding(findings, 1, ErrorKind::IncorrectExtraction));
    CHECK(detail_mentions(findings, 1, "no entity named 'Q'"));

    findings = verify_path(steps_of("Step 1: From the context, K is above M.", 1), ctx, ps, expected);
    REQUIRE(findings.size() == 1);
    CHECK(has_finding(findings, 1, ErrorKind::IncorrectExtraction));
    CHECK(detail_mentions(findings, 1, "states no relation between 'K' and 'M'"));

    findings = verify_path(steps_of("Step 1: From the context, K is above L.", 1), ctx, ps, expected);
    REQUIRE(findings.size() == 1);
    CHECK(has_finding(findings, 1, ErrorKind::IncorrectExtraction));
    CHECK(detail_mentions(findings, 1, ", not '"));

    // Same labels, different counts.
    findings = verify_path(steps_of("Step 1: From the context, K is 2 unit right of L.", 1), ctx, ps, expected);
    REQUIRE(findings.size() == 1);
    CHECK(has_finding(findings, 1, ErrorKind::IncorrectExtraction));
    CHECK(detail_mentions(findings, 1, "unit counts differ"));
}

TEST_CASE("claiming part of a stated relation is incomplete extraction") {
    const PropertySet& ps = PropertySet::ps3();
    SymbolicContext ctx = make_context(ps, {{"I", RelationSet{Label::Below, Label::Left}, "V", 0}},
                                       {"I is on the left side of and below V."});
    auto findings =
        verify_path(steps_of("Step 2: From the context, I is left of V.", 1), ctx, ps, RelationSet{});
    REQUIRE(findings.size() == 1);
    CHECK(has_finding(findings, 2, ErrorKind::IncompleteExtraction));
    CHECK(detail_mentions(findings, 2, "names only part of it"));
}

TEST_CASE("misreading a clock-dial sentence is its own error kind") {
    const PropertySet& ps = PropertySet::ps2();
    SymbolicContext ctx =
        make_context(ps, {{"P", with_mags(RelationSet{Label::Above, Label::Left}, 1, 1), "X", 0}},
                     {"P is above X at 10 o'clock."});
    auto findings =
        verify_path(steps_of("Step 6: From the context, X is below P.", 1), ctx, ps, RelationSet{});
    REQUIRE(findings.size() == 1);
    CHECK(has_finding(findings, 6, ErrorKind::IncorrectClockExtraction));
    CHECK(detail_mentions(findings, 6, "located on a clock dial"));
}

TEST_CASE("a containment verb misstated against the context is flagged") {
    const PropertySet& ps = PropertySet::ps1();
    SymbolicContext ctx = make_context(
        ps, {{"tiny white rectangle", RelationSet{Label::Inside}, "box EEE", 0},
             {"midsize white diamond", RelationSet{Label::InsideTouching}, "box EEE", 0}},
        {"Box EEE has a tiny white rectangle and covers a midsize white diamond."});
    auto findings = verify_path(
        steps_of("Step 7: It is given that the tiny white rectangle is inside and touching the box EEE.", 1),
        ctx, ps, RelationSet{});
    REQUIRE(findings.size() == 1);
    CHECK(has_finding(findings, 7, ErrorKind::IncorrectExtraction));
    CHECK(detail_mentions(findings, 7, "the context states 'inside', not 'inside and touching'"));
}

TEST_CASE("inversion steps must swap their premise") {
    const PropertySet& ps = PropertySet::ps2();
    SymbolicContext ctx = make_context(ps, {{"K", with_mags(RelationSet{Label::Right}, 1, {}), "L", 0}});
    RelationSet expected;

    auto findings = verify_path(
        steps_of("Step 1: From the context, K is right of L.\n"
                 "Step 2: From step 1, we can infer that L is left of K.",
                 2),
        ctx, ps, expected);
    CHECK(findings.empty());

    findings = verify_path(steps_of("Step 3: From step 9, we can infer that K is left of L.", 1), ctx, ps,
                           expected);
    REQUIRE(findings.size() == 1);
    CHECK(has_finding(findings, 3, ErrorKind::IncorrectReversal));
    CHECK(detail_mentions(findings, 3, "cites step 9, which does not appear"));

    findings = verify_path(
        steps_of("Step 1: From the context, K is right of L.\n"
                 "Step 2: From step 1, we can infer that K is right of L.",
                 2),
        ctx, ps, expected);
    REQUIRE(findings.size() == 1);
    CHECK(has_finding(findings, 2, ErrorKind::IncorrectReversal));
    CHECK(detail_mentions(findings, 2, "restates step 1 without swapping its entities"));

    findings = verify_path(
        steps_of("Step 1: From the context, K is right of L.\n"
                 "Step 2: From step 1, we can infer that M is left of N.",
                 2),
        ctx, ps, expected);
    REQUIRE(findings.size() == 1);
    CHECK(has_finding(findings, 2, ErrorKind::IncorrectReversal));
    CHECK(detail_mentions(findings, 2, "does not relate the entities of step 1"));

    // A reversal citing nothing cannot come out of parsed text; feed the
    // checker the malformed step directly.
    StepStatement bare;
    bare.index = 4;
    bare.kind = StepKind::Inverted;
    bare.head = "K";
    bare.tail = "L";
    bare.relations = RelationSet{Label::Left};
    findings = verify_path({bare}, ctx, ps, expected);
    REQUIRE(findings.size() == 1);
    CHECK(has_finding(findings, 4, ErrorKind::IncorrectReversal));
    CHECK(detail_mentions(findings, 4, "cites no step to reverse"));
}

TEST_CASE("an inversion claiming the wrong labels names the right ones") {
    const PropertySet& ps = PropertySet::ps1();
    SymbolicContext ctx =
        make_context(ps, {{"block AAA", RelationSet{Label::Contains}, "medium yellow square", 0}},
                     {"The block AAA contains a medium yellow square."});
    auto findings = verify_path(
        steps_of("Step 1: From the context, the block AAA is containing the medium yellow square.\n"
                 "Step 2: From step 1, we can infer that the medium yellow square is inside and touching "
                 "the block AAA.",
                 2),
        ctx, ps, RelationSet{});
    REQUIRE(findings.size() == 1);
    CHECK(has_finding(findings, 2, ErrorKind::IncorrectReversal));
    CHECK(detail_mentions(findings, 2, "the reverse of 'contains' is 'inside', not 'inside and touching'"));
}

TEST_CASE("merges must cite enough steps and connect them") {
    const PropertySet& ps = PropertySet::ps2();
    SymbolicContext ctx = make_context(ps, {{"K", with_mags(RelationSet{Label::Right}, 1, {}), "L", 0},
                                            {"L", with_mags(RelationSet{Label::Right}, 1, {}), "M", 1}});
    RelationSet expected;

    auto findings = verify_path(
        steps_of("Step 3: From step 1 and 9, we can infer that K is 2 unit right of M.", 1), ctx, ps,
        expected);
    REQUIRE(findings.size() == 1);
    CHECK(has_finding(findings, 3, ErrorKind::ComposedWithoutConnection));
    CHECK(detail_mentions(findings, 3, "cites step 1, which does not appear"));

    // Citing one step is not a merge; text with a single citation parses
    // as a reversal, so build the step by hand.
    StepStatement lone;
    lone.index = 3;
    lone.kind = StepKind::Inferred;
    lone.premises = {1};
    lone.head = "K";
    lone.tail = "M";
    lone.relations = with_mags(RelationSet{Label::Right}, 2, {});
    std::vector<StepStatement> steps =
        steps_of("Step 1: From the context, K is right of L.\nStep 2: From the context, L is right of M.", 2);
    steps.push_back(lone);
    findings = verify_path(steps, ctx, ps, expected);
    REQUIRE(findings.size() == 1);
    CHECK(has_finding(findings, 3, ErrorKind::ComposedWithoutConnection));
    CHECK(detail_mentions(findings, 3, "merges fewer than two steps"));

    // The cited steps walk somewhere other than the claimed tail.
    findings = verify_path(
        steps_of("Step 1: From the context, K is right of L.\n"
                 "Step 2: From the context, L is right of M.\n"
                 "Step 3: From step 1 and 2, we can infer that K is 2 unit right of L.",
                 3),
        ctx, ps, expected);
    REQUIRE(findings.size() == 1);
    CHECK(has_finding(findings, 3, ErrorKind::ComposedWithoutConnection));
    CHECK(detail_mentions(findings, 3, "the cited steps connect 'K' to 'M', not to 'L'"));

    // A clean two-step merge passes.
    findings = verify_path(
        steps_of("Step 1: From the context, K is right of L.\n"
                 "Step 2: From the context, L is right of M.\n"
                 "Step 3: From step 1 and 2, we can infer that K is 2 unit right of M.",
                 3),
        ctx, ps, expected);
    CHECK(findings.empty());
}

TEST_CASE("merged statements that share no entity chain are flagged") {
    const PropertySet& ps = PropertySet::ps3();
    SymbolicContext ctx;
    ctx.property_set = &ps;
    auto findings = verify_path(
        steps_of("Step 5: From step 3 and 4, we can infer that Y is right of L.\n"
                 "Step 14: From step 12 and 13, we can infer that C is below and right of K.\n"
                 "Step 15: From step 5 and 14, we can infer that C is below and right of L.",
                 3),
        ctx, ps, RelationSet{});
    REQUIRE(findings.size() == 3);
    CHECK(has_finding(findings, 5, ErrorKind::ComposedWithoutConnection));
    CHECK(has_finding(findings, 14, ErrorKind::ComposedWithoutConnection));
    CHECK(has_finding(findings, 15, ErrorKind::ComposedWithoutConnection));
    CHECK(detail_mentions(findings, 5, "cites step 3, which does not appear"));
    CHECK(detail_mentions(findings, 15, "no cited step relates 'K' onward"));
    CHECK(detail_mentions(findings, 15, "do not share entities"));
    // Findings come back in step order.
    CHECK(findings[0].step_index == 5);
    CHECK(findings[1].step_index == 14);
    CHECK(findings[2].step_index == 15);
}

TEST_CASE("a merge consuming a premise backwards is a reverse-step merge") {
    const PropertySet& ps = PropertySet::ps2();
    SymbolicContext ctx;
    ctx.property_set = &ps;
    auto findings = verify_path(
        steps_of("Step 7: From step 4 and 6, we can infer that I is 2 unit above and 2 unit right of W.\n"
                 "Step 9: From step 8, we can infer that Q is right of W.\n"
                 "Step 10: From step 7 and 9, we can infer that I is 2 unit above and 3 unit right of Q.",
                 3),
        ctx, ps, RelationSet{});
    REQUIRE(findings.size() == 3);
    CHECK(has_finding(findings, 7, ErrorKind::ComposedWithoutConnection));
    CHECK(has_finding(findings, 9, ErrorKind::IncorrectReversal));
    CHECK(has_finding(findings, 10, ErrorKind::ReverseStepMerge));
    CHECK(detail_mentions(findings, 10, "step 9 runs from 'Q' to 'W'"));
    CHECK(detail_mentions(findings, 10, "must be reversed before merging"));
}

TEST_CASE("repeating a premise instead of composing is flagged") {
    const PropertySet& ps = PropertySet::ps2();
    SymbolicContext ctx = make_context(ps, {{"S", with_mags(RelationSet{Label::Left}, 1, {}), "M", 0}});
    auto findings = verify_path(
        steps_of("Step 6: From step 4 and 5, we can infer that A is below and right of S.\n"
                 "Step 7: From the context, S is left of M.\n"
                 "Step 8: From step 6 and 7, we can infer that A is below and right of M.",
                 3),
        ctx, ps, RelationSet{});
    REQUIRE(findings.size() == 2);
    CHECK(has_finding(findings, 6, ErrorKind::ComposedWithoutConnection));
    CHECK(has_finding(findings, 8, ErrorKind::CopiedNotComposed));
    CHECK(detail_mentions(findings, 8, "repeats step 6 instead of composing"));
}

TEST_CASE("asserting a direction the premises cancel is a non-composition") {
    const PropertySet& ps = PropertySet::ps4();
    SymbolicContext ctx;
    ctx.property_set = &ps;
    auto findings = verify_path(
        steps_of("Step 16: From step 13 and 15, we can infer that M is below X.\n"
                 "Step 18: From step 17, we can say that X is above A.\n"
                 "Step 19: From step 16 and 18, we can infer that M is above A.",
                 3),
        ctx, ps, RelationSet{});
    REQUIRE(findings.size() == 3);
    CHECK(has_finding(findings, 16, ErrorKind::ComposedWithoutConnection));
    CHECK(has_finding(findings, 18, ErrorKind::IncorrectReversal));
    CHECK(has_finding(findings, 19, ErrorKind::NonComposableComposition));
    CHECK(detail_mentions(findings, 19, "cancel without unit counts"));
}

TEST_CASE("merges replaying to the same labels but other counts are quantitative errors") {
    const PropertySet& ps = PropertySet::ps2();
    SymbolicContext ctx =
        make_context(ps, {{"Z", with_mags(RelationSet{Label::Above, Label::Right}, 2, 2), "L", 0}},
                     {"Z is 2 unit above and 2 unit right of L."});
    auto findings = verify_path(
        steps_of("Step 11: From the context, Z is 2 unit above and 2 unit right of L.\n"
                 "Step 13: From step 12, we can infer that L is above and left of J.\n"
                 "Step 14: From step 11 and 13, we can infer that Z is 3 unit above and 3 unit right of J.",
                 3),
        ctx, ps, RelationSet{});
    REQUIRE(findings.size() == 2);
    CHECK(has_finding(findings, 13, ErrorKind::IncorrectReversal));
    CHECK(has_finding(findings, 14, ErrorKind::QuantitativeError));
    CHECK(detail_mentions(findings, 14, "the unit counts are off"));
}

TEST_CASE("merges replaying to different labels are quantitative errors too") {
    const PropertySet& ps = PropertySet::ps2();
    SymbolicContext ctx =
        make_context(ps, {{"Z", with_mags(RelationSet{Label::Above, Label::Right}, 1, 2), "L", 0}},
                     {"Z is 2 unit above and right of L."});
    auto findings = verify_path(
        steps_of("Step 11: From the context, Z is 2 unit above and right of L.\n"
                 "Step 13: From step 12, we can infer that L is above and left of J.\n"
                 "Step 14: From step 11 and 13, we can infer that Z is 3 unit above and right of J.",
                 3),
        ctx, ps, RelationSet{});
    REQUIRE(findings.size() == 2);
    CHECK(has_finding(findings, 13, ErrorKind::IncorrectReversal));
    CHECK(has_finding(findings, 14, ErrorKind::QuantitativeError));
    CHECK(detail_mentions(findings, 14, "merging the cited steps yields"));
}

TEST_CASE("answers are judged against the expected relation") {
    const PropertySet& ps = PropertySet::ps3();
    SymbolicContext ctx;
    ctx.property_set = &ps;

    // The exact inverse of the expected answer is called out.
    auto findings = verify_path(
        steps_of("Step 8: From step 5 and 7, we can infer that X is above and left of W. "
                 "Hence, the answer is above, and left.",
                 2),
        ctx, ps, RelationSet{Label::Below, Label::Right});
    REQUIRE(findings.size() == 2);
    CHECK(has_finding(findings, 8, ErrorKind::ComposedWithoutConnection));
    CHECK(has_finding(findings, 9, ErrorKind::ReverseAnswer));
    CHECK(detail_mentions(findings, 9, "reverses the expected"));

    // A matching answer passes; the labels alone decide.
    const PropertySet& ps2 = PropertySet::ps2();
    SymbolicContext stated = make_context(ps2, {{"K", with_mags(RelationSet{Label::Right}, 1, {}), "L", 0}});
    findings = verify_path(
        steps_of("Step 1: From the context, K is right of L.\nHence, the answer is right.", 2), stated, ps2,
        with_mags(RelationSet{Label::Right}, 1, {}));
    CHECK(findings.empty());

    // A wrong answer that is not the inverse traces back to step findings,
    // so the answer itself stays silent.
    findings = verify_path(
        steps_of("Step 1: From the context, K is right of L.\nHence, the answer is above.", 2), stated, ps2,
        RelationSet{Label::Right});
    CHECK(findings.empty());

    // No expected answer, nothing to judge.
    findings = verify_path(
        steps_of("Step 1: From the context, K is right of L.\nHence, the answer is above.", 2), stated, ps2,
        RelationSet{});
    CHECK(findings.empty());
}

TEST_CASE("hop counts follow the statements taken from the context") {
    CHECK(observed_num_hops({}) == 0);
    std::vector<StepStatement> steps =
        steps_of("Step 1: From the context, K is right of L.\n"
                 "Step 2: From the context, M is right of L.\n"
                 "Step 3: From step 2, we can infer that L is left of M.\n"
                 "Step 4: From step 1 and 3, we can infer that K is overlapping M.\n"
                 "Hence, the answer is overlapping.",
                 5);
    CHECK(observed_num_hops(steps) == 2);
}

TEST_CASE("sound chains across every property set come back clean") {
    int checked = 0;
    for (const PropertySet* ps : PropertySet::all()) {
        for (const CleanCase& c : chain_pool(*ps, 8)) {
            auto findings = verify_path(c.steps, c.ctx, *ps, c.answer);
            if (!findings.empty()) {
                CAPTURE(ps->name);
                CAPTURE(findings.front().step_index);
                CAPTURE(error_kind_name(findings.front().kind));
                CAPTURE(findings.front().detail);
            }
            CHECK(findings.empty());
            CHECK(observed_num_hops(c.steps) >= 1);
            ++checked;
        }
    }
    CHECK(checked >= 80);
}

TEST_CASE("every fault injector lands its named finding") {
    const PropertySet& ps1 = PropertySet::ps1();
    const PropertySet& ps2 = PropertySet::ps2();
    const PropertySet& ps3 = PropertySet::ps3();
    const PropertySet& ps4 = PropertySet::ps4();

    std::map<std::string, std::vector<CleanCase>> pools;
    auto pool_for = [&](const PropertySet& ps) -> const std::vector<CleanCase>& {
        auto [it, fresh] = pools.try_emplace(ps.name);
        if (fresh) it->second = chain_pool(ps, 14);
        return it->second;
    };

    struct Plan {
        ErrorKind kind;
        std::vector<const PropertySet*> sources;
    };
    const std::vector<Plan> plans = {
        {ErrorKind::IncorrectExtraction, {&ps1, &ps2, &ps3, &ps4}},
        {ErrorKind::IncompleteExtraction, {&ps2, &ps3}},
        {ErrorKind::IncorrectClockExtraction, {&ps2, &ps3}},
        {ErrorKind::IncorrectReversal, {&ps2, &ps3, &ps4}},
        {ErrorKind::ReverseStepMerge, {&ps2, &ps3}},
        {ErrorKind::CopiedNotComposed, {&ps2, &ps3}},
        {ErrorKind::ComposedWithoutConnection, {&ps2, &ps3}},
        {ErrorKind::NonComposableComposition, {&ps3, &ps4}},
        {ErrorKind::QuantitativeError, {&ps2}},
        {ErrorKind::ReverseAnswer, {&ps1, &ps2, &ps3, &ps4}},
    };
    REQUIRE(all_mutators().size() == plans.size());

    for (std::size_t k = 0; k < plans.size(); ++k) {
        const NamedMutator& nm = all_mutators()[k];
        REQUIRE(nm.kind == plans[k].kind);
        int hits = 0;
        std::uint64_t attempt = 0;
        for (const PropertySet* ps : plans[k].sources) {
            for (const CleanCase& c : pool_for(*ps)) {
                Rng rng(stable_seed(31, "mutate-" + error_kind_name(nm.kind), attempt++));
                auto mutation = nm.apply(c.steps, c.ctx, *ps, rng);
                if (!mutation) continue;
                auto findings = verify_path(mutation->steps, c.ctx, *ps, c.answer);
                bool hit = has_finding(findings, mutation->step_index, nm.kind);
                CHECK_MESSAGE(hit, error_kind_name(nm.kind) << " missed at step " << mutation->step_index
                                                            << " in " << ps->name);
                if (hit) ++hits;
                if (hits >= 6) break;
            }
            if (hits >= 6) break;
        }
        CHECK_MESSAGE(hits >= 3, error_kind_name(nm.kind) << " found only " << hits << " eligible chains");
    }
}
