// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "sparc/errors.hpp"
#include "sparc/metrics.hpp"

using namespace sparc;

namespace {

QAInstance gold_row(const std::string& id, RelationSet answer, int hops) {
    QAInstance inst;
    inst.id = id;
    inst.answer = answer;
    inst.num_hops = hops;
    return inst;
}

Prediction exact_prediction(const QAInstance& inst) {
    Prediction p;
    p.id = inst.id;
    p.extracted = inst.answer;
    p.observed_hops = inst.num_hops;
    return p;
}

const LabelScore* label_row(const EvalReport& report, Label l) {
    for (const LabelScore& s : report.per_label) {
        if (s.label == l) return &s;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("exact match compares label sets only") {
    RelationSet gold{Label::Above, Label::Right};
    Magnitudes m;
    m.x = 3;
    RelationSet counted = gold;
    counted.set_magnitudes(m);
    CHECK(exact_match(counted, gold) == 1);
    CHECK(exact_match(RelationSet{Label::Above}, gold) == 0);
    CHECK(exact_match(std::nullopt, gold) == 0);
    CHECK(exact_match(RelationSet{}, RelationSet{}) == 1);
}

TEST_CASE("macro f1 averages per-label scores over the labels present") {
    // Right: one true positive, one false positive -> 2/3.
    // Above: one clean true positive -> 1. Mean: 5/6.
    std::vector<std::pair<RelationSet, RelationSet>> pairs = {
        {RelationSet{Label::Right}, RelationSet{Label::Right}},
        {RelationSet{Label::Above}, RelationSet{Label::Above}},
        {RelationSet{Label::Right}, RelationSet{Label::Near}},
    };
    std::vector<Label> included;
    double score = macro_f1(pairs, {Label::Above, Label::Right}, &included);
    CHECK(score == doctest::Approx(5.0 / 6.0).epsilon(1e-9));
    REQUIRE(included.size() == 2);
    CHECK(included[0] == Label::Above);
    CHECK(included[1] == Label::Right);

    // A label never seen on either side stays out of the mean.
    double padded = macro_f1(pairs, {Label::Above, Label::Right, Label::Far}, &included);
    CHECK(padded == doctest::Approx(5.0 / 6.0).epsilon(1e-9));
    CHECK(included.size() == 2);

    // A label outside the list never enters, even when present in rows.
    double narrowed = macro_f1(pairs, {Label::Above}, nullptr);
    CHECK(narrowed == doctest::Approx(1.0).epsilon(1e-9));

    CHECK(macro_f1({}, {Label::Above}, nullptr) == 0.0);
}

TEST_CASE("hop correlation flags degenerate sequences") {
    PearsonResult r = pearson_hops({1, 2, 3, 4}, {3, 5, 7, 9});
    CHECK(r.defined);
    CHECK(r.rho == doctest::Approx(1.0).epsilon(1e-12));

    r = pearson_hops({4, 3, 2, 1}, {1, 2, 3, 4});
    CHECK(r.defined);
    CHECK(r.rho == doctest::Approx(-1.0).epsilon(1e-12));

    r = pearson_hops({1, 2, 1, 2}, {2, 2, 2, 2});
    CHECK_FALSE(r.defined);
    CHECK(r.rho == 0.0);

    r = pearson_hops({}, {});
    CHECK_FALSE(r.defined);

    CHECK_THROWS_AS(pearson_hops({1, 2}, {1}), Error);
}

TEST_CASE("predictions are parsed from completion text") {
    Prediction p = parse_prediction(
        "q1",
        "Step 1: From the context, K is right of L.\n"
        "Step 2: From the context, L is above M.\n"
        "Step 3: From step 1 and 2, we can infer that K is above and right of M.\n"
        "Hence, the answer is above, and right.");
    CHECK(p.id == "q1");
    CHECK(p.observed_hops == 2);
    REQUIRE(p.extracted.has_value());
    CHECK(*p.extracted == RelationSet::unchecked({Label::Above, Label::Right}));

    Prediction bare = parse_prediction("q2", "Step 1: From the context, K is right of L.");
    CHECK(bare.observed_hops == 1);
    CHECK_FALSE(bare.extracted.has_value());

    Prediction junk = parse_prediction("q3", "I cannot solve this.");
    CHECK(junk.observed_hops == 0);
    CHECK_FALSE(junk.extracted.has_value());
}

TEST_CASE("a perfect prediction file scores one everywhere") {
    const PropertySet& ps = PropertySet::ps2();
    std::vector<QAInstance> gold = {
        gold_row("g0", RelationSet{Label::Right}, 1),
        gold_row("g1", RelationSet{Label::Above, Label::Right}, 2),
        gold_row("g2", RelationSet{Label::Below}, 1),
        gold_row("g3", RelationSet{Label::Right}, 3),
        gold_row("g4", RelationSet{Label::Above}, 2),
    };
    std::vector<Prediction> preds;
    for (const QAInstance& g : gold) preds.push_back(exact_prediction(g));

    EvalReport report = evaluate(preds, gold, ps);
    CHECK(report.n == 5);
    CHECK(report.unparseable == 0);
    CHECK(report.accuracy == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.macro_f1 == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(report.missing_ids.empty());
    CHECK(report.unknown_ids.empty());
    REQUIRE(report.pearson.defined);
    CHECK(report.pearson.rho == doctest::Approx(1.0).epsilon(1e-12));

    REQUIRE(report.per_hop.size() == 3);
    CHECK(report.per_hop[0].hops == 1);
    CHECK(report.per_hop[0].count == 2);
    CHECK(report.per_hop[1].hops == 2);
    CHECK(report.per_hop[2].hops == 3);
    for (const HopScores& h : report.per_hop) {
        CHECK(h.accuracy == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(h.f1 == doctest::Approx(1.0).epsilon(1e-9));
    }

    REQUIRE(report.per_label.size() == 3);
    CHECK(report.per_label[0].label == Label::Above);
    CHECK(report.per_label[0].gold_count == 2);
    CHECK(report.per_label[1].label == Label::Below);
    CHECK(report.per_label[1].gold_count == 1);
    CHECK(report.per_label[2].label == Label::Right);
    CHECK(report.per_label[2].gold_count == 3);
    for (const LabelScore& s : report.per_label) CHECK(s.f1 == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("missing, unknown and answer-free predictions are accounted for") {
    const PropertySet& ps = PropertySet::ps2();
    std::vector<QAInstance> gold = {
        gold_row("g0", RelationSet{Label::Right}, 1),
        gold_row("g1", RelationSet{Label::Above}, 2),
        gold_row("g2", RelationSet{Label::Below}, 1),
        gold_row("g3", RelationSet{Label::Right}, 3),
        gold_row("g4", RelationSet{Label::Above}, 2),
    };
    std::vector<Prediction> preds;
    Prediction wrong;  // parsed, but the wrong way around
    wrong.id = "g0";
    wrong.extracted = RelationSet{Label::Left};
    wrong.observed_hops = 1;
    preds.push_back(wrong);
    // g1 never answered at all.
    Prediction silent;  // responded without any answer marker
    silent.id = "g2";
    silent.observed_hops = 2;
    preds.push_back(silent);
    preds.push_back(exact_prediction(gold[3]));
    preds.push_back(exact_prediction(gold[4]));
    Prediction stray;
    stray.id = "not-a-question";
    stray.extracted = RelationSet{Label::Right};
    preds.push_back(stray);

    EvalReport report = evaluate(preds, gold, ps);
    CHECK(report.n == 5);
    CHECK(report.unparseable == 2);
    CHECK(report.accuracy == doctest::Approx(2.0 / 5.0).epsilon(1e-12));
    CHECK(report.macro_f1 > 0.0);
    CHECK(report.macro_f1 < 1.0);
    REQUIRE(report.missing_ids.size() == 1);
    CHECK(report.missing_ids[0] == "g1");
    REQUIRE(report.unknown_ids.size() == 1);
    CHECK(report.unknown_ids[0] == "not-a-question");

    // The stray claim of Right never entered the rows; only g0's wrong
    // Left shows up as a predicted-only label.
    const LabelScore* left = label_row(report, Label::Left);
    REQUIRE(left != nullptr);
    CHECK(left->gold_count == 0);
    CHECK(left->predicted_count == 1);
    CHECK(left->f1 == 0.0);

    // Shuffling the prediction rows changes nothing.
    std::reverse(preds.begin(), preds.end());
    EvalReport reversed = evaluate(preds, gold, ps);
    CHECK(reversed.accuracy == doctest::Approx(report.accuracy).epsilon(1e-12));
    CHECK(reversed.macro_f1 == doctest::Approx(report.macro_f1).epsilon(1e-12));
    CHECK(reversed.unparseable == report.unparseable);
}

TEST_CASE("empty inputs produce an empty report") {
    EvalReport report = evaluate({}, {}, PropertySet::ps2());
    CHECK(report.n == 0);
    CHECK(report.accuracy == 0.0);
    CHECK(report.macro_f1 == 0.0);
    CHECK_FALSE(report.pearson.defined);
    CHECK(report.per_hop.empty());
    CHECK(report.per_label.empty());
}

TEST_CASE("reports serialize to json and csv") {
    const PropertySet& ps = PropertySet::ps2();
    std::vector<QAInstance> gold = {
        gold_row("g0", RelationSet{Label::Right}, 1),
        gold_row("g1", RelationSet{Label::Above}, 2),
    };
    std::vector<Prediction> preds = {exact_prediction(gold[0]), exact_prediction(gold[1])};
    EvalReport report = evaluate(preds, gold, ps);

    nlohmann::json doc = report_json(report);
    CHECK(doc["n"] == 2);
    CHECK(doc["unparseable"] == 0);
    CHECK(doc["accuracy"].get<double>() == doctest::Approx(1.0));
    CHECK(doc["per_hop"].size() == 2);
    CHECK(doc["per_label"].size() == 2);
    CHECK(doc["included_labels"].size() == 2);
    CHECK(doc["missing_ids"].empty());
    // Identical hop sequences of nonzero variance correlate perfectly.
    CHECK(doc["pearson_hops"].get<double>() == doctest::Approx(1.0));

    EvalReport flat = evaluate({exact_prediction(gold[0])}, {gold[0]}, ps);
    CHECK(report_json(flat)["pearson_hops"].is_null());

    std::string csv = report_csv(report);
    CHECK(csv.rfind("table,key,count,accuracy,f1\n", 0) == 0);
    CHECK(csv.find("per_hop,1,1,") != std::string::npos);
    CHECK(csv.find("per_hop,2,1,") != std::string::npos);
    CHECK(csv.find("per_label,above,1,,") != std::string::npos);
    CHECK(csv.find("per_label,right,1,,") != std::string::npos);
}
