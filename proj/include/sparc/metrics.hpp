// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sparc/pathgen.hpp"
#include "sparc/relation_set.hpp"

namespace sparc {

// One model completion, with whatever answer and step count could be
// recovered from its text.
struct Prediction {
    std::string id;
    std::string output_text;
    std::optional<RelationSet> extracted;
    int observed_hops = 0;
};

// Recovers the final answer and the number of context steps from raw
// completion text; extracted stays empty when no answer marker is found.
Prediction parse_prediction(std::string id, std::string output_text);

// 1 iff the label sets are identical; a missing answer scores 0.
int exact_match(const std::optional<RelationSet>& predicted, const RelationSet& gold);

// Unweighted mean of per-label binary F1 (F1 = 0 when a label's
// denominator is 0), over the labels with at least one gold or predicted
// occurrence; `included` receives that label list when non-null. A label
// outside `labels` never enters the mean.
double macro_f1(const std::vector<std::pair<RelationSet, RelationSet>>& predicted_gold_pairs,
                const std::vector<Label>& labels, std::vector<Label>* included = nullptr);

// Pearson product-moment correlation; defined is false (and rho 0) when
// either sequence has zero variance. Length mismatch throws Error.
struct PearsonResult {
    double rho = 0.0;
    bool defined = false;
};
PearsonResult pearson_hops(const std::vector<int>& observed, const std::vector<int>& gold);

struct HopScores {
    int hops = 0;
    int count = 0;
    double accuracy = 0.0;
    double f1 = 0.0;
};

struct LabelScore {
    Label label = Label::Left;
    double f1 = 0.0;
    int gold_count = 0;
    int predicted_count = 0;
};

struct EvalReport {
    int n = 0;
    int unparseable = 0;  // missing or answer-free predictions, scored 0
    double accuracy = 0.0;
    double macro_f1 = 0.0;
    std::vector<Label> included_labels;
    std::vector<HopScores> per_hop;      // ascending hop count
    std::vector<LabelScore> per_label;   // canonical label order
    PearsonResult pearson;
    std::vector<std::string> missing_ids;  // gold ids with no prediction
    std::vector<std::string> unknown_ids;  // prediction ids with no gold
};

// Scores predictions against gold instances. Gold rows without a
// prediction count as unparseable; prediction rows without a gold id are
// listed and skipped. Metrics are independent of instance order.
EvalReport evaluate(const std::vector<Prediction>& predictions, const std::vector<QAInstance>& gold,
                    const PropertySet& ps);

nlohmann::json report_json(const EvalReport& report);
std::string report_csv(const EvalReport& report);  // per-hop and per-label tables

}  // namespace sparc
