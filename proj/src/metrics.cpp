// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "sparc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "sparc/errors.hpp"
#include "sparc/verbalize.hpp"
#include "sparc/verifier.hpp"

namespace sparc {

Prediction parse_prediction(std::string id, std::string output_text) {
    Prediction pred;
    pred.id = std::move(id);
    pred.extracted = extract_final_answer(output_text);
    pred.observed_hops = observed_num_hops(parse_reasoning_text(output_text).steps);
    pred.output_text = std::move(output_text);
    return pred;
}

int exact_match(const std::optional<RelationSet>& predicted, const RelationSet& gold) {
    if (!predicted) return 0;
    return predicted->same_labels(gold) ? 1 : 0;
}

double macro_f1(const std::vector<std::pair<RelationSet, RelationSet>>& predicted_gold_pairs,
                const std::vector<Label>& labels, std::vector<Label>* included) {
    if (included) included->clear();
    double sum = 0.0;
    int used = 0;
    for (Label l : labels) {
        long tp = 0, fp = 0, fn = 0, seen = 0;
        for (const auto& [pred, gold] : predicted_gold_pairs) {
            bool p = pred.contains(l);
            bool g = gold.contains(l);
            tp += p && g;
            fp += p && !g;
            fn += !p && g;
            seen += p || g;
        }
        if (seen == 0) continue;  // label absent from both sides throughout
        double denom = static_cast<double>(2 * tp + fp + fn);
        sum += denom == 0.0 ? 0.0 : 2.0 * static_cast<double>(tp) / denom;
        ++used;
        if (included) included->push_back(l);
    }
    return used == 0 ? 0.0 : sum / used;
}

PearsonResult pearson_hops(const std::vector<int>& observed, const std::vector<int>& gold) {
    if (observed.size() != gold.size()) {
        throw Error("hop sequences differ in length: " + std::to_string(observed.size()) + " vs " +
                    std::to_string(gold.size()));
    }
    PearsonResult result;
    std::size_t n = observed.size();
    if (n == 0) return result;
    double mo = 0.0, mg = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mo += observed[i];
        mg += gold[i];
    }
    mo /= static_cast<double>(n);
    mg /= static_cast<double>(n);
    double so = 0.0, sg = 0.0, cross = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double a = observed[i] - mo;
        double b = gold[i] - mg;
        so += a * a;
        sg += b * b;
        cross += a * b;
    }
    if (so == 0.0 || sg == 0.0) return result;  // zero variance: flagged null
    result.rho = cross / std::sqrt(so * sg);
    result.defined = true;
    return result;
}

EvalReport evaluate(const std::vector<Prediction>& predictions, const std::vector<QAInstance>& gold,
                    const PropertySet& ps) {
    EvalReport report;
    std::map<std::string, const Prediction*> by_id;
    for (const Prediction& p : predictions) by_id[p.id] = &p;

    std::set<std::string> gold_ids;
    for (const QAInstance& inst : gold) gold_ids.insert(inst.id);
    for (const Prediction& p : predictions) {
        if (!gold_ids.count(p.id)) report.unknown_ids.push_back(p.id);
    }
    std::sort(report.unknown_ids.begin(), report.unknown_ids.end());

    std::vector<std::pair<RelationSet, RelationSet>> pairs;
    std::vector<int> row_hits;
    std::map<int, std::vector<std::size_t>> rows_by_hop;
    std::vector<int> observed_hops, gold_hops;
    long hits = 0;

    for (const QAInstance& inst : gold) {
        auto it = by_id.find(inst.id);
        const Prediction* pred = it == by_id.end() ? nullptr : it->second;
        if (!pred) report.missing_ids.push_back(inst.id);
        bool parseable = pred && pred->extracted.has_value();
        if (!parseable) ++report.unparseable;

        RelationSet predicted = parseable ? *pred->extracted : RelationSet{};
        int hit = exact_match(parseable ? pred->extracted : std::nullopt, inst.answer);
        hits += hit;
        row_hits.push_back(hit);
        rows_by_hop[inst.num_hops].push_back(pairs.size());
        pairs.emplace_back(predicted, inst.answer);
        observed_hops.push_back(pred ? pred->observed_hops : 0);
        gold_hops.push_back(inst.num_hops);
        ++report.n;
    }
    std::sort(report.missing_ids.begin(), report.missing_ids.end());

    report.accuracy = report.n == 0 ? 0.0 : static_cast<double>(hits) / report.n;
    std::vector<Label> universe = ps.label_universe();
    report.macro_f1 = macro_f1(pairs, universe, &report.included_labels);
    report.pearson = pearson_hops(observed_hops, gold_hops);

    for (const auto& [hops, rows] : rows_by_hop) {
        HopScores scores;
        scores.hops = hops;
        scores.count = static_cast<int>(rows.size());
        std::vector<std::pair<RelationSet, RelationSet>> subset;
        long sub_hits = 0;
        for (std::size_t row : rows) {
            subset.push_back(pairs[row]);
            sub_hits += row_hits[row];
        }
        scores.accuracy = rows.empty() ? 0.0 : static_cast<double>(sub_hits) / static_cast<double>(rows.size());
        scores.f1 = macro_f1(subset, universe, nullptr);
        report.per_hop.push_back(scores);
    }

    for (Label l : universe) {
        long tp = 0, fp = 0, fn = 0, gold_count = 0, pred_count = 0;
        for (const auto& [pred, g] : pairs) {
            bool p = pred.contains(l);
            bool gg = g.contains(l);
            tp += p && gg;
            fp += p && !gg;
            fn += !p && gg;
            gold_count += gg;
            pred_count += p;
        }
        if (gold_count == 0 && pred_count == 0) continue;
        LabelScore score;
        score.label = l;
        score.gold_count = static_cast<int>(gold_count);
        score.predicted_count = static_cast<int>(pred_count);
        double denom = static_cast<double>(2 * tp + fp + fn);
        score.f1 = denom == 0.0 ? 0.0 : 2.0 * static_cast<double>(tp) / denom;
        report.per_label.push_back(score);
    }
    return report;
}

nlohmann::json report_json(const EvalReport& report) {
    nlohmann::json doc;
    doc["n"] = report.n;
    doc["unparseable"] = report.unparseable;
    doc["accuracy"] = report.accuracy;
    doc["macro_f1"] = report.macro_f1;
    nlohmann::json included = nlohmann::json::array();
    for (Label l : report.included_labels) included.push_back(label_text(l));
    doc["included_labels"] = included;
    nlohmann::json per_hop = nlohmann::json::array();
    for (const HopScores& h : report.per_hop) {
        per_hop.push_back({{"hops", h.hops}, {"count", h.count}, {"accuracy", h.accuracy}, {"f1", h.f1}});
    }
    doc["per_hop"] = per_hop;
    nlohmann::json per_label = nlohmann::json::array();
    for (const LabelScore& s : report.per_label) {
        per_label.push_back({{"label", label_text(s.label)},
                             {"f1", s.f1},
                             {"gold", s.gold_count},
                             {"predicted", s.predicted_count}});
    }
    doc["per_label"] = per_label;
    doc["pearson_hops"] = report.pearson.defined ? nlohmann::json(report.pearson.rho) : nlohmann::json(nullptr);
    doc["missing_ids"] = report.missing_ids;
    doc["unknown_ids"] = report.unknown_ids;
    return doc;
}

std::string report_csv(const EvalReport& report) {
    std::string out = "table,key,count,accuracy,f1\n";
    for (const HopScores& h : report.per_hop) {
        out += "per_hop," + std::to_string(h.hops) + "," + std::to_string(h.count) + "," +
               std::to_string(h.accuracy) + "," + std::to_string(h.f1) + "\n";
    }
    for (const LabelScore& s : report.per_label) {
        out += "per_label," + label_text(s.label) + "," + std::to_string(s.gold_count) + ",," +
               std::to_string(s.f1) + "\n";
    }
    return out;
}

}  // namespace sparc
