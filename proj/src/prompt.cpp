// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "sparc/prompt.hpp"

#include <algorithm>

#include "sparc/assets.hpp"
#include "sparc/errors.hpp"
#include "sparc/rng.hpp"

namespace sparc {

namespace {

// Every placeholder occurrence, replaced.
void fill(std::string& text, const std::string& placeholder, const std::string& value) {
    std::string needle = "{" + placeholder + "}";
    std::size_t at = 0;
    while ((at = text.find(needle, at)) != std::string::npos) {
        text.replace(at, needle.size(), value);
        at += value.size();
    }
}

std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    return s;
}

std::string join_text(const std::vector<std::string>& sentences) {
    std::string out;
    for (const std::string& s : sentences) {
        if (!out.empty()) out.push_back(' ');
        out += s;
    }
    return out;
}

}  // namespace

DescriptionAssets load_description_assets(const std::string& root) {
    std::string base = asset_root(root);
    DescriptionAssets assets;
    assets.system_template = trimmed(read_asset_file(base + "/prompts/system_template.txt"));
    assets.fpov = trimmed(read_asset_file(base + "/descriptions/fpov.txt"));
    assets.implicit_quantification =
        trimmed(read_asset_file(base + "/descriptions/implicit_quantification.txt"));
    for (const char* tag : {"po", "eo", "ri", "rc", "qs", "qu"}) {
        std::vector<std::string>& texts = assets.variants[tag];
        for (int variant = 1; variant <= 5; ++variant) {
            texts.push_back(trimmed(
                read_asset_file(base + "/descriptions/" + tag + "_" + std::to_string(variant) + ".txt")));
        }
    }
    return assets;
}

std::string question_text(const std::string& head, const std::string& tail) {
    return "What is the relation of the agent " + head + " to the agent " + tail + "?";
}

PromptBundle build_prompt(const PropertySet& ps, const QAInstance& instance, int k, std::uint64_t seed,
                          const DescriptionAssets& assets, const std::vector<QAInstance>& dev_pool) {
    if (k < 0) throw Error("negative exemplar count");
    if (k > static_cast<int>(dev_pool.size())) {
        throw InsufficientDataError("asked for " + std::to_string(k) + " exemplars, dev pool holds " +
                                    std::to_string(dev_pool.size()));
    }

    Rng rng(stable_seed(seed, "prompt", stable_seed(0, instance.id)));
    auto variant = [&](const std::string& tag) -> const std::string& {
        auto it = assets.variants.find(tag);
        if (it == assets.variants.end() || it->second.empty()) throw MissingAssetError("descriptions/" + tag);
        return it->second[static_cast<std::size_t>(rng.below(it->second.size()))];
    };

    bool point = ps.objects == ObjectKind::Point;
    bool complete = ps.completeness == Completeness::Complete;
    bool quantified = ps.quantitative();

    std::string text = assets.system_template;
    fill(text, "point_of_view_type", "Fixed Orientation Point of View");
    fill(text, "point_of_view_type_desc", assets.fpov);
    fill(text, "point_of_view_type_default", "");
    fill(text, "entity_type", point ? "Point Objects" : "Extended Objects");
    fill(text, "entity_type_desc", variant(point ? "po" : "eo"));
    fill(text, "entity_type_default", "");
    fill(text, "quantitative_type", quantified ? "Quantitatively Specified" : "Quantitatively Unspecified");
    fill(text, "quantitative_type_desc", variant(quantified ? "qs" : "qu"));
    fill(text, "quantitative_type_default", quantified ? " " + assets.implicit_quantification : "");
    fill(text, "relation_type", complete ? "Relation Complete" : "Relation Incomplete");
    fill(text, "relation_type_desc", variant(complete ? "rc" : "ri"));
    fill(text, "relation_type_default", "");

    std::string choices;
    for (Label l : ps.label_universe()) {
        if (!choices.empty()) choices += ", ";
        choices += label_text(l);
    }
    fill(text, "spatial_relation_choices", choices);

    PromptBundle bundle;
    bundle.system_text = std::move(text);

    std::vector<std::size_t> order(dev_pool.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(order);
    for (int i = 0; i < k; ++i) {
        const QAInstance& ex = dev_pool[order[static_cast<std::size_t>(i)]];
        PromptExemplar exemplar;
        exemplar.context = join_text(ex.context.text);
        exemplar.question = question_text(ex.question_head, ex.question_tail);
        std::string reasoning;
        for (const std::string& line : ex.reasoning) {
            if (!reasoning.empty()) reasoning.push_back('\n');
            reasoning += line;
        }
        exemplar.reasoning = std::move(reasoning);
        exemplar.answer = ex.answer.answer_text();
        bundle.exemplars.push_back(std::move(exemplar));
    }

    bundle.query_context = join_text(instance.context.text);
    bundle.query_question = question_text(instance.question_head, instance.question_tail);
    return bundle;
}

std::string render_prompt(const PromptBundle& bundle) {
    std::string out = bundle.system_text;
    out += "\n";
    for (const PromptExemplar& ex : bundle.exemplars) {
        out += "\nContext: " + ex.context + "\n";
        out += "Question: " + ex.question + "\n";
        // The reasoning already closes with the answer sentence.
        out += "Answer: " + ex.reasoning + "\n";
    }
    out += "\nContext: " + bundle.query_context + "\n";
    out += "Question: " + bundle.query_question + "\n";
    out += "Answer:";
    return out;
}

}  // namespace sparc
