// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "sparc/assets.hpp"
#include "sparc/dataset.hpp"
#include "sparc/errors.hpp"
#include "sparc/jsonl.hpp"
#include "sparc/metrics.hpp"
#include "sparc/prompt.hpp"
#include "sparc/verbalize.hpp"
#include "sparc/verifier.hpp"

namespace {

using sparc::DeductionMode;
using sparc::PropertySet;
using sparc::QAInstance;

DeductionMode parse_mode(const std::string& name) {
    if (name == "entailment") return DeductionMode::Entailment;
    if (name == "literal") return DeductionMode::Literal;
    throw sparc::Error("unknown deduction mode: " + name + " (use entailment or literal)");
}

std::vector<QAInstance> load_instances(const std::string& path) {
    std::vector<QAInstance> instances;
    for (const auto& rec : sparc::read_jsonl(path)) instances.push_back(sparc::ingest_instance(rec));
    return instances;
}

std::vector<sparc::Prediction> load_predictions(const std::string& path) {
    std::vector<sparc::Prediction> predictions;
    for (const auto& rec : sparc::read_jsonl(path)) {
        if (!rec.contains("id") || !rec.contains("output_text")) {
            throw sparc::SchemaError(path + ": prediction rows need id and output_text");
        }
        predictions.push_back(
            sparc::parse_prediction(rec["id"].get<std::string>(), rec["output_text"].get<std::string>()));
    }
    return predictions;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw sparc::IoError("cannot write " + path);
    out << text;
    if (!out) throw sparc::IoError("write failed on " + path);
}

int run(int argc, char** argv) {
    CLI::App app{"Spatial reasoning chain toolkit"};
    app.require_subcommand(1);

    std::string ps_name = "PS2";
    std::uint64_t seed = 0;
    std::string mode_name = "entailment";

    // scene
    auto* scene = app.add_subcommand("scene", "Synthesize annotated contexts");
    std::string scene_out = "contexts.jsonl";
    int scene_count = 10, scene_min = 3, scene_max = 8;
    scene->add_option("--ps", ps_name, "Property set (PS1..PS4)")->capture_default_str();
    scene->add_option("--seed", seed, "Master seed")->capture_default_str();
    scene->add_option("--count", scene_count, "Number of contexts")->capture_default_str();
    scene->add_option("--min-entities", scene_min, "Smallest entity count")->capture_default_str();
    scene->add_option("--max-entities", scene_max, "Largest entity count")->capture_default_str();
    scene->add_option("--out", scene_out, "Output JSONL path")->capture_default_str();

    // generate
    auto* generate = app.add_subcommand("generate", "Generate QA instances and balanced splits");
    std::string gen_out = "data";
    std::string sizes_text = "2000,500,1000";
    int gen_contexts_n = 800, gen_min = 3, gen_max = 8;
    generate->add_option("--ps", ps_name, "Property set (PS1..PS4)")->capture_default_str();
    generate->add_option("--seed", seed, "Master seed")->capture_default_str();
    generate->add_option("--sizes", sizes_text, "train,dev,test sizes")->capture_default_str();
    generate->add_option("--contexts", gen_contexts_n, "Context pool size")->capture_default_str();
    generate->add_option("--min-entities", gen_min, "Smallest entity count")->capture_default_str();
    generate->add_option("--max-entities", gen_max, "Largest entity count")->capture_default_str();
    generate->add_option("--mode", mode_name, "Deduction mode (entailment|literal)")->capture_default_str();
    generate->add_option("--out", gen_out, "Output directory")->capture_default_str();

    // prompt
    auto* prompt = app.add_subcommand("prompt", "Assemble few-shot prompt bundles");
    std::string prompt_gold, prompt_dev, prompt_out = "prompts.jsonl", assets_dir;
    int shots = 5;
    prompt->add_option("--ps", ps_name, "Property set (PS1..PS4)")->capture_default_str();
    prompt->add_option("--seed", seed, "Master seed")->capture_default_str();
    prompt->add_option("--gold", prompt_gold, "Query instances JSONL")->required();
    prompt->add_option("--dev", prompt_dev, "Dev-split JSONL for exemplars");
    prompt->add_option("--shots", shots, "Exemplars per bundle")->capture_default_str();
    prompt->add_option("--assets", assets_dir, "Description asset root (default: SPARC_ASSETS or built-in)");
    prompt->add_option("--out", prompt_out, "Output JSONL path")->capture_default_str();

    // eval
    auto* eval = app.add_subcommand("eval", "Score predictions against gold instances");
    std::string eval_gold, eval_pred, eval_report = "report.json", eval_csv;
    eval->add_option("--ps", ps_name, "Property set (PS1..PS4)")->capture_default_str();
    eval->add_option("--gold", eval_gold, "Gold split JSONL")->required();
    eval->add_option("--pred", eval_pred, "Predictions JSONL ({\"id\",\"output_text\"})")->required();
    eval->add_option("--report", eval_report, "Report JSON path")->capture_default_str();
    eval->add_option("--csv", eval_csv, "Optional CSV breakdown path");

    // verify
    auto* verify = app.add_subcommand("verify", "Audit predicted reasoning chains");
    std::string verify_gold, verify_pred, verify_out = "findings.jsonl";
    verify->add_option("--ps", ps_name, "Property set (PS1..PS4)")->capture_default_str();
    verify->add_option("--gold", verify_gold, "Gold split JSONL")->required();
    verify->add_option("--pred", verify_pred, "Predictions JSONL")->required();
    verify->add_option("--mode", mode_name, "Deduction mode (entailment|literal)")->capture_default_str();
    verify->add_option("--out", verify_out, "Findings JSONL path")->capture_default_str();

    // stats
    auto* stats = app.add_subcommand("stats", "Per-hop and per-label dataset summary");
    std::string stats_data, stats_report;
    stats->add_option("--data", stats_data, "Instances JSONL")->required();
    stats->add_option("--report", stats_report, "Write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // help lands on stdout, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // usage text on stderr
        return 1;
    }

    if (scene->parsed()) {
        const PropertySet& ps = PropertySet::by_name(ps_name);
        std::vector<nlohmann::json> records;
        for (const auto& ctx : sparc::gen_contexts(ps, scene_count, scene_min, scene_max, seed)) {
            records.push_back(sparc::emit(ctx));
        }
        sparc::write_jsonl(scene_out, records);
        std::cout << "wrote " << records.size() << " contexts to " << scene_out << "\n";
        return 0;
    }

    if (generate->parsed()) {
        const PropertySet& ps = PropertySet::by_name(ps_name);
        DeductionMode mode = parse_mode(mode_name);
        std::array<int, 3> sizes{};
        if (std::sscanf(sizes_text.c_str(), "%d,%d,%d", &sizes[0], &sizes[1], &sizes[2]) != 3) {
            throw sparc::Error("--sizes wants three comma-separated integers, got \"" + sizes_text + "\"");
        }
        auto contexts = sparc::gen_contexts(ps, gen_contexts_n, gen_min, gen_max, seed);
        sparc::GenerationLog log;
        auto instances = sparc::generate_sparp(contexts, ps, seed, mode, &log);
        auto splits = sparc::sample_balanced(instances, sizes, seed);
        for (const auto& split : splits) {
            std::vector<nlohmann::json> records;
            for (const auto& inst : split.instances) records.push_back(sparc::instance_record(inst));
            std::string path = gen_out + "/" + ps_name + "-" + split.name + ".jsonl";
            sparc::write_jsonl(path, records);
            std::cout << split.name << ": " << records.size() << " instances -> " << path << "\n";
        }
        std::cout << "pool " << instances.size() << " instances from " << contexts.size() << " contexts ("
                  << log.dropped_empty_answer << " empty-answer, " << log.dropped_no_path
                  << " no-path dropped)\n";
        return 0;
    }

    if (prompt->parsed()) {
        const PropertySet& ps = PropertySet::by_name(ps_name);
        auto gold = load_instances(prompt_gold);
        std::vector<QAInstance> dev_pool;
        if (!prompt_dev.empty()) dev_pool = load_instances(prompt_dev);
        if (shots > 0 && dev_pool.empty()) {
            throw sparc::Error("--shots > 0 needs --dev exemplar instances");
        }
        auto assets = sparc::load_description_assets(assets_dir);
        std::vector<nlohmann::json> records;
        for (const auto& inst : gold) {
            auto bundle = sparc::build_prompt(ps, inst, shots, seed, assets, dev_pool);
            nlohmann::json rec;
            rec["id"] = inst.id;
            rec["system"] = bundle.system_text;
            nlohmann::json exemplars = nlohmann::json::array();
            for (const auto& ex : bundle.exemplars) {
                exemplars.push_back({{"context", ex.context},
                                     {"question", ex.question},
                                     {"reasoning", ex.reasoning},
                                     {"answer", ex.answer}});
            }
            rec["exemplars"] = exemplars;
            rec["query"] = {{"context", bundle.query_context}, {"question", bundle.query_question}};
            rec["text"] = sparc::render_prompt(bundle);
            records.push_back(std::move(rec));
        }
        sparc::write_jsonl(prompt_out, records);
        std::cout << "wrote " << records.size() << " bundles to " << prompt_out << "\n";
        return 0;
    }

    if (eval->parsed()) {
        const PropertySet& ps = PropertySet::by_name(ps_name);
        auto gold = load_instances(eval_gold);
        auto predictions = load_predictions(eval_pred);
        auto report = sparc::evaluate(predictions, gold, ps);
        nlohmann::json doc = sparc::report_json(report);
        write_text(eval_report, doc.dump(2) + "\n");
        if (!eval_csv.empty()) write_text(eval_csv, sparc::report_csv(report));
        std::cout << "n=" << report.n << " accuracy=" << report.accuracy << " macro_f1=" << report.macro_f1
                  << " unparseable=" << report.unparseable << " -> " << eval_report << "\n";
        return 0;
    }

    if (verify->parsed()) {
        const PropertySet& ps = PropertySet::by_name(ps_name);
        DeductionMode mode = parse_mode(mode_name);
        auto gold = load_instances(verify_gold);
        auto predictions = load_predictions(verify_pred);
        std::map<std::string, const sparc::Prediction*> by_id;
        for (const auto& p : predictions) by_id[p.id] = &p;
        std::vector<nlohmann::json> records;
        int clean_count = 0;
        for (const auto& inst : gold) {
            auto it = by_id.find(inst.id);
            if (it == by_id.end()) continue;
            auto parsed = sparc::parse_reasoning_text(it->second->output_text);
            auto findings = sparc::verify_path(parsed.steps, inst.context, ps, inst.answer, mode);
            nlohmann::json rec;
            rec["id"] = inst.id;
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& f : findings) {
                rows.push_back({{"step", f.step_index},
                                {"kind", sparc::error_kind_name(f.kind)},
                                {"detail", f.detail}});
            }
            rec["findings"] = rows;
            rec["clean"] = findings.empty();
            rec["observed_hops"] = sparc::observed_num_hops(parsed.steps);
            clean_count += findings.empty();
            records.push_back(std::move(rec));
        }
        sparc::write_jsonl(verify_out, records);
        std::cout << clean_count << "/" << records.size() << " chains clean -> " << verify_out << "\n";
        return 0;
    }

    if (stats->parsed()) {
        auto instances = load_instances(stats_data);
        auto st = sparc::dataset_stats(instances);
        nlohmann::json doc;
        doc["total"] = st.total;
        nlohmann::json per_hop = nlohmann::json::object();
        for (const auto& [hop, count] : st.per_hop) per_hop[std::to_string(hop)] = count;
        doc["per_hop"] = per_hop;
        nlohmann::json per_label = nlohmann::json::object();
        for (const auto& [label, count] : st.per_label) per_label[label] = count;
        doc["per_label"] = per_label;
        if (stats_report.empty()) {
            std::cout << doc.dump(2) << "\n";
        } else {
            write_text(stats_report, doc.dump(2) + "\n");
            std::cout << "wrote stats for " << st.total << " instances to " << stats_report << "\n";
        }
        return 0;
    }

    return 1;  // unreachable with require_subcommand(1)
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sparc::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 2;
    } catch (const sparc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}
