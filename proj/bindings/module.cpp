// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "sparc/assets.hpp"
#include "sparc/dataset.hpp"
#include "sparc/errors.hpp"
#include "sparc/jsonl.hpp"
#include "sparc/metrics.hpp"
#include "sparc/prompt.hpp"
#include "sparc/verbalize.hpp"
#include "sparc/verifier.hpp"

namespace py = pybind11;

namespace {

using namespace sparc;

const PropertySet& ps_of(const std::string& name) { return PropertySet::by_name(name); }

DeductionMode mode_of(const std::string& name) {
    if (name == "entailment") return DeductionMode::Entailment;
    if (name == "literal") return DeductionMode::Literal;
    throw Error("unknown deduction mode: " + name);
}

std::vector<std::string> label_strings(const RelationSet& rels) {
    std::vector<std::string> out;
    for (Label l : rels.labels()) out.push_back(label_text(l));
    return out;
}

RelationSet labels_of(const std::vector<std::string>& texts) {
    RelationSet rels;
    for (const auto& t : texts) {
        auto l = parse_label_text(t);
        if (!l) throw UnknownLabelError(t);
        rels.insert_unchecked(*l);
    }
    return rels;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spatial relation composition and reasoning-chain toolkit";

    py::register_exception<Error>(m, "SparcError");

    py::class_<SymbolicContext>(m, "Context")
        .def_property_readonly("id", [](const SymbolicContext& c) { return c.id; })
        .def_property_readonly("property_set", [](const SymbolicContext& c) { return c.property_set->name; })
        .def_property_readonly("text", [](const SymbolicContext& c) { return c.text; })
        .def_property_readonly("entities",
                               [](const SymbolicContext& c) {
                                   std::vector<std::string> out;
                                   for (const auto& e : c.entities) out.push_back(e.id);
                                   return out;
                               })
        .def("json", [](const SymbolicContext& c) { return emit(c).dump(); })
        .def("__repr__", [](const SymbolicContext& c) {
            return "<Context " + c.id + " (" + std::to_string(c.entities.size()) + " entities)>";
        });

    py::class_<QAInstance>(m, "Instance")
        .def_property_readonly("id", [](const QAInstance& i) { return i.id; })
        .def_property_readonly("question_head", [](const QAInstance& i) { return i.question_head; })
        .def_property_readonly("question_tail", [](const QAInstance& i) { return i.question_tail; })
        .def_property_readonly("answer", [](const QAInstance& i) { return label_strings(i.answer); })
        .def_property_readonly("num_hops", [](const QAInstance& i) { return i.num_hops; })
        .def_property_readonly("reasoning", [](const QAInstance& i) { return i.reasoning; })
        .def_property_readonly(
            "context", [](const QAInstance& i) -> const SymbolicContext& { return i.context; },
            py::return_value_policy::reference_internal)
        .def("json", [](const QAInstance& i) { return instance_record(i).dump(); })
        .def("__repr__", [](const QAInstance& i) { return "<Instance " + i.id + ">"; });

    m.def("property_sets", [] {
        std::vector<std::string> names;
        for (const PropertySet* ps : PropertySet::all()) names.push_back(ps->name);
        return names;
    });

    m.def(
        "label_universe", [](const std::string& ps) {
            std::vector<std::string> out;
            for (Label l : ps_of(ps).label_universe()) out.push_back(label_text(l));
            return out;
        },
        py::arg("ps"));

    m.def(
        "parse_story",
        [](const std::vector<std::string>& sentences, const std::string& ps) {
            return parse_story(sentences, ps_of(ps), default_patterns(), &default_synonyms());
        },
        py::arg("sentences"), py::arg("ps"), "Symbolic context from story sentences");

    m.def(
        "gen_contexts",
        [](const std::string& ps, int count, int min_entities, int max_entities, std::uint64_t seed) {
            return gen_contexts(ps_of(ps), count, min_entities, max_entities, seed);
        },
        py::arg("ps"), py::arg("count") = 10, py::arg("min_entities") = 3, py::arg("max_entities") = 8,
        py::arg("seed") = 0);

    m.def(
        "generate",
        [](const std::vector<SymbolicContext>& contexts, const std::string& ps, std::uint64_t seed,
           const std::string& mode) { return generate_sparp(contexts, ps_of(ps), seed, mode_of(mode)); },
        py::arg("contexts"), py::arg("ps"), py::arg("seed") = 0, py::arg("mode") = "entailment",
        "QA instances with derived answers and verbalized reasoning");

    m.def(
        "derive",
        [](const SymbolicContext& ctx, const std::string& head, const std::string& tail,
           const std::string& ps, const std::string& mode) {
            const PropertySet& p = ps_of(ps);
            ReasoningPath path = find_path(ctx, build_graph(ctx), head, tail);
            DeductionMode md = mode_of(mode);
            py::dict out;
            out["answer"] = label_strings(derive_answer(path, p, md));
            out["num_hops"] = path.num_hops();
            out["reasoning"] = render_steps(verbalize_steps(path, p, md));
            return out;
        },
        py::arg("context"), py::arg("head"), py::arg("tail"), py::arg("ps"),
        py::arg("mode") = "entailment", "Answer one question against a context");

    m.def(
        "extract_final_answer",
        [](const std::string& text) -> py::object {
            auto rels = extract_final_answer(text);
            if (!rels) return py::none();
            return py::cast(label_strings(*rels));
        },
        py::arg("text"));

    m.def(
        "verify_chain",
        [](const SymbolicContext& ctx, const std::string& reasoning_text,
           const std::vector<std::string>& expected_answer, const std::string& ps, const std::string& mode) {
            auto parsed = parse_reasoning_text(reasoning_text);
            auto findings = verify_path(parsed.steps, ctx, ps_of(ps), labels_of(expected_answer), mode_of(mode));
            py::list out;
            for (const auto& f : findings) {
                py::dict row;
                row["step"] = f.step_index;
                row["kind"] = error_kind_name(f.kind);
                row["detail"] = f.detail;
                out.append(row);
            }
            return out;
        },
        py::arg("context"), py::arg("reasoning_text"), py::arg("expected_answer"), py::arg("ps"),
        py::arg("mode") = "entailment", "Audit a reasoning chain; empty list means sound");

    m.def(
        "evaluate",
        [](const std::vector<std::pair<std::string, std::string>>& predictions,
           const std::vector<QAInstance>& gold, const std::string& ps) {
            std::vector<Prediction> preds;
            for (const auto& [id, text] : predictions) preds.push_back(parse_prediction(id, text));
            EvalReport report = evaluate(preds, gold, ps_of(ps));
            py::dict out;
            out["n"] = report.n;
            out["accuracy"] = report.accuracy;
            out["macro_f1"] = report.macro_f1;
            out["unparseable"] = report.unparseable;
            out["pearson_hops"] = report.pearson.defined ? py::cast(report.pearson.rho) : py::none();
            return out;
        },
        py::arg("predictions"), py::arg("gold"), py::arg("ps"),
        "Score (id, output_text) predictions against gold instances");

    m.def(
        "build_prompt_text",
        [](const QAInstance& instance, const std::string& ps, int shots,
           const std::vector<QAInstance>& dev_pool, std::uint64_t seed, const std::string& assets_root) {
            auto assets = load_description_assets(assets_root);
            return render_prompt(build_prompt(ps_of(ps), instance, shots, seed, assets, dev_pool));
        },
        py::arg("instance"), py::arg("ps"), py::arg("shots") = 5,
        py::arg("dev_pool") = std::vector<QAInstance>{}, py::arg("seed") = 0, py::arg("assets_root") = "",
        "Flattened few-shot prompt for one instance");

    m.def("set_asset_root", &set_asset_root, py::arg("dir"));
}
