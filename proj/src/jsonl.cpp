// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "sparc/jsonl.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "sparc/errors.hpp"

namespace sparc {

std::vector<nlohmann::json> read_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<nlohmann::json> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json rec = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
        if (rec.is_discarded() || !rec.is_object()) {
            throw SchemaError(path + ":" + std::to_string(lineno) + ": not a JSON object");
        }
        records.push_back(std::move(rec));
    }
    return records;
}

void write_jsonl(const std::string& path, const std::vector<nlohmann::json>& records) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot write " + path);
    for (const auto& rec : records) {
        out << rec.dump() << '\n';
    }
    if (!out) throw IoError("write failed on " + path);
}

nlohmann::json instance_record(const QAInstance& instance) {
    nlohmann::json ctx = emit(instance.context);
    nlohmann::json rec;
    rec["id"] = instance.id;
    rec["property_set"] = instance.context.property_set->name;
    rec["context_text"] = std::move(ctx["text"]);
    rec["triples"] = std::move(ctx["triples"]);
    rec["question"] = {{"head", instance.question_head}, {"tail", instance.question_tail}};
    nlohmann::json answer = nlohmann::json::array();
    for (Label l : instance.answer.labels()) answer.push_back(label_text(l));
    rec["answer"] = std::move(answer);
    rec["reasoning"] = instance.reasoning;
    rec["num_hops"] = instance.num_hops;
    return rec;
}

QAInstance ingest_instance(const nlohmann::json& record) {
    std::vector<std::string> missing;
    for (const char* field :
         {"id", "property_set", "context_text", "triples", "question", "answer", "reasoning", "num_hops"}) {
        if (!record.contains(field)) missing.emplace_back(field);
    }
    if (!missing.empty()) {
        std::string msg = "instance record missing field(s):";
        for (const auto& f : missing) msg += " " + f;
        throw SchemaError(msg);
    }

    QAInstance inst;
    inst.id = record["id"].get<std::string>();

    // The context id is the instance id minus its question ordinal.
    std::string ctx_id = inst.id;
    if (auto pos = ctx_id.rfind("-q"); pos != std::string::npos) ctx_id.resize(pos);

    nlohmann::json ctx_record;
    ctx_record["id"] = ctx_id;
    ctx_record["property_set"] = record["property_set"];
    ctx_record["text"] = record["context_text"];
    ctx_record["entities"] = nlohmann::json::array();  // re-registered from the triples
    ctx_record["triples"] = record["triples"];
    inst.context = ingest_annotated(ctx_record);

    if (!record["question"].contains("head") || !record["question"].contains("tail")) {
        throw SchemaError("instance " + inst.id + ": question needs head and tail");
    }
    inst.question_head = record["question"]["head"].get<std::string>();
    inst.question_tail = record["question"]["tail"].get<std::string>();
    RelationSet answer;
    for (const auto& l : record["answer"]) {
        auto parsed = parse_label_text(l.get<std::string>());
        if (!parsed) throw SchemaError("instance " + inst.id + ": unknown answer label " + l.dump());
        answer.insert_unchecked(*parsed);
    }
    inst.answer = answer;
    for (const auto& line : record["reasoning"]) inst.reasoning.push_back(line.get<std::string>());
    inst.num_hops = record["num_hops"].get<int>();
    return inst;
}

}  // namespace sparc
