// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sparc/pathgen.hpp"

namespace sparc {

// One JSON document per line. Reading throws IoError when the file cannot
// be opened and SchemaError (with the line number) on a line that is not
// a JSON object; writing throws IoError on filesystem failure.
std::vector<nlohmann::json> read_jsonl(const std::string& path);
void write_jsonl(const std::string& path, const std::vector<nlohmann::json>& records);

// Dataset record round trip: {"id","property_set","context_text",
// "triples","question","answer","reasoning","num_hops"}. Triples carry
// head/labels/tail, the sentence index, and per-axis unit counts when
// present. The reasoning path itself is not stored; it re-derives from
// the context when needed.
nlohmann::json instance_record(const QAInstance& instance);
QAInstance ingest_instance(const nlohmann::json& record);

}  // namespace sparc
