// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sparc/pathgen.hpp"

namespace sparc {

// The instruction texts filled into the system template: the fixed
// point-of-view paragraph, the default-unit paragraph appended for
// quantitative configurations, and five phrasing variants per property
// tag (po, eo, ri, rc, qs, qu).
struct DescriptionAssets {
    std::string system_template;
    std::string fpov;
    std::string implicit_quantification;
    std::map<std::string, std::vector<std::string>> variants;
};

// Reads the template and every description file under
// {root}/prompts and {root}/descriptions; the root defaults to the
// resolved asset root. Throws MissingAssetError naming the absent file.
DescriptionAssets load_description_assets(const std::string& root = {});

struct PromptExemplar {
    std::string context;
    std::string question;
    std::string reasoning;  // newline-joined numbered steps
    std::string answer;
};

struct PromptBundle {
    std::string system_text;
    std::vector<PromptExemplar> exemplars;
    std::string query_context;
    std::string query_question;
};

std::string question_text(const std::string& head, const std::string& tail);

// Fills the system template for the property set: each placeholder pair
// {x_type}/{x_type_desc} takes the property's name and one of its five
// seeded description variants, {spatial_relation_choices} lists the
// label universe, and the default-unit paragraph rides along only when
// directions carry counts. Exemplars are k dev-split instances drawn
// with the bundle seed; k = 0 builds a zero-shot bundle.
PromptBundle build_prompt(const PropertySet& ps, const QAInstance& instance, int k, std::uint64_t seed,
                          const DescriptionAssets& assets, const std::vector<QAInstance>& dev_pool);

// One flat text block: system, exemplars with their reasoning and
// answers, then the query context and question.
std::string render_prompt(const PromptBundle& bundle);

}  // namespace sparc
