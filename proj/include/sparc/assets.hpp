// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "sparc/relations.hpp"
#include "sparc/story_parser.hpp"

namespace sparc {

// Asset root resolution order: explicit override, SPARC_ASSETS from the
// environment, the source-tree default compiled into the library.
std::string asset_root(const std::string& override_dir = {});
void set_asset_root(const std::string& dir);  // process-wide override

// Whole-file read; MissingAssetError when absent.
std::string read_asset_file(const std::string& path);

// Shared tables loaded once from the resolved root.
const PatternTable& default_patterns();
const SynonymTable& default_synonyms();

}  // namespace sparc
