// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "sparc/assets.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include "sparc/errors.hpp"

#ifndef SPARC_SOURCE_ASSETS_DIR
#define SPARC_SOURCE_ASSETS_DIR "assets"
#endif

namespace sparc {

namespace {

std::string& override_root() {
    static std::string root;
    return root;
}

}  // namespace

std::string asset_root(const std::string& override_dir) {
    if (!override_dir.empty()) return override_dir;
    if (!override_root().empty()) return override_root();
    if (const char* env = std::getenv("SPARC_ASSETS"); env && *env) return env;
    return SPARC_SOURCE_ASSETS_DIR;
}

void set_asset_root(const std::string& dir) { override_root() = dir; }

std::string read_asset_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingAssetError(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

const PatternTable& default_patterns() {
    static std::once_flag flag;
    static PatternTable table;
    std::call_once(flag, [] { table = PatternTable::load(asset_root() + "/patterns/sentences.tsv"); });
    return table;
}

const SynonymTable& default_synonyms() {
    static std::once_flag flag;
    static SynonymTable table;
    std::call_once(flag, [] { table = SynonymTable::load(asset_root() + "/labels/synonyms.tsv"); });
    return table;
}

}  // namespace sparc
