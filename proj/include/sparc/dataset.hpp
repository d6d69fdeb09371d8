// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sparc/pathgen.hpp"
#include "sparc/scenegen.hpp"

namespace sparc {

struct DatasetSplit {
    std::string name;  // train | dev | test
    std::vector<QAInstance> instances;
    std::uint64_t seed = 0;
};

// Reasons instances were dropped during generation, for the log line.
struct GenerationLog {
    int dropped_empty_answer = 0;  // path found, nothing deducible
    int dropped_no_path = 0;       // question endpoints disconnected
};

// Turns contexts into question-answer instances: one question per
// unordered entity pair (orientation seeded per context), answered via
// find_path + derive_trace and verbalized into numbered steps. Instances
// whose derivation concludes nothing are dropped, as are disconnected
// pairs. Ids are "{context id}-q{ordinal}"; num_hops is the path length.
std::vector<QAInstance> generate_sparp(const std::vector<SymbolicContext>& contexts, const PropertySet& ps,
                                       std::uint64_t seed, DeductionMode mode = DeductionMode::Entailment,
                                       GenerationLog* log = nullptr);

// Synthesizes `n_contexts` scenes with entity counts in [min_entities,
// max_entities], ids "{ps}-s{seed}-c{index}".
std::vector<SymbolicContext> gen_contexts(const PropertySet& ps, int n_contexts, int min_entities,
                                          int max_entities, std::uint64_t seed);

// Balanced train/dev/test sampling. Contexts are shuffled once and cut
// into three segments proportional to the requested sizes, so no context
// crosses a split. Within a split, each distinct hop count receives an
// equal share of the requested size (remainders to the smallest hop
// values); when a hop bucket runs out, the shortfall refills round-robin
// from buckets that still have spare instances. Instances are ordered by
// id. Throws InsufficientDataError when a segment cannot cover its size.
std::vector<DatasetSplit> sample_balanced(const std::vector<QAInstance>& instances,
                                          const std::array<int, 3>& sizes, std::uint64_t seed);

// Per-hop and per-label instance counts, for the stats report.
struct DatasetStats {
    int total = 0;
    std::vector<std::pair<int, int>> per_hop;          // hop -> count, ascending
    std::vector<std::pair<std::string, int>> per_label;  // label -> gold occurrences, canonical order
};
DatasetStats dataset_stats(const std::vector<QAInstance>& instances);

}  // namespace sparc
