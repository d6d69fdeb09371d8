// SPDX-FileCopyrightText: © 2026 sparc contributors
//
// SPDX-License-Identifier: Apache-2.0

#include "sparc/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "sparc/errors.hpp"
#include "sparc/rng.hpp"
#include "sparc/verbalize.hpp"

namespace sparc {

namespace {

std::string lowercase(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

std::vector<SymbolicContext> gen_contexts(const PropertySet& ps, int n_contexts, int min_entities,
                                          int max_entities, std::uint64_t seed) {
    if (n_contexts < 0 || min_entities < 2 || max_entities < min_entities) {
        throw Error("bad context generation request");
    }
    std::vector<SymbolicContext> out;
    out.reserve(static_cast<std::size_t>(n_contexts));
    for (int i = 0; i < n_contexts; ++i) {
        Rng rng(stable_seed(seed, "scene", static_cast<std::uint64_t>(i)));
        int n = min_entities + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_entities - min_entities + 1)));
        Scene scene = gen_scene(ps, n, rng);
        scene.context.id =
            lowercase(ps.name) + "-s" + std::to_string(seed) + "-c" + std::to_string(i);
        out.push_back(std::move(scene.context));
    }
    return out;
}

std::vector<QAInstance> generate_sparp(const std::vector<SymbolicContext>& contexts, const PropertySet& ps,
                                       std::uint64_t seed, DeductionMode mode, GenerationLog* log) {
    std::vector<QAInstance> out;
    for (const SymbolicContext& ctx : contexts) {
        RelationGraph graph = build_graph(ctx);
        Rng rng(stable_seed(seed, "questions", stable_seed(0, ctx.id)));
        int ordinal = 0;
        for (std::size_t a = 0; a < ctx.entities.size(); ++a) {
            for (std::size_t b = a + 1; b < ctx.entities.size(); ++b) {
                bool flip = rng.chance(0.5);
                const std::string& head = ctx.entities[flip ? b : a].id;
                const std::string& tail = ctx.entities[flip ? a : b].id;
                QAInstance inst;
                try {
                    inst.path = find_path(ctx, graph, head, tail);
                } catch (const NoPathError&) {
                    if (log) ++log->dropped_no_path;
                    continue;
                }
                inst.answer = derive_answer(inst.path, ps, mode);
                if (inst.answer.empty()) {
                    if (log) ++log->dropped_empty_answer;
                    continue;
                }
                inst.context = ctx;
                inst.context.property_set = &ps;
                inst.question_head = head;
                inst.question_tail = tail;
                inst.num_hops = inst.path.num_hops();
                inst.reasoning = render_steps(verbalize_steps(inst.path, ps, mode));
                inst.id = ctx.id + "-q" + std::to_string(ordinal++);
                out.push_back(std::move(inst));
            }
        }
    }
    return out;
}

std::vector<DatasetSplit> sample_balanced(const std::vector<QAInstance>& instances,
                                          const std::array<int, 3>& sizes, std::uint64_t seed) {
    static const char* kNames[3] = {"train", "dev", "test"};
    for (int size : sizes) {
        if (size < 0) throw Error("negative split size");
    }
    long total_requested = static_cast<long>(sizes[0]) + sizes[1] + sizes[2];
    if (static_cast<long>(instances.size()) < total_requested) {
        throw InsufficientDataError("pool holds " + std::to_string(instances.size()) + " instances, " +
                                    std::to_string(total_requested) + " requested");
    }

    // Contexts in first-appearance order, then one seeded shuffle; cutting
    // the shuffled list proportionally keeps every context inside one split.
    std::vector<std::string> context_order;
    std::map<std::string, std::vector<const QAInstance*>> by_context;
    for (const QAInstance& inst : instances) {
        std::string ctx_id = inst.context.id;
        auto [it, fresh] = by_context.try_emplace(ctx_id);
        if (fresh) context_order.push_back(ctx_id);
        it->second.push_back(&inst);
    }
    Rng shuffle_rng(stable_seed(seed, "context-order"));
    shuffle_rng.shuffle(context_order);

    double total_instances = static_cast<double>(instances.size());
    double cut1 = total_instances * static_cast<double>(sizes[0]) / static_cast<double>(total_requested);
    double cut2 = total_instances * static_cast<double>(sizes[0] + sizes[1]) / static_cast<double>(total_requested);

    std::vector<std::vector<const QAInstance*>> pools(3);
    long cum = 0;
    for (const std::string& ctx_id : context_order) {
        const auto& group = by_context[ctx_id];
        std::size_t slot = cum < static_cast<long>(cut1) ? 0 : cum < static_cast<long>(cut2) ? 1 : 2;
        pools[slot].insert(pools[slot].end(), group.begin(), group.end());
        cum += static_cast<long>(group.size());
    }

    std::vector<DatasetSplit> splits;
    for (std::size_t s = 0; s < 3; ++s) {
        int size = sizes[s];
        auto& pool = pools[s];
        if (static_cast<int>(pool.size()) < size) {
            throw InsufficientDataError(std::string(kNames[s]) + " segment holds " +
                                        std::to_string(pool.size()) + " instances, " + std::to_string(size) +
                                        " requested");
        }

        std::map<int, std::vector<const QAInstance*>> buckets;
        for (const QAInstance* inst : pool) buckets[inst->num_hops].push_back(inst);
        Rng rng(stable_seed(seed, "split", s));
        for (auto& [hops, bucket] : buckets) rng.shuffle(bucket);

        // Equal share per hop value, remainders to the smallest hops.
        std::vector<int> hop_values;
        for (const auto& [hops, bucket] : buckets) hop_values.push_back(hops);
        int h = static_cast<int>(hop_values.size());
        std::map<int, int> want;
        for (int i = 0; i < h; ++i) {
            want[hop_values[static_cast<std::size_t>(i)]] = size / h + (i < size % h ? 1 : 0);
        }

        std::map<int, int> taken;
        int short_by = 0;
        for (int hv : hop_values) {
            int available = static_cast<int>(buckets[hv].size());
            taken[hv] = std::min(want[hv], available);
            short_by += want[hv] - taken[hv];
        }
        // Exhausted buckets push their shortfall round-robin onto the rest.
        while (short_by > 0) {
            bool moved = false;
            for (int hv : hop_values) {
                if (short_by == 0) break;
                if (taken[hv] < static_cast<int>(buckets[hv].size())) {
                    ++taken[hv];
                    --short_by;
                    moved = true;
                }
            }
            if (!moved) {
                throw InsufficientDataError(std::string(kNames[s]) + " segment cannot reach " +
                                            std::to_string(size) + " instances");
            }
        }

        DatasetSplit split;
        split.name = kNames[s];
        split.seed = seed;
        for (int hv : hop_values) {
            const auto& bucket = buckets[hv];
            for (int i = 0; i < taken[hv]; ++i) split.instances.push_back(*bucket[static_cast<std::size_t>(i)]);
        }
        std::sort(split.instances.begin(), split.instances.end(),
                  [](const QAInstance& a, const QAInstance& b) { return a.id < b.id; });
        splits.push_back(std::move(split));
    }
    return splits;
}

DatasetStats dataset_stats(const std::vector<QAInstance>& instances) {
    DatasetStats stats;
    stats.total = static_cast<int>(instances.size());
    std::map<int, int> hops;
    std::map<Label, int> labels;
    for (const QAInstance& inst : instances) {
        ++hops[inst.num_hops];
        for (Label l : inst.answer.labels()) ++labels[l];
    }
    for (const auto& [h, count] : hops) stats.per_hop.emplace_back(h, count);
    for (const auto& [l, count] : labels) stats.per_label.emplace_back(label_text(l), count);
    return stats;
}

}  // namespace sparc
