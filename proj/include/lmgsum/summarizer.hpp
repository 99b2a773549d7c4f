// Copyright 2026 The lmgsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "lmgsum/candidates.hpp"
#include "lmgsum/graph.hpp"
#include "lmgsum/merge.hpp"
#include "lmgsum/summary.hpp"

namespace lmgsum {

struct RunConfig {
    std::size_t rows = 8;
    std::size_t max_bands = 10;
    std::uint64_t seed = 1;
    std::size_t cluster_cap = 5000;
    std::vector<std::size_t> checkpoints;  // empty means {max_bands}
    std::size_t threads = 1;
    bool completion = true;

    /// Called after every committed proposal.
    std::function<void(const SummaryState &, const MergeProposal &)> on_commit;

    void validate() const {
        if (rows < 1) throw Error("config: rows must be >= 1");
        if (max_bands < 1) throw Error("config: band count must be >= 1");
        if (cluster_cap < 2) throw Error("config: cluster cap must be >= 2");
        for (auto b : checkpoints)
            if (b < 1 || b > max_bands) throw Error("config: checkpoints must lie in [1, band count]");
    }

    std::vector<std::size_t> schedule() const {
        std::vector<std::size_t> s = checkpoints.empty() ? std::vector<std::size_t>{max_bands} : checkpoints;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    }
};

inline double compression_ratio(BitCost bits_before, BitCost bits_after) {
    if (!(bits_before > 0.0)) throw Error("compression_ratio: bits_before must be positive");
    return (bits_before - bits_after) / bits_before;
}

/// (actual - shuffled) / (1 - shuffled).
inline double normalized_gain(double actual, double shuffled) {
    if (!(shuffled < 1.0)) throw Error("normalized_gain: shuffled ratio must be < 1");
    return (actual - shuffled) / (1.0 - shuffled);
}

struct SummaryCounts {
    std::array<std::size_t, kGlyphCount> by_glyph{};
    std::size_t super_nodes = 0;
    std::size_t super_edges = 0;

    friend bool operator==(const SummaryCounts &, const SummaryCounts &) = default;
};

inline SummaryCounts count_summary(const SummaryGraph &s) {
    SummaryCounts c;
    for (const auto &v : s.super_nodes) ++c.by_glyph[static_cast<std::size_t>(v.glyph)];
    c.super_nodes = s.super_nodes.size();
    c.super_edges = s.super_edges.size();
    return c;
}

struct Checkpoint {
    std::size_t bands = 0;
    BitCost bits = 0.0;
    double compression_ratio = 0.0;
    std::size_t candidates = 0;  // processed up to this checkpoint
    std::size_t commits = 0;
    SummaryCounts counts;
    SummaryGraph summary;

    friend bool operator==(const Checkpoint &, const Checkpoint &) = default;
};

struct RunReport {
    BitCost bits_before = 0.0;
    BitCost bits_after = 0.0;
    double compression_ratio = 0.0;
    std::vector<Checkpoint> checkpoints;
    std::size_t candidates = 0;
    std::size_t proposals = 0;
    std::size_t commits = 0;
    std::size_t corrections = 0;  // positive + negative + multiplicity deltas of the final summary
    CandidateStats lsh;
    double wall_seconds = 0.0;

    const SummaryGraph &summary() const { return checkpoints.back().summary; }
};

/// Full summarization of g. Candidates found by each checkpoint are processed in sorted
/// order before its snapshot; committed merges carry over to later checkpoints.
inline RunReport run(const LabeledMultiGraph &g, const RunConfig &config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    SummaryState state(g);
    report.bits_before = state.total_bits();

    LshConfig lsh{config.rows, config.max_bands, config.seed, config.cluster_cap, config.threads};
    CandidateGenerator gen(g, lsh);
    const auto schedule = config.schedule();
    std::size_t next = 0;
    for (std::size_t b = 1; b <= config.max_bands && next < schedule.size(); ++b) {
        gen.add_band();
        if (b != schedule[next]) continue;
        ++next;
        auto batch = gen.take_new();
        remove_redundant(batch);
        sort_candidates(batch);
        report.candidates += batch.size();
        for (const auto &cand : batch) {
            for (const auto &subset : split_by_label(cand.nodes, g)) {
                auto p = propose(state, subset, config.completion);
                if (p.skipped) continue;
                ++report.proposals;
                if (p.delta_bits < 0.0) {
                    state.commit(p);
                    ++report.commits;
                    if (config.on_commit) config.on_commit(state, p);
                }
            }
        }
        Checkpoint cp;
        cp.bands = b;
        cp.bits = state.total_bits();
        cp.compression_ratio = compression_ratio(report.bits_before, cp.bits);
        cp.candidates = report.candidates;
        cp.commits = report.commits;
        cp.summary = state.snapshot();
        cp.counts = count_summary(cp.summary);
        report.checkpoints.push_back(std::move(cp));
    }
    report.bits_after = state.total_bits();
    report.compression_ratio = compression_ratio(report.bits_before, report.bits_after);
    const auto corrections = compute_corrections(g, report.summary());
    report.corrections = corrections.positive.size() + corrections.negative.size() + corrections.deltas.size();
    report.lsh = gen.stats();
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Uniform permutation of the label multiset, seeded.
inline std::vector<LabelId> shuffled_labels(const LabeledMultiGraph &g, std::uint64_t seed) {
    std::vector<LabelId> labels(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) labels[v] = g.label(v);
    std::mt19937_64 rng(seed);
    std::shuffle(labels.begin(), labels.end(), rng);
    return labels;
}

struct ShuffleEvaluation {
    double actual = 0.0;
    std::vector<double> shuffled;  // one ratio per shuffle
    double shuffled_mean = 0.0;
    std::optional<double> normalized_gain;  // unset for single-label graphs
};

/// Compression on g against the mean over label-shuffled copies of g. Shuffled runs execute
/// concurrently, up to config.threads at a time.
inline ShuffleEvaluation shuffled_label_eval(const LabeledMultiGraph &g, const RunConfig &config,
                                             std::size_t n_shuffles = 20) {
    if (n_shuffles < 1) throw Error("shuffled_label_eval: need at least one shuffle");
    ShuffleEvaluation out;
    RunConfig single = config;
    single.threads = 1;
    single.on_commit = nullptr;
    single.checkpoints.clear();
    out.actual = run(g, single).compression_ratio;
    bool multi = false;
    for (NodeId v = 1; v < g.node_count(); ++v)
        if (g.label(v) != g.label(0)) multi = true;
    if (!multi) {
        out.shuffled_mean = out.actual;
        return out;
    }
    out.shuffled.assign(n_shuffles, 0.0);
    auto one = [&](std::size_t i) {
        const auto labels = shuffled_labels(g, splitmix64(config.seed ^ (0x5348554646ULL + i)));
        out.shuffled[i] = run(relabeled(g, labels), single).compression_ratio;
    };
    const std::size_t workers = std::max<std::size_t>(1, std::min(config.threads, n_shuffles));
    for (std::size_t base = 0; base < n_shuffles; base += workers) {
        std::vector<std::future<void>> jobs;
        for (std::size_t i = base; i < std::min(n_shuffles, base + workers); ++i)
            jobs.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async, one, i));
        for (auto &j : jobs) j.get();
    }
    double sum = 0.0;
    for (double r : out.shuffled) sum += r;
    out.shuffled_mean = sum / static_cast<double>(n_shuffles);
    out.normalized_gain = normalized_gain(out.actual, out.shuffled_mean);
    return out;
}

}  // namespace lmgsum
