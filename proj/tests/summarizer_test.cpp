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
#include <gtest/gtest.h>

#include <algorithm>

#include "lmgsum/generators.hpp"
#include "lmgsum/io.hpp"
#include "lmgsum/summarizer.hpp"
#include "support/random_graphs.hpp"

namespace lmgsum {
namespace {

TEST(CompressionRatio, Formula) {
    EXPECT_EQ(compression_ratio(100, 100), 0.0);
    EXPECT_DOUBLE_EQ(compression_ratio(100, 60), 0.4);
    EXPECT_THROW(compression_ratio(0, 0), Error);
    EXPECT_THROW(compression_ratio(-1, 0), Error);
}

TEST(NormalizedGain, Formula) {
    EXPECT_NEAR(normalized_gain(0.32, 0.28), 0.0556, 1e-4);
    EXPECT_NEAR(normalized_gain(0.47, 0.36), 0.172, 1e-3);
    EXPECT_EQ(normalized_gain(0.3, 0.3), 0.0);
    EXPECT_THROW(normalized_gain(0.5, 1.0), Error);
}

TEST(RunConfigTest, ValidateAndSchedule) {
    RunConfig c;
    EXPECT_NO_THROW(c.validate());
    EXPECT_EQ(c.schedule(), std::vector<std::size_t>{10});
    c.checkpoints = {5, 2, 10, 5};
    EXPECT_EQ(c.schedule(), (std::vector<std::size_t>{2, 5, 10}));
    c.checkpoints = {11};
    EXPECT_THROW(c.validate(), Error);
    c = {};
    c.rows = 0;
    EXPECT_THROW(c.validate(), Error);
    c = {};
    c.max_bands = 0;
    EXPECT_THROW(c.validate(), Error);
}

TEST(Run, EdgelessGraphHasNoCommits) {
    GraphBuilder b(10);
    auto g = std::move(b).build();
    auto r = run(g, {});
    EXPECT_EQ(r.commits, 0u);
    EXPECT_EQ(r.compression_ratio, 0.0);
    EXPECT_EQ(r.summary(), singleton_summary(g));
}

TEST(Run, PlantedStructuresAreRecovered) {
    PlantedConfig cfg;
    cfg.seed = 3;
    auto pg = planted_graph(cfg);
    auto r = run(pg.graph, {});
    const auto &s = r.summary();
    EXPECT_GE(count_recovered(pg.groups, s), 12u);
    EXPECT_GE(r.compression_ratio, 0.30);
    EXPECT_LE(r.bits_after, r.bits_before);
    EXPECT_EQ(reconstruct(s, compute_corrections(pg.graph, s)), pg.graph);
    EXPECT_NEAR(r.bits_after, total_cost(pg.graph, s).total(), 1e-6);
}

TEST(Run, SameSeedIsDeterministic) {
    PlantedConfig cfg;
    cfg.seed = 9;
    auto g = planted_graph(cfg).graph;
    RunConfig c;
    c.checkpoints = {2, 5, 10};
    auto a = run(g, c), b = run(g, c);
    auto ja = report_to_json(a), jb = report_to_json(b);
    ja.erase("wall_seconds");
    jb.erase("wall_seconds");
    EXPECT_EQ(ja, jb);
    ASSERT_EQ(a.checkpoints.size(), b.checkpoints.size());
    for (std::size_t i = 0; i < a.checkpoints.size(); ++i) EXPECT_EQ(a.checkpoints[i], b.checkpoints[i]);
    c.threads = 4;
    auto t = run(g, c);
    EXPECT_EQ(t.summary(), a.summary());
}

TEST(Run, CheckpointsAreMonotone) {
    PlantedConfig cfg;
    cfg.seed = 4;
    auto g = planted_graph(cfg).graph;
    RunConfig c;
    c.checkpoints = {1, 2, 3, 5, 8, 10};
    auto r = run(g, c);
    ASSERT_EQ(r.checkpoints.size(), 6u);
    for (std::size_t i = 1; i < r.checkpoints.size(); ++i) {
        EXPECT_LE(r.checkpoints[i].bits, r.checkpoints[i - 1].bits);
        EXPECT_GE(r.checkpoints[i].commits, r.checkpoints[i - 1].commits);
        EXPECT_EQ(r.checkpoints[i].bands, c.checkpoints[i]);
    }
    for (const auto &cp : r.checkpoints) {
        EXPECT_EQ(cp.counts, count_summary(cp.summary));
        EXPECT_EQ(reconstruct(cp.summary, compute_corrections(g, cp.summary)), g);
    }
    EXPECT_EQ(r.bits_after, r.checkpoints.back().bits);
}

TEST(Run, OnCommitSeesEveryCommit) {
    PlantedConfig cfg;
    auto g = planted_graph(cfg).graph;
    RunConfig c;
    std::size_t seen = 0;
    double last = 0.0;
    c.on_commit = [&](const SummaryState &st, const MergeProposal &p) {
        ++seen;
        EXPECT_LT(p.delta_bits, 0.0);
        if (seen > 1) EXPECT_LT(st.total_bits(), last);
        last = st.total_bits();
    };
    auto r = run(g, c);
    EXPECT_EQ(seen, r.commits);
    EXPECT_GT(seen, 0u);
}

TEST(Run, RandomGraphsAreLossless) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        testing::RandomGraphSpec spec;
        spec.max_nodes = 200;
        spec.undirected = seed % 2 == 0;
        auto g = testing::random_graph(seed, spec);
        RunConfig c;
        c.seed = seed;
        auto r = run(g, c);
        ASSERT_GE(r.compression_ratio, 0.0);
        ASSERT_EQ(reconstruct(r.summary(), compute_corrections(g, r.summary())), g) << seed;
    }
}

TEST(ShuffledLabels, PreservesMultiset) {
    auto g = testing::random_graph(5);
    auto a = shuffled_labels(g, 1);
    std::vector<LabelId> orig(g.labels().begin(), g.labels().end());
    auto sa = a, so = orig;
    std::sort(sa.begin(), sa.end());
    std::sort(so.begin(), so.end());
    EXPECT_EQ(sa, so);
    EXPECT_EQ(shuffled_labels(g, 1), a);
}

TEST(ShuffledEval, SingleLabelGivesNoGain) {
    PlantedConfig cfg;
    auto g = planted_graph(cfg).graph;
    auto ev = shuffled_label_eval(g, {}, 3);
    EXPECT_FALSE(ev.normalized_gain);
    EXPECT_TRUE(ev.shuffled.empty());
}

TEST(ShuffledEval, LabelsAlignedWithStructureBeatShuffles) {
    PlantedConfig cfg;
    cfg.seed = 2;
    auto pg = planted_graph(cfg);
    std::vector<LabelId> labels(pg.graph.node_count(), 0);
    for (std::size_t i = 0; i < pg.groups.size(); ++i)
        for (NodeId v : pg.groups[i].members) labels[v] = static_cast<LabelId>(i % 3);
    auto g = relabeled(pg.graph, labels);
    RunConfig c;
    auto ev = shuffled_label_eval(g, c, 4);
    ASSERT_TRUE(ev.normalized_gain);
    EXPECT_EQ(ev.shuffled.size(), 4u);
    EXPECT_GT(*ev.normalized_gain, 0.0);
    c.threads = 4;
    auto par = shuffled_label_eval(g, c, 4);
    EXPECT_EQ(par.shuffled, ev.shuffled);
    EXPECT_THROW(shuffled_label_eval(g, c, 0), Error);
}

}  // namespace
}  // namespace lmgsum
