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

#include <random>

#include "lmgsum/merge.hpp"
#include "oracle/oracle.hpp"
#include "support/random_graphs.hpp"

namespace lmgsum {
namespace {

TEST(OracleAgreement, TotalCostOnRandomSummaries) {
    testing::RandomGraphSpec spec;
    spec.max_nodes = 150;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        spec.undirected = seed % 3 == 0;
        auto g = testing::random_graph(seed, spec);
        for (double merge : {0.0, 0.3, 0.9}) {
            auto s = testing::random_summary(g, seed * 31 + static_cast<std::uint64_t>(merge * 10), merge, 0.3);
            const double want = oracle::oracle_total_cost(g, s);
            ASSERT_NEAR(total_cost(g, s).total(), want, 1e-7 * want) << seed << " " << merge;
        }
    }
}

TEST(OracleAgreement, RepresentativeMultiplicity) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t size = std::uniform_int_distribution<std::size_t>(1, 200)(rng);
        const Multiplicity lo = std::uniform_int_distribution<Multiplicity>(1, 1000)(rng);
        const Multiplicity range = std::uniform_int_distribution<Multiplicity>(0, 1024)(rng);
        std::uniform_int_distribution<Multiplicity> pick(lo, lo + range);
        std::vector<Multiplicity> v(size);
        for (auto &m : v) m = pick(rng);
        const auto got = representative_multiplicity(v);
        const auto want = oracle::oracle_rep_mult(v);
        ASSERT_NEAR(got.cost, want.cost, 1e-9) << trial;
        ASSERT_NEAR(cost_multiplicity_diff(v, got.m), want.cost, 1e-9) << trial;
    }
}

TEST(OracleAgreement, GlyphProxyMostlyMatchesExactChoice) {
    std::mt19937_64 rng(77);
    std::size_t agree = 0, total = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const std::size_t k = std::uniform_int_distribution<std::size_t>(3, 12)(rng);
        const int shape = trial % 4;
        const double noise = std::uniform_real_distribution<double>(0.0, 0.15)(rng);
        std::bernoulli_distribution flip(noise);
        GraphBuilder b(k);
        for (NodeId u = 0; u < k; ++u)
            for (NodeId v = 0; v < k; ++v) {
                if (u == v) continue;
                const bool base = shape == 0 || (shape == 1 && v == 0) || (shape == 2 && u == 0);
                if (base != flip(rng)) b.add_edge(u, v);
            }
        auto g = std::move(b).build();
        std::vector<NodeId> nodes(k);
        std::iota(nodes.begin(), nodes.end(), NodeId{0});
        const auto d = decide_glyph(nodes, g);
        const auto winners = oracle::oracle_best_glyphs(nodes, g);
        bool ok = false;
        for (const auto &w : winners) ok |= w.glyph == d.glyph && (!is_star(w.glyph) || w.hub == d.hub);
        agree += ok;
        ++total;
    }
    EXPECT_GE(static_cast<double>(agree) / static_cast<double>(total), 0.90) << agree << "/" << total;
}

TEST(OracleAgreement, OracleSelfChecks) {
    EXPECT_EQ(oracle::oracle_rep_mult({1, 1, 10}).m, 1u);
    EXPECT_EQ(oracle::oracle_rep_mult({6}).m, 6u);
    std::vector<std::set<NodeId>> path{{1}, {0, 2}, {1}};
    EXPECT_EQ(oracle::oracle_maximal_cliques(path).size(), 2u);
    auto out = testing::perfect_instance(Glyph::OutStar, 6);
    std::vector<NodeId> nodes{0, 1, 2, 3, 4, 5};
    auto w = oracle::oracle_best_glyphs(nodes, out);
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w[0].glyph, Glyph::OutStar);
    EXPECT_EQ(w[0].hub, 0u);
}

}  // namespace
}  // namespace lmgsum
