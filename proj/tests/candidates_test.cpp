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

#include <cmath>
#include <random>
#include <set>

#include "lmgsum/candidates.hpp"
#include "lmgsum/generators.hpp"
#include "oracle/oracle.hpp"

namespace lmgsum {
namespace {

// B, C, D -> A -> E, F
LabeledMultiGraph fan() { return load_graph_from_strings("B A\nC A\nD A\nA E\nA F\n"); }

TEST(DirectedJaccard, FanExample) {
    auto g = fan();
    // ids in order of appearance: B0 A1 C2 D3 E4 F5
    EXPECT_DOUBLE_EQ(directed_jaccard(g, 0, 2), 1.0);
    EXPECT_DOUBLE_EQ(directed_jaccard(g, 2, 3), 1.0);
    EXPECT_DOUBLE_EQ(directed_jaccard(g, 4, 5), 1.0);
    EXPECT_DOUBLE_EQ(directed_jaccard(g, 0, 4), 0.0);
}

TEST(DirectedJaccard, IsolatedPairIsZero) {
    GraphBuilder b(2);
    EXPECT_EQ(directed_jaccard(std::move(b).build(), 0, 1), 0.0);
}

TEST(DirectedJaccard, SymmetricGraphEqualsUndirectedJaccard) {
    std::mt19937_64 rng(3);
    const NodeId n = 30;
    std::vector<std::set<NodeId>> adj(n);
    GraphBuilder b(n);
    std::uniform_int_distribution<NodeId> node(0, n - 1);
    for (int i = 0; i < 90; ++i) {
        NodeId u = node(rng), v = node(rng);
        if (u == v || adj[u].count(v)) continue;
        adj[u].insert(v);
        adj[v].insert(u);
        b.add_edge(u, v, 2);
        b.add_edge(v, u, 2);
    }
    auto g = std::move(b).build();
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) {
            std::size_t inter = 0;
            for (NodeId x : adj[u]) inter += adj[v].count(x);
            const std::size_t uni = adj[u].size() + adj[v].size() - inter;
            const double ju = uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
            ASSERT_NEAR(directed_jaccard(g, u, v), ju, 1e-12);
        }
}

TEST(DegreeBound, Values) {
    EXPECT_DOUBLE_EQ(jaccard_degree_bound(3, 100), 0.03);
    EXPECT_LT(jaccard_degree_bound(3, 100), 0.3);
    EXPECT_DOUBLE_EQ(jaccard_degree_bound(5, 5), 1.0);
}

TEST(LshThreshold, Values) {
    for (std::size_t r : {1u, 4u, 8u}) EXPECT_DOUBLE_EQ(lsh_threshold(1, r), 1.0);
    EXPECT_NEAR(lsh_threshold(10, 8), std::pow(0.1, 0.125), 1e-12);
    EXPECT_NEAR(lsh_threshold(10, 8), 0.750, 5e-4);
}

TEST(Minhash, IdenticalNeighborhoodsCollide) {
    auto g = fan();
    for (std::size_t band = 1; band <= 5; ++band) {
        auto sig = minhash_band(g, band, 9, 8);
        EXPECT_TRUE(std::ranges::equal(sig.of(0), sig.of(2)));
        EXPECT_TRUE(std::ranges::equal(sig.of(4), sig.of(5)));
    }
}

TEST(Minhash, ThreadedMatchesSerial) {
    auto g = kout_graph(2000, 5, 4);
    auto a = minhash_band(g, 3, 11, 8, 1);
    auto b = minhash_band(g, 3, 11, 8, 4);
    for (NodeId v = 0; v < g.node_count(); ++v) ASSERT_TRUE(std::ranges::equal(a.of(v), b.of(v)));
}

TEST(Minhash, EmptyNeighborhoodUsesSentinelAndNoBucket) {
    GraphBuilder b(3);
    b.add_edge(0, 1);
    auto g = std::move(b).build();
    auto sig = minhash_band(g, 1, 1, 4);
    for (auto x : sig.of(2)) EXPECT_EQ(x, kEmptySignature);
    for (const auto &bucket : signature_buckets(g, sig))
        for (NodeId v : bucket) EXPECT_NE(v, 2u);
}

// a -> {0,1,2}, b -> {1,2,3}: J^D = 2/4.
LabeledMultiGraph half_pair() {
    GraphBuilder b(6);
    for (NodeId t : {2u, 3u, 4u}) b.add_edge(0, t);
    for (NodeId t : {3u, 4u, 5u}) b.add_edge(1, t);
    return std::move(b).build();
}

TEST(Minhash, SingleRowCollisionRateMatchesJaccard) {
    auto g = half_pair();
    ASSERT_DOUBLE_EQ(directed_jaccard(g, 0, 1), 0.5);
    int hits = 0;
    for (std::size_t band = 1; band <= 1000; ++band) {
        auto sig = minhash_band(g, band, 5, 1);
        hits += sig.of(0)[0] == sig.of(1)[0];
    }
    EXPECT_NEAR(hits / 1000.0, 0.5, 0.05);
}

TEST(Minhash, FourRowSignatureCollisionRate) {
    auto g = half_pair();
    int hits = 0;
    for (std::size_t band = 1; band <= 1000; ++band) {
        auto sig = minhash_band(g, band, 5, 4);
        hits += std::ranges::equal(sig.of(0), sig.of(1));
    }
    EXPECT_NEAR(hits / 1000.0, 0.0625, 0.02);
}

TEST(PairCacheTest, SurfacesWhenThresholdDrops) {
    PairCache cache;
    cache.push({1, 2, 0.6});
    cache.push({3, 4, 0.4});
    EXPECT_TRUE(cache.pop_at_least(0.75).empty());
    EXPECT_DOUBLE_EQ(cache.top_similarity(), 0.6);
    auto out = cache.pop_at_least(0.6);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0], (SimEdge{1, 2, 0.6}));
    EXPECT_EQ(cache.size(), 1u);
}

TEST(ClusterForestTest, MergeKeepsDegreeOrder) {
    auto g = kout_graph(50, 3, 1);
    ClusterForest f(g);
    const NodeId r = f.merge(f.merge(3, 40), 10);
    EXPECT_EQ(f.find(3), f.find(10));
    EXPECT_EQ(f.find(40), r);
    const auto &m = f.members(r);
    ASSERT_EQ(m.size(), 3u);
    for (std::size_t i = 1; i < m.size(); ++i) EXPECT_LE(g.directed_degree(m[i - 1]), g.directed_degree(m[i]));
}

std::vector<SimEdge> all_edges(const std::vector<std::set<NodeId>> &adj) {
    std::vector<SimEdge> out;
    for (NodeId u = 0; u < adj.size(); ++u)
        for (NodeId v : adj[u])
            if (u < v) out.push_back({u, v, 1.0});
    return out;
}

TEST(HarvestCliques, Triangle) {
    SimilarityGraph sim(3);
    std::vector<SimEdge> e{{0, 1, 0.9}, {1, 2, 0.8}, {0, 2, 1.0}};
    sim.add_edges(e);
    auto c = harvest_cliques(sim, e, 1);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].nodes, (std::vector<NodeId>{0, 1, 2}));
    EXPECT_DOUBLE_EQ(c[0].quality, 0.8);
    EXPECT_TRUE(harvest_cliques(sim, {}, 2).empty());
}

TEST(HarvestCliques, CompleteGraphGivesOneSet) {
    std::vector<std::set<NodeId>> adj(5);
    for (NodeId u = 0; u < 5; ++u)
        for (NodeId v = 0; v < 5; ++v)
            if (u != v) adj[u].insert(v);
    SimilarityGraph sim(5);
    auto e = all_edges(adj);
    sim.add_edges(e);
    auto c = harvest_cliques(sim, e, 1);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].nodes.size(), 5u);
}

TEST(HarvestCliques, AgreesWithExhaustiveEnumeration) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 12)(rng);
        const double p = std::uniform_real_distribution<double>(0.2, 0.9)(rng);
        std::bernoulli_distribution coin(p);
        std::vector<std::set<NodeId>> adj(n);
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v)
                if (coin(rng)) {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
        const auto truth = oracle::oracle_maximal_cliques(adj);
        SimilarityGraph sim(n);
        auto e = all_edges(adj);
        sim.add_edges(e);
        auto found = harvest_cliques(sim, e, 1);
        std::set<std::vector<NodeId>> got;
        for (const auto &c : found) {
            ASSERT_TRUE(truth.count(c.nodes)) << "not a maximal clique, trial " << trial;
            ASSERT_TRUE(got.insert(c.nodes).second) << "duplicate, trial " << trial;
        }
        // Cliques that were pruned are never larger than what both ends of some edge already hold.
        for (const auto &c : truth) {
            if (got.count(c)) continue;
            bool dominated = false;
            for (std::size_t i = 0; i < c.size() && !dominated; ++i)
                for (std::size_t j = i + 1; j < c.size() && !dominated; ++j)
                    dominated = sim.max_clique_size(c[i]) >= c.size() && sim.max_clique_size(c[j]) >= c.size();
            ASSERT_TRUE(dominated) << "trial " << trial;
        }
        // Every largest clique is found.
        std::size_t largest = 0;
        for (const auto &c : truth) largest = std::max(largest, c.size());
        bool has_largest = false;
        for (const auto &c : got) has_largest |= c.size() == largest;
        if (!truth.empty()) {
            EXPECT_TRUE(has_largest) << "trial " << trial;
        }
    }
}

TEST(RemoveRedundant, DropsDominatedSubsets) {
    std::vector<CandidateSet> c{{{1, 2, 3}, 0.9, 1}, {{1, 2}, 0.8, 1}, {{2, 3}, 0.95, 1}, {{4, 5}, 0.5, 1}};
    remove_redundant(c);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[0].nodes, (std::vector<NodeId>{1, 2, 3}));
    EXPECT_EQ(c[1].nodes, (std::vector<NodeId>{2, 3}));  // higher quality than its superset
    EXPECT_EQ(c[2].nodes, (std::vector<NodeId>{4, 5}));
}

TEST(SortCandidates, ScoreThenSizeThenMembers) {
    std::vector<CandidateSet> c{{{7, 8}, 1.0, 1}, {{1, 2, 3, 4}, 0.5, 1}, {{1, 2, 3}, 0.9, 1}, {{5, 6}, 1.0, 1}};
    sort_candidates(c);
    EXPECT_EQ(c[0].nodes.size(), 3u);      // 2.7
    EXPECT_EQ(c[1].nodes.size(), 4u);      // 2.0, bigger than the 2.0 pairs
    EXPECT_EQ(c[2].nodes.front(), 5u);     // tie broken lexicographically
    EXPECT_EQ(c[3].nodes.front(), 7u);
}

TEST(GenerateCandidates, IdenticalAdjacencyGivesOneCandidate) {
    GraphBuilder b(7);
    for (NodeId v = 0; v < 6; ++v) b.add_edge(v, 6);
    auto c = generate_candidates(std::move(b).build(), {});
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].nodes, (std::vector<NodeId>{0, 1, 2, 3, 4, 5}));
    EXPECT_DOUBLE_EQ(c[0].quality, 1.0);
    EXPECT_EQ(c[0].discovered_at_band, 1u);
}

TEST(GenerateCandidates, PlantedGroupsAppear) {
    PlantedConfig cfg;
    cfg.cliques = 1;
    cfg.in_stars = 1;
    cfg.out_stars = 0;
    cfg.min_size = cfg.max_size = 10;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        cfg.seed = seed;
        auto pg = planted_graph(cfg);
        auto cands = generate_candidates(pg.graph, {});
        for (const auto &grp : pg.groups) {
            std::vector<NodeId> core = grp.members;
            if (grp.hub) std::erase(core, *grp.hub);
            double best = 0.0;
            for (const auto &c : cands) {
                std::size_t inside = 0;
                for (NodeId v : c.nodes) inside += std::binary_search(core.begin(), core.end(), v);
                best = std::max(best, static_cast<double>(inside) / static_cast<double>(core.size()));
            }
            // Noisy spokes fall below the threshold, so stars only need a seed for completion.
            EXPECT_GE(best, grp.glyph == Glyph::Clique ? 0.5 : 0.3) << to_string(grp.glyph) << " seed " << seed;
        }
    }
}

TEST(CandidateGeneratorTest, ThresholdFallsWithBands) {
    auto g = kout_graph(300, 4, 2);
    CandidateGenerator gen(g, {.rows = 4, .max_bands = 6});
    EXPECT_DOUBLE_EQ(gen.threshold(), 1.0);
    double last = 1.0;
    for (int b = 0; b < 6; ++b) {
        gen.add_band();
        EXPECT_LE(gen.threshold(), last);
        last = gen.threshold();
        EXPECT_GE(last, gen.min_threshold() - 1e-12);
    }
    EXPECT_NEAR(gen.threshold(), gen.min_threshold(), 1e-12);
    for (const auto &c : gen.take_new()) {
        for (std::size_t i = 0; i < c.nodes.size(); ++i)
            for (std::size_t j = i + 1; j < c.nodes.size(); ++j)
                ASSERT_GE(directed_jaccard(g, c.nodes[i], c.nodes[j]), gen.min_threshold() - 1e-12);
    }
    EXPECT_TRUE(gen.take_new().empty());
}

TEST(CandidateGeneratorTest, RejectsBadConfig) {
    auto g = fan();
    EXPECT_THROW(CandidateGenerator(g, {.rows = 0}), Error);
    EXPECT_THROW(CandidateGenerator(g, {.max_bands = 0}), Error);
    EXPECT_THROW(CandidateGenerator(g, {.cluster_cap = 1}), Error);
}

TEST(CandidateGeneratorTest, ClusterCapStillFindsIdenticalGroup) {
    GraphBuilder b(21);
    for (NodeId v = 0; v < 20; ++v) b.add_edge(v, 20);
    auto c = generate_candidates(std::move(b).build(), {.cluster_cap = 4});
    ASSERT_FALSE(c.empty());
    bool whole = false;
    for (const auto &x : c) whole |= x.nodes.size() >= 4;
    EXPECT_TRUE(whole);
}

}  // namespace
}  // namespace lmgsum
