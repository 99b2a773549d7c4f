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

// Candidate node-set generation: directed-Jaccard minhash LSH whose bands are added one at a
// time, exact verification of newly coalesced pairs into a similarity graph, and maximal
// cliques of that graph as candidates.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lmgsum/graph.hpp"

namespace lmgsum {

/// J^D(a, b) = (|N^I(a) & N^I(b)| + |N^O(a) & N^O(b)|) / (|N^I(a) | N^I(b)| + |N^O(a) | N^O(b)|).
/// Two isolated nodes have similarity 0.
inline double directed_jaccard(const LabeledMultiGraph &g, NodeId a, NodeId b) {
    auto overlap = [](std::span<const Neighbor> x, std::span<const Neighbor> y) {
        std::size_t i = 0, j = 0, common = 0;
        while (i < x.size() && j < y.size()) {
            if (x[i].node < y[j].node) {
                ++i;
            } else if (y[j].node < x[i].node) {
                ++j;
            } else {
                ++common;
                ++i;
                ++j;
            }
        }
        return common;
    };
    const std::size_t in_common = overlap(g.in(a), g.in(b));
    const std::size_t out_common = overlap(g.out(a), g.out(b));
    const std::size_t unions =
        g.directed_degree(a) + g.directed_degree(b) - in_common - out_common;
    if (unions == 0) return 0.0;
    return static_cast<double>(in_common + out_common) / static_cast<double>(unions);
}

/// Upper bound min(d, d') / max(d, d') on J^D from directed degrees alone.
inline double jaccard_degree_bound(std::size_t d1, std::size_t d2) {
    if (d1 == 0 || d2 == 0) return 0.0;
    return static_cast<double>(std::min(d1, d2)) / static_cast<double>(std::max(d1, d2));
}

/// Similarity threshold implied by b bands of r rows: (1/b)^(1/r).
inline double lsh_threshold(std::size_t bands, std::size_t rows) {
    return std::pow(1.0 / static_cast<double>(bands), 1.0 / static_cast<double>(rows));
}

// ---------------------------------------------------------------------------
// Minhash

inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Key of hash function f_j for (seed, band, row); f_j(token) = splitmix64(token ^ key).
inline constexpr std::uint64_t minhash_row_key(std::uint64_t seed, std::uint64_t band, std::uint64_t row) noexcept {
    return splitmix64(splitmix64(seed ^ 0x6d696e68617368ULL) ^ splitmix64((band << 20) ^ row));
}

/// Signature value of nodes with empty N^D; real minima are clipped below it.
inline constexpr std::uint64_t kEmptySignature = std::numeric_limits<std::uint64_t>::max();

/// r minhash values per node for one band; row-major, node v at [v*r, v*r + r).
class BandSignatures {
  public:
    BandSignatures(std::size_t nodes, std::size_t rows) : rows_(rows), values_(nodes * rows, kEmptySignature) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t node_count() const noexcept { return rows_ ? values_.size() / rows_ : 0; }
    std::span<const std::uint64_t> of(NodeId v) const { return {values_.data() + std::size_t{v} * rows_, rows_}; }
    std::span<std::uint64_t> of(NodeId v) { return {values_.data() + std::size_t{v} * rows_, rows_}; }

  private:
    std::size_t rows_;
    std::vector<std::uint64_t> values_;
};

inline BandSignatures minhash_band(const LabeledMultiGraph &g, std::size_t band_index, std::uint64_t seed,
                                   std::size_t rows, std::size_t threads = 1) {
    if (rows < 1) throw Error("minhash_band: rows must be >= 1");
    BandSignatures sig(g.node_count(), rows);
    std::vector<std::uint64_t> keys(rows);
    for (std::size_t j = 0; j < rows; ++j) keys[j] = minhash_row_key(seed, band_index, j);

    auto work = [&](NodeId begin, NodeId end) {
        for (NodeId v = begin; v < end; ++v) {
            if (g.directed_degree(v) == 0) continue;
            auto out = sig.of(v);
            auto absorb = [&](Token t) {
                for (std::size_t j = 0; j < rows; ++j) {
                    std::uint64_t h = splitmix64(t ^ keys[j]);
                    if (h == kEmptySignature) h -= 1;
                    if (h < out[j]) out[j] = h;
                }
            };
            for (const auto &n : g.in(v)) absorb(make_token(n.node, Direction::In));
            for (const auto &n : g.out(v)) absorb(make_token(n.node, Direction::Out));
        }
    };

    const std::size_t n = g.node_count();
    threads = std::max<std::size_t>(1, std::min(threads, n / 1024 + 1));
    if (threads == 1) {
        work(0, static_cast<NodeId>(n));
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n + threads - 1) / threads;
        for (std::size_t t = 0; t < threads; ++t) {
            const std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
            if (lo < hi) pool.emplace_back(work, static_cast<NodeId>(lo), static_cast<NodeId>(hi));
        }
        for (auto &th : pool) th.join();
    }
    return sig;
}

/// Groups of >= 2 non-isolated nodes with identical band signatures, each sorted by node id,
/// ordered by their smallest node.
inline std::vector<std::vector<NodeId>> signature_buckets(const LabeledMultiGraph &g, const BandSignatures &sig) {
    struct Keyed {
        std::uint64_t key;
        NodeId node;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.directed_degree(v) == 0) continue;
        std::uint64_t key = 0x243f6a8885a308d3ULL;
        for (auto h : sig.of(v)) key = splitmix64(key ^ h);
        keyed.push_back({key, v});
    }
    std::sort(keyed.begin(), keyed.end(), [&](const Keyed &a, const Keyed &b) {
        if (a.key != b.key) return a.key < b.key;
        auto sa = sig.of(a.node), sb = sig.of(b.node);
        const int cmp = std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end())   ? -1
                        : std::lexicographical_compare(sb.begin(), sb.end(), sa.begin(), sa.end()) ? 1
                                                                                                   : 0;
        if (cmp != 0) return cmp < 0;
        return a.node < b.node;
    });
    std::vector<std::vector<NodeId>> buckets;
    for (std::size_t i = 0; i < keyed.size();) {
        std::size_t j = i + 1;
        auto si = sig.of(keyed[i].node);
        while (j < keyed.size() && keyed[j].key == keyed[i].key) {
            auto sj = sig.of(keyed[j].node);
            if (!std::equal(si.begin(), si.end(), sj.begin())) break;
            ++j;
        }
        if (j - i >= 2) {
            std::vector<NodeId> bucket;
            for (std::size_t k = i; k < j; ++k) bucket.push_back(keyed[k].node);
            buckets.push_back(std::move(bucket));
        }
        i = j;
    }
    std::sort(buckets.begin(), buckets.end(), [](const auto &a, const auto &b) { return a.front() < b.front(); });
    return buckets;
}

// ---------------------------------------------------------------------------
// Clusters, pair cache, similarity graph

/// Union-find over nodes; each root keeps its members sorted by (directed degree, id).
class ClusterForest {
  public:
    explicit ClusterForest(const LabeledMultiGraph &g) : g_(&g), parent_(g.node_count()), members_(g.node_count()) {
        for (NodeId v = 0; v < g.node_count(); ++v) {
            parent_[v] = v;
            members_[v] = {v};
        }
    }

    NodeId find(NodeId v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    std::size_t size(NodeId root) const { return members_[root].size(); }
    const std::vector<NodeId> &members(NodeId root) const { return members_[root]; }

    NodeId merge(NodeId a, NodeId b) {
        a = find(a);
        b = find(b);
        if (a == b) return a;
        if (members_[a].size() < members_[b].size()) std::swap(a, b);
        std::vector<NodeId> merged;
        merged.reserve(members_[a].size() + members_[b].size());
        std::merge(members_[a].begin(), members_[a].end(), members_[b].begin(), members_[b].end(),
                   std::back_inserter(merged), [this](NodeId x, NodeId y) { return by_degree(x, y); });
        members_[a] = std::move(merged);
        members_[b].clear();
        members_[b].shrink_to_fit();
        parent_[b] = a;
        return a;
    }

    bool by_degree(NodeId x, NodeId y) const {
        const auto dx = g_->directed_degree(x), dy = g_->directed_degree(y);
        return dx != dy ? dx < dy : x < y;
    }

  private:
    const LabeledMultiGraph *g_;
    std::vector<NodeId> parent_;
    std::vector<std::vector<NodeId>> members_;
};

struct SimEdge {
    NodeId u;  // u < v
    NodeId v;
    double similarity;

    friend bool operator==(const SimEdge &, const SimEdge &) = default;
};

/// Verified pairs whose similarity is below the current threshold; largest on top.
class PairCache {
  public:
    void push(SimEdge e) { heap_.push(e); }
    std::size_t size() const noexcept { return heap_.size(); }
    bool empty() const noexcept { return heap_.empty(); }
    double top_similarity() const { return heap_.top().similarity; }

    /// Removes and returns every cached pair with similarity >= t.
    std::vector<SimEdge> pop_at_least(double t) {
        std::vector<SimEdge> out;
        while (!heap_.empty() && heap_.top().similarity >= t) {
            out.push_back(heap_.top());
            heap_.pop();
        }
        return out;
    }

  private:
    struct Less {
        bool operator()(const SimEdge &a, const SimEdge &b) const {
            if (a.similarity != b.similarity) return a.similarity < b.similarity;
            return std::tie(b.u, b.v) < std::tie(a.u, a.v);
        }
    };
    std::priority_queue<SimEdge, std::vector<SimEdge>, Less> heap_;
};

/// Undirected graph of verified similar pairs with their exact J^D, plus the size of the
/// largest clique each node has been found in.
class SimilarityGraph {
  public:
    explicit SimilarityGraph(std::size_t nodes) : adj_(nodes), max_clique_(nodes, 1) {}

    std::size_t node_count() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return weights_.size(); }
    const std::vector<NodeId> &neighbors(NodeId v) const { return adj_[v]; }

    bool has_edge(NodeId a, NodeId b) const { return weights_.count(key(a, b)) > 0; }

    double similarity(NodeId a, NodeId b) const {
        auto it = weights_.find(key(a, b));
        return it == weights_.end() ? 0.0 : it->second;
    }

    void add_edges(std::span<const SimEdge> edges) {
        std::vector<NodeId> touched;
        for (const auto &e : edges) {
            if (e.u == e.v || !weights_.emplace(key(e.u, e.v), e.similarity).second) continue;
            adj_[e.u].push_back(e.v);
            adj_[e.v].push_back(e.u);
            touched.push_back(e.u);
            touched.push_back(e.v);
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (NodeId v : touched) std::sort(adj_[v].begin(), adj_[v].end());
    }

    std::size_t max_clique_size(NodeId v) const { return max_clique_[v]; }
    void record_clique(std::span<const NodeId> clique) {
        for (NodeId v : clique) max_clique_[v] = std::max(max_clique_[v], clique.size());
    }

  private:
    static std::uint64_t key(NodeId a, NodeId b) {
        if (a > b) std::swap(a, b);
        return (std::uint64_t{a} << 32) | b;
    }

    std::vector<std::vector<NodeId>> adj_;
    std::unordered_map<std::uint64_t, double> weights_;
    std::vector<std::size_t> max_clique_;
};

// ---------------------------------------------------------------------------
// Candidates

struct CandidateSet {
    std::vector<NodeId> nodes;  // sorted, size >= 2
    double quality = 0.0;       // min pairwise J^D
    std::size_t discovered_at_band = 0;

    double score() const noexcept { return static_cast<double>(nodes.size()) * quality; }
    friend bool operator==(const CandidateSet &, const CandidateSet &) = default;
};

/// Descending size x quality; then larger sets; then lexicographically smaller member lists.
inline bool candidate_precedes(const CandidateSet &a, const CandidateSet &b) {
    if (a.score() != b.score()) return a.score() > b.score();
    if (a.nodes.size() != b.nodes.size()) return a.nodes.size() > b.nodes.size();
    return a.nodes < b.nodes;
}

inline void sort_candidates(std::vector<CandidateSet> &cands) {
    std::sort(cands.begin(), cands.end(), candidate_precedes);
}

/// Drops every candidate that is a strict subset of another candidate of equal or higher quality.
inline void remove_redundant(std::vector<CandidateSet> &cands) {
    std::unordered_map<NodeId, std::vector<std::size_t>> containing;
    for (std::size_t i = 0; i < cands.size(); ++i)
        for (NodeId v : cands[i].nodes) containing[v].push_back(i);
    std::vector<bool> drop(cands.size(), false);
    for (std::size_t i = 0; i < cands.size(); ++i) {
        const auto &c = cands[i];
        NodeId pivot = c.nodes.front();
        for (NodeId v : c.nodes)
            if (containing[v].size() < containing[pivot].size()) pivot = v;
        for (std::size_t j : containing[pivot]) {
            const auto &d = cands[j];
            if (j == i || d.nodes.size() <= c.nodes.size() || d.quality < c.quality) continue;
            if (std::includes(d.nodes.begin(), d.nodes.end(), c.nodes.begin(), c.nodes.end())) {
                drop[i] = true;
                break;
            }
        }
    }
    std::size_t w = 0;
    for (std::size_t i = 0; i < cands.size(); ++i)
        if (!drop[i]) {
            if (w != i) cands[w] = std::move(cands[i]);
            ++w;
        }
    cands.resize(w);
}

namespace detail {

inline std::vector<NodeId> sorted_intersection(const std::vector<NodeId> &a, const std::vector<NodeId> &b) {
    std::vector<NodeId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Bron-Kerbosch with Tomita pivoting; reports at most `limit` cliques.
class CliqueEnumerator {
  public:
    CliqueEnumerator(const SimilarityGraph &sim, std::size_t limit) : sim_(sim), limit_(limit) {}

    template <typename Report>
    void run(std::vector<NodeId> r, std::vector<NodeId> p, std::vector<NodeId> x, Report &&report) {
        if (reported_ >= limit_) return;
        if (p.empty()) {
            if (x.empty()) {
                std::sort(r.begin(), r.end());
                ++reported_;
                report(r);
            }
            return;
        }
        NodeId pivot = p.front();
        std::size_t best = 0;
        for (const auto *pool : {&p, &x}) {
            for (NodeId u : *pool) {
                const auto &nu = sim_.neighbors(u);
                std::size_t c = 0;
                for (NodeId w : p)
                    if (std::binary_search(nu.begin(), nu.end(), w)) ++c;
                if (c > best || (c == best && u == pivot)) {
                    best = c;
                    pivot = u;
                }
            }
        }
        const auto &np = sim_.neighbors(pivot);
        std::vector<NodeId> branch;
        for (NodeId v : p)
            if (!std::binary_search(np.begin(), np.end(), v)) branch.push_back(v);
        for (NodeId v : branch) {
            const auto &nv = sim_.neighbors(v);
            auto r2 = r;
            r2.push_back(v);
            run(std::move(r2), sorted_intersection(p, nv), sorted_intersection(x, nv), report);
            p.erase(std::find(p.begin(), p.end(), v));
            x.insert(std::upper_bound(x.begin(), x.end(), v), v);
            if (reported_ >= limit_) return;
        }
    }

  private:
    const SimilarityGraph &sim_;
    std::size_t limit_;
    std::size_t reported_ = 0;
};

}  // namespace detail

/**
 * Maximal cliques of `sim` (size >= 2) that contain at least one of `new_edges`.
 *
 * Edges whose endpoints already sit in cliques at least as large as any clique through the
 * edge could be are skipped, and every emitted clique updates the per-node maxima. Quality
 * of a clique is the minimum similarity over its edges.
 */
inline std::vector<CandidateSet> harvest_cliques(SimilarityGraph &sim, std::span<const SimEdge> new_edges,
                                                 std::size_t band, std::size_t cliques_per_edge = 256) {
    std::vector<CandidateSet> found;
    std::unordered_set<std::uint64_t> seen_hashes;
    std::vector<std::vector<NodeId>> seen;
    auto hash_of = [](const std::vector<NodeId> &c) {
        std::uint64_t h = 0x9ae16a3b2f90404fULL;
        for (NodeId v : c) h = splitmix64(h ^ v);
        return h;
    };
    for (const auto &e : new_edges) {
        if (!sim.has_edge(e.u, e.v)) continue;
        const std::size_t known = std::min(sim.max_clique_size(e.u), sim.max_clique_size(e.v));
        if (std::min(sim.neighbors(e.u).size(), sim.neighbors(e.v).size()) + 1 <= known) continue;
        auto common = detail::sorted_intersection(sim.neighbors(e.u), sim.neighbors(e.v));
        if (common.size() + 2 <= known) continue;
        detail::CliqueEnumerator bk(sim, cliques_per_edge);
        bk.run({e.u, e.v}, std::move(common), {}, [&](const std::vector<NodeId> &clique) {
            const auto h = hash_of(clique);
            if (seen_hashes.count(h) && std::find(seen.begin(), seen.end(), clique) != seen.end()) return;
            seen_hashes.insert(h);
            seen.push_back(clique);
            double quality = 1.0;
            for (std::size_t i = 0; i < clique.size(); ++i)
                for (std::size_t j = i + 1; j < clique.size(); ++j)
                    quality = std::min(quality, sim.similarity(clique[i], clique[j]));
            sim.record_clique(clique);
            found.push_back({clique, quality, band});
        });
    }
    return found;
}

struct LshConfig {
    std::size_t rows = 8;
    std::size_t max_bands = 10;
    std::uint64_t seed = 1;
    std::size_t cluster_cap = 5000;
    std::size_t threads = 1;
};

struct CandidateStats {
    std::size_t buckets = 0;
    std::size_t pairs_verified = 0;
    std::size_t pairs_pruned_by_degree = 0;
    std::size_t capped_buckets = 0;
    std::size_t cache_pops = 0;
};

/**
 * Incremental LSH driver. Each add_band() hashes one more band, coalesces clusters through
 * shared buckets, verifies newly coalesced pairs exactly, and harvests the cliques that the
 * new similarity edges create. Candidates accumulate until take_new().
 */
class CandidateGenerator {
  public:
    CandidateGenerator(const LabeledMultiGraph &g, LshConfig config)
        : g_(&g), config_(config), forest_(g), sim_(g.node_count()) {
        if (config_.rows < 1) throw Error("LSH rows must be >= 1");
        if (config_.max_bands < 1) throw Error("LSH band count must be >= 1");
        if (config_.cluster_cap < 2) throw Error("cluster cap must be >= 2");
        t_min_ = lsh_threshold(config_.max_bands, config_.rows);
    }

    std::size_t bands_done() const noexcept { return bands_; }
    double threshold() const { return bands_ == 0 ? 1.0 : lsh_threshold(bands_, config_.rows); }
    double min_threshold() const noexcept { return t_min_; }
    const SimilarityGraph &similarity_graph() const noexcept { return sim_; }
    const PairCache &pair_cache() const noexcept { return cache_; }
    const CandidateStats &stats() const noexcept { return stats_; }

    /// Hashes band (bands_done() + 1) with the configured hash family.
    std::vector<SimEdge> add_band() {
        ++bands_;
        auto sig = minhash_band(*g_, bands_, config_.seed, config_.rows, config_.threads);
        return add_band_signatures(sig);
    }

    /// Band step over externally supplied signatures (tests drive this directly).
    std::vector<SimEdge> add_band_signatures(const BandSignatures &sig) {
        if (bands_ == 0) bands_ = 1;
        const double t = threshold();
        std::vector<SimEdge> fresh;
        for (const auto &bucket : signature_buckets(*g_, sig)) {
            ++stats_.buckets;
            std::vector<NodeId> roots;
            for (NodeId v : bucket) {
                const NodeId r = forest_.find(v);
                if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
            }
            if (roots.size() < 2) continue;
            std::size_t total = 0;
            for (NodeId r : roots) total += forest_.size(r);
            if (total <= config_.cluster_cap) {
                NodeId acc = roots.front();
                for (std::size_t i = 1; i < roots.size(); ++i) {
                    verify_cross(acc, roots[i], t, fresh);
                    acc = forest_.merge(acc, roots[i]);
                }
            } else {
                ++stats_.capped_buckets;
                verify_within(bucket, t, fresh);
            }
        }
        auto popped = cache_.pop_at_least(t);
        stats_.cache_pops += popped.size();
        fresh.insert(fresh.end(), popped.begin(), popped.end());
        sim_.add_edges(fresh);
        auto cands = harvest_cliques(sim_, fresh, bands_);
        pending_.insert(pending_.end(), std::make_move_iterator(cands.begin()), std::make_move_iterator(cands.end()));
        return fresh;
    }

    /// Candidates discovered since the previous call.
    std::vector<CandidateSet> take_new() {
        std::vector<CandidateSet> out;
        out.swap(pending_);
        return out;
    }

  private:
    void verify_pair(NodeId a, NodeId b, double t, std::vector<SimEdge> &fresh) {
        if (a == b) return;
        if (a > b) std::swap(a, b);
        if (!verified_.insert((std::uint64_t{a} << 32) | b).second) return;
        if (jaccard_degree_bound(g_->directed_degree(a), g_->directed_degree(b)) < t_min_) {
            ++stats_.pairs_pruned_by_degree;
            return;
        }
        ++stats_.pairs_verified;
        const double j = directed_jaccard(*g_, a, b);
        if (j >= t)
            fresh.push_back({a, b, j});
        else if (j >= t_min_)
            cache_.push({a, b, j});
    }

    std::pair<std::size_t, std::size_t> window(std::size_t d) const {
        const auto lo = static_cast<std::size_t>(std::floor(static_cast<double>(d) * t_min_));
        const auto hi = static_cast<std::size_t>(std::ceil(static_cast<double>(d) / t_min_));
        return {lo, hi};
    }

    void verify_cross(NodeId ra, NodeId rb, double t, std::vector<SimEdge> &fresh) {
        const auto *outer = &forest_.members(ra);
        const auto *inner = &forest_.members(rb);
        if (outer->size() > inner->size()) std::swap(outer, inner);
        for (NodeId a : *outer) {
            const auto [lo, hi] = window(g_->directed_degree(a));
            auto first = std::lower_bound(inner->begin(), inner->end(), lo,
                                          [&](NodeId x, std::size_t d) { return g_->directed_degree(x) < d; });
            for (auto it = first; it != inner->end() && g_->directed_degree(*it) <= hi; ++it)
                verify_pair(a, *it, t, fresh);
        }
    }

    void verify_within(std::vector<NodeId> nodes, double t, std::vector<SimEdge> &fresh) {
        std::sort(nodes.begin(), nodes.end(), [&](NodeId x, NodeId y) { return forest_.by_degree(x, y); });
        for (std::size_t base = 0; base < nodes.size(); base += config_.cluster_cap) {
            const std::size_t end = std::min(nodes.size(), base + config_.cluster_cap);
            for (std::size_t i = base; i < end; ++i) {
                const auto hi = window(g_->directed_degree(nodes[i])).second;
                for (std::size_t j = i + 1; j < end && g_->directed_degree(nodes[j]) <= hi; ++j)
                    verify_pair(nodes[i], nodes[j], t, fresh);
            }
        }
    }

    const LabeledMultiGraph *g_;
    LshConfig config_;
    double t_min_ = 1.0;
    std::size_t bands_ = 0;
    ClusterForest forest_;
    PairCache cache_;
    SimilarityGraph sim_;
    std::unordered_set<std::uint64_t> verified_;
    std::vector<CandidateSet> pending_;
    CandidateStats stats_;
};

/// All candidates for bands 1..max_bands, non-redundant and in processing order.
inline std::vector<CandidateSet> generate_candidates(const LabeledMultiGraph &g, const LshConfig &config) {
    CandidateGenerator gen(g, config);
    for (std::size_t b = 0; b < config.max_bands; ++b) gen.add_band();
    auto cands = gen.take_new();
    remove_redundant(cands);
    sort_candidates(cands);
    return cands;
}

}  // namespace lmgsum
