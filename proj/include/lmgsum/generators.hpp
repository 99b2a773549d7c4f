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

// Synthetic graphs: planted glyph structures with ground truth, k-out preferential
// attachment, and edge sampling.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <unordered_set>
#include <vector>

#include "lmgsum/graph.hpp"
#include "lmgsum/summary.hpp"

namespace lmgsum {

struct PlantedConfig {
    std::size_t cliques = 5;
    std::size_t in_stars = 5;
    std::size_t out_stars = 5;
    std::size_t min_size = 10;
    std::size_t max_size = 20;
    double noise_fraction = 0.05;  // noise edges as a fraction of planted edges
    Multiplicity max_mult = 3;     // per-group multiplicity drawn from [1, max_mult]
    std::uint64_t seed = 1;
};

struct PlantedGroup {
    Glyph glyph = Glyph::Clique;
    std::vector<NodeId> members;  // sorted
    std::optional<NodeId> hub;
    Multiplicity mult = 1;
};

struct PlantedGraph {
    LabeledMultiGraph graph;
    std::vector<PlantedGroup> groups;
    std::size_t planted_edges = 0;
    std::size_t noise_edges = 0;
};

/// Disjoint planted cliques and stars on shuffled node ids, one label, plus m=1 noise edges
/// between uniformly drawn non-adjacent pairs.
inline PlantedGraph planted_graph(const PlantedConfig &cfg) {
    if (cfg.min_size < 2 || cfg.max_size < cfg.min_size) throw Error("planted_graph: bad size range");
    if (cfg.max_mult < 1) throw Error("planted_graph: max_mult must be >= 1");
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> size_dist(cfg.min_size, cfg.max_size);
    std::uniform_int_distribution<Multiplicity> mult_dist(1, cfg.max_mult);

    std::vector<std::pair<Glyph, std::size_t>> shapes;
    for (std::size_t i = 0; i < cfg.cliques; ++i) shapes.push_back({Glyph::Clique, size_dist(rng)});
    for (std::size_t i = 0; i < cfg.in_stars; ++i) shapes.push_back({Glyph::InStar, size_dist(rng)});
    for (std::size_t i = 0; i < cfg.out_stars; ++i) shapes.push_back({Glyph::OutStar, size_dist(rng)});
    std::size_t n = 0;
    for (const auto &s : shapes) n += s.second;
    if (n < 2) throw Error("planted_graph: nothing to plant");
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), NodeId{0});
    std::shuffle(perm.begin(), perm.end(), rng);

    PlantedGraph out;
    GraphBuilder b(n);
    std::unordered_set<std::uint64_t> present;
    auto add = [&](NodeId u, NodeId v, Multiplicity m) {
        b.add_edge(u, v, m);
        present.insert((std::uint64_t{u} << 32) | v);
    };
    std::size_t next = 0;
    for (const auto &[glyph, size] : shapes) {
        PlantedGroup grp;
        grp.glyph = glyph;
        grp.mult = mult_dist(rng);
        grp.members.assign(perm.begin() + static_cast<std::ptrdiff_t>(next),
                           perm.begin() + static_cast<std::ptrdiff_t>(next + size));
        next += size;
        if (glyph == Glyph::Clique) {
            for (NodeId u : grp.members)
                for (NodeId v : grp.members)
                    if (u != v) add(u, v, grp.mult);
            out.planted_edges += size * (size - 1);
        } else {
            const NodeId hub = grp.members.front();
            grp.hub = hub;
            for (NodeId u : grp.members) {
                if (u == hub) continue;
                if (glyph == Glyph::InStar)
                    add(u, hub, grp.mult);
                else
                    add(hub, u, grp.mult);
            }
            out.planted_edges += size - 1;
        }
        std::sort(grp.members.begin(), grp.members.end());
        out.groups.push_back(std::move(grp));
    }
    const auto target = static_cast<std::size_t>(std::llround(cfg.noise_fraction * static_cast<double>(out.planted_edges)));
    std::uniform_int_distribution<NodeId> node_dist(0, static_cast<NodeId>(n - 1));
    for (std::size_t attempts = 0; out.noise_edges < target && attempts < 100 * (target + 1); ++attempts) {
        const NodeId u = node_dist(rng), v = node_dist(rng);
        if (u == v || present.count((std::uint64_t{u} << 32) | v)) continue;
        add(u, v, 1);
        ++out.noise_edges;
    }
    out.graph = std::move(b).build();
    return out;
}

inline double member_jaccard(const std::vector<NodeId> &a, const std::vector<NodeId> &b) {
    std::vector<NodeId> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    const std::size_t unions = a.size() + b.size() - common.size();
    return unions == 0 ? 0.0 : static_cast<double>(common.size()) / static_cast<double>(unions);
}

/// A planted group counts as recovered when some super-node has its glyph, member-set
/// Jaccard >= min_jaccard and, for stars, the planted hub.
inline bool group_recovered(const PlantedGroup &grp, const SummaryGraph &s, double min_jaccard = 0.8) {
    for (const auto &v : s.super_nodes) {
        if (v.glyph != grp.glyph) continue;
        if (is_star(grp.glyph) && v.hub != grp.hub) continue;
        if (member_jaccard(v.members, grp.members) >= min_jaccard) return true;
    }
    return false;
}

inline std::size_t count_recovered(const std::vector<PlantedGroup> &groups, const SummaryGraph &s,
                                   double min_jaccard = 0.8) {
    std::size_t c = 0;
    for (const auto &grp : groups) c += group_recovered(grp, s, min_jaccard) ? 1 : 0;
    return c;
}

/// Preferential-attachment k-out graph: node v links to min(k, v) distinct earlier nodes,
/// each drawn with probability proportional to in-degree + 1.
inline LabeledMultiGraph kout_graph(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (n < 1 || k < 1) throw Error("kout_graph: need n >= 1 and k >= 1");
    std::mt19937_64 rng(seed);
    GraphBuilder b(n);
    std::vector<NodeId> pool;  // node v appears in-degree(v) + 1 times
    pool.reserve(n * (k + 1));
    std::vector<NodeId> picked;
    for (NodeId v = 0; v < n; ++v) {
        picked.clear();
        if (v <= k) {
            for (NodeId u = 0; u < v; ++u) picked.push_back(u);
        } else {
            std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
            while (picked.size() < k) {
                const NodeId u = pool[dist(rng)];
                if (std::find(picked.begin(), picked.end(), u) == picked.end()) picked.push_back(u);
            }
        }
        for (NodeId u : picked) {
            b.add_edge(v, u);
            pool.push_back(u);
        }
        pool.push_back(v);
    }
    return std::move(b).build();
}

/// Keeps each edge independently with probability `fraction`; nodes and labels are kept.
inline LabeledMultiGraph sample_edges(const LabeledMultiGraph &g, double fraction, std::uint64_t seed) {
    if (fraction < 0.0 || fraction > 1.0) throw Error("sample_edges: fraction must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(fraction);
    GraphBuilder b(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) b.set_label(v, g.label(v));
    for (const auto &e : g.edges())
        if (keep(rng)) b.add_edge(e.src, e.dst, e.mult);
    b.set_node_names(g.node_names());
    b.set_label_names(g.label_names());
    b.set_label_count(g.label_count());
    return std::move(b).build();
}

}  // namespace lmgsum
