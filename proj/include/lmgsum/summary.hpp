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
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lmgsum/encoding.hpp"
#include "lmgsum/graph.hpp"

namespace lmgsum {

using SuperNodeId = std::uint32_t;

enum class Glyph : std::uint8_t { Clique, InStar, OutStar, Disconnected, Singleton };

/// |M|: the four structural glyphs plus the unmerged singleton.
inline constexpr std::size_t kGlyphCount = 5;

constexpr bool is_star(Glyph g) noexcept { return g == Glyph::InStar || g == Glyph::OutStar; }

constexpr std::string_view to_string(Glyph g) noexcept {
    switch (g) {
        case Glyph::Clique: return "clique";
        case Glyph::InStar: return "in_star";
        case Glyph::OutStar: return "out_star";
        case Glyph::Disconnected: return "disconnected";
        case Glyph::Singleton: return "singleton";
    }
    return "?";
}

inline Glyph glyph_from_string(std::string_view s) {
    for (Glyph g : {Glyph::Clique, Glyph::InStar, Glyph::OutStar, Glyph::Disconnected, Glyph::Singleton})
        if (to_string(g) == s) return g;
    throw Error("unknown glyph '" + std::string(s) + "'");
}

struct SuperNode {
    SuperNodeId id = 0;
    LabelId label = 0;
    std::vector<NodeId> members;  // sorted, non-empty
    Glyph glyph = Glyph::Singleton;
    std::optional<NodeId> hub;
    Multiplicity rep_mult = 1;
    bool self_loop = false;

    friend bool operator==(const SuperNode &, const SuperNode &) = default;
};

struct SuperEdge {
    SuperNodeId src = 0;
    SuperNodeId dst = 0;
    Multiplicity rep_mult = 1;

    friend bool operator==(const SuperEdge &, const SuperEdge &) = default;
};

/// Nodes a super-edge attaches to on this side: the hub for stars, every member otherwise.
inline std::size_t footprint_size(const SuperNode &v) { return is_star(v.glyph) ? 1 : v.members.size(); }

inline bool in_footprint(const SuperNode &v, NodeId member) { return !is_star(v.glyph) || *v.hub == member; }

/**
 * The summary (super-)graph G_s = {V_s, E_s}.
 *
 * Super-node ids equal their index in super_nodes. Member sets partition the node range
 * [0, node_count). Node and label names are carried along for export and reconstruction.
 */
struct SummaryGraph {
    std::size_t node_count = 0;
    std::size_t label_count = 1;
    std::vector<SuperNode> super_nodes;
    std::vector<SuperEdge> super_edges;  // sorted by (src, dst)
    std::vector<std::string> node_names;
    std::vector<std::string> label_names;

    /// Throws Error describing the first violated invariant.
    void validate() const {
        if (label_count < 1) throw Error("summary: label_count must be >= 1");
        std::vector<bool> covered(node_count, false);
        for (std::size_t i = 0; i < super_nodes.size(); ++i) {
            const auto &v = super_nodes[i];
            const std::string where = "summary: super-node " + std::to_string(i) + ": ";
            if (v.id != i) throw Error(where + "id does not match its index");
            if (v.members.empty()) throw Error(where + "no members");
            if (!std::is_sorted(v.members.begin(), v.members.end()) ||
                std::adjacent_find(v.members.begin(), v.members.end()) != v.members.end())
                throw Error(where + "members must be sorted and unique");
            for (NodeId u : v.members) {
                if (u >= node_count) throw Error(where + "member out of range");
                if (covered[u]) throw Error(where + "member " + std::to_string(u) + " belongs to two super-nodes");
                covered[u] = true;
            }
            if (v.label >= label_count) throw Error(where + "label out of range");
            if (v.rep_mult < 1) throw Error(where + "rep_mult must be >= 1");
            if ((v.glyph == Glyph::Singleton) != (v.members.size() == 1))
                throw Error(where + "singleton glyph iff exactly one member");
            if (is_star(v.glyph)) {
                if (!v.hub || !std::binary_search(v.members.begin(), v.members.end(), *v.hub))
                    throw Error(where + "star hub must be a member");
            } else if (v.hub) {
                throw Error(where + "only stars have a hub");
            }
        }
        for (std::size_t u = 0; u < node_count; ++u)
            if (!covered[u]) throw Error("summary: node " + std::to_string(u) + " not covered by any super-node");
        for (std::size_t i = 0; i < super_edges.size(); ++i) {
            const auto &e = super_edges[i];
            if (e.src >= super_nodes.size() || e.dst >= super_nodes.size())
                throw Error("summary: super-edge references unknown super-node");
            if (e.src == e.dst) throw Error("summary: super-edge loops on one super-node");
            if (e.rep_mult < 1) throw Error("summary: super-edge rep_mult must be >= 1");
            if (i > 0 && std::tie(super_edges[i - 1].src, super_edges[i - 1].dst) >= std::tie(e.src, e.dst))
                throw Error("summary: super-edges must be sorted and unique");
        }
    }

    /// Super-node id owning each original node.
    std::vector<SuperNodeId> owners() const {
        std::vector<SuperNodeId> owner(node_count, 0);
        for (const auto &v : super_nodes)
            for (NodeId u : v.members) owner[u] = v.id;
        return owner;
    }

    std::vector<LabelId> node_labels() const {
        std::vector<LabelId> labels(node_count, 0);
        for (const auto &v : super_nodes)
            for (NodeId u : v.members) labels[u] = v.label;
        return labels;
    }

    std::size_t out_degree(SuperNodeId v) const {
        auto [lo, hi] = out_range(v);
        return static_cast<std::size_t>(hi - lo);
    }

    std::pair<std::vector<SuperEdge>::const_iterator, std::vector<SuperEdge>::const_iterator> out_range(
        SuperNodeId v) const {
        auto lo = std::lower_bound(super_edges.begin(), super_edges.end(), v,
                                   [](const SuperEdge &e, SuperNodeId x) { return e.src < x; });
        auto hi = std::upper_bound(super_edges.begin(), super_edges.end(), v,
                                   [](SuperNodeId x, const SuperEdge &e) { return x < e.src; });
        return {lo, hi};
    }

    friend bool operator==(const SummaryGraph &, const SummaryGraph &) = default;
};

/// The all-singleton summary of g: one SINGLETON super-node per node, no super-edges.
/// The self-loop flag and representative multiplicity follow the node's own self-loop.
inline SummaryGraph singleton_summary(const LabeledMultiGraph &g) {
    SummaryGraph s;
    s.node_count = g.node_count();
    s.label_count = g.label_count();
    s.node_names = g.node_names();
    s.label_names = g.label_names();
    s.super_nodes.reserve(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        SuperNode sn;
        sn.id = v;
        sn.label = g.label(v);
        sn.members = {v};
        const Multiplicity loop = g.multiplicity(v, v);
        sn.self_loop = loop > 0;
        sn.rep_mult = loop > 0 ? loop : 1;
        s.super_nodes.push_back(std::move(sn));
    }
    return s;
}

// ---------------------------------------------------------------------------
// Decompression

/// Expanded edges of super-node v (glyph + self-loops), each carrying m(v).
template <typename Sink>
void expand_super_node(const SuperNode &v, Sink &&sink) {
    const Multiplicity m = v.rep_mult;
    switch (v.glyph) {
        case Glyph::Clique:
            for (NodeId a : v.members)
                for (NodeId b : v.members)
                    if (a != b) sink(a, b, m);
            break;
        case Glyph::InStar:
            for (NodeId a : v.members)
                if (a != *v.hub) sink(a, *v.hub, m);
            break;
        case Glyph::OutStar:
            for (NodeId b : v.members)
                if (b != *v.hub) sink(*v.hub, b, m);
            break;
        case Glyph::Disconnected:
        case Glyph::Singleton: break;
    }
    if (v.self_loop)
        for (NodeId a : v.members) sink(a, a, m);
}

template <typename Sink>
void expand_super_edge(const SuperNode &src, const SuperNode &dst, Multiplicity m, Sink &&sink) {
    for (NodeId a : src.members) {
        if (!in_footprint(src, a)) continue;
        for (NodeId b : dst.members)
            if (in_footprint(dst, b)) sink(a, b, m);
    }
}

/// dec(G_s): deterministic expansion of every super-node and super-edge.
inline LabeledMultiGraph decompress(const SummaryGraph &s) {
    s.validate();
    GraphBuilder b(s.node_count);
    for (const auto &v : s.super_nodes)
        for (NodeId u : v.members) b.set_label(u, v.label);
    auto sink = [&](NodeId a, NodeId c, Multiplicity m) { b.add_edge(a, c, m); };
    for (const auto &v : s.super_nodes) expand_super_node(v, sink);
    for (const auto &e : s.super_edges) expand_super_edge(s.super_nodes[e.src], s.super_nodes[e.dst], e.rep_mult, sink);
    b.set_node_names(s.node_names);
    b.set_label_names(s.label_names);
    b.set_label_count(s.label_count);
    return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Corrections

/// Where a positive correction is accounted.
enum class BundleKind : std::uint8_t {
    Glyph,      // inside one super-node, E^max = S_v x S_v
    SuperEdge,  // covered by a super-edge footprint (only negatives and deltas land here)
    Residual,   // between linked super-nodes but outside the star-restricted footprint
    Unlinked,   // between super-nodes with no super-edge, E^max = S_v x S_z
};

constexpr std::string_view to_string(BundleKind k) noexcept {
    switch (k) {
        case BundleKind::Glyph: return "glyph";
        case BundleKind::SuperEdge: return "super_edge";
        case BundleKind::Residual: return "residual";
        case BundleKind::Unlinked: return "unlinked";
    }
    return "?";
}

struct PositiveCorrection {
    NodeId src;
    NodeId dst;
    Multiplicity mult;
    BundleKind bundle;

    friend bool operator==(const PositiveCorrection &, const PositiveCorrection &) = default;
};

struct NegativeCorrection {
    NodeId src;
    NodeId dst;
    BundleKind bundle;

    friend bool operator==(const NegativeCorrection &, const NegativeCorrection &) = default;
};

struct MultiplicityDelta {
    NodeId src;
    NodeId dst;
    std::int64_t delta;  // true - representative, never zero

    friend bool operator==(const MultiplicityDelta &, const MultiplicityDelta &) = default;
};

struct CorrectionSet {
    std::vector<PositiveCorrection> positive;
    std::vector<NegativeCorrection> negative;
    std::vector<MultiplicityDelta> deltas;

    bool empty() const noexcept { return positive.empty() && negative.empty() && deltas.empty(); }
    friend bool operator==(const CorrectionSet &, const CorrectionSet &) = default;
};

namespace detail {

inline std::uint64_t pair_key(std::uint64_t a, std::uint64_t b) noexcept { return (a << 32) | b; }

inline std::unordered_map<std::uint64_t, std::size_t> super_edge_index(const SummaryGraph &s) {
    std::unordered_map<std::uint64_t, std::size_t> index;
    index.reserve(s.super_edges.size() * 2 + 1);
    for (std::size_t i = 0; i < s.super_edges.size(); ++i)
        index.emplace(pair_key(s.super_edges[i].src, s.super_edges[i].dst), i);
    return index;
}

inline void check_partition(const LabeledMultiGraph &g, const SummaryGraph &s) {
    s.validate();
    if (g.node_count() != s.node_count) throw Error("summary does not partition the graph's node set");
    for (const auto &v : s.super_nodes)
        for (NodeId u : v.members)
            if (g.label(u) != v.label) throw Error("summary label disagrees with graph label of node " + std::to_string(u));
}

}  // namespace detail

inline CorrectionSet compute_corrections(const LabeledMultiGraph &g, const SummaryGraph &s) {
    detail::check_partition(g, s);
    const auto owner = s.owners();
    const auto links = detail::super_edge_index(s);
    auto kind_of = [&](NodeId a, NodeId b) {
        const SuperNodeId oa = owner[a], ob = owner[b];
        if (oa == ob) return BundleKind::Glyph;
        if (links.count(detail::pair_key(oa, ob))) {
            return in_footprint(s.super_nodes[oa], a) && in_footprint(s.super_nodes[ob], b) ? BundleKind::SuperEdge
                                                                                             : BundleKind::Residual;
        }
        return BundleKind::Unlinked;
    };

    const auto expected = decompress(s).edges();
    const auto actual = g.edges();
    CorrectionSet c;
    std::size_t i = 0, j = 0;
    auto key = [](const Edge &e) { return std::pair(e.src, e.dst); };
    while (i < expected.size() || j < actual.size()) {
        if (j == actual.size() || (i < expected.size() && key(expected[i]) < key(actual[j]))) {
            c.negative.push_back({expected[i].src, expected[i].dst, kind_of(expected[i].src, expected[i].dst)});
            ++i;
        } else if (i == expected.size() || key(actual[j]) < key(expected[i])) {
            c.positive.push_back({actual[j].src, actual[j].dst, actual[j].mult, kind_of(actual[j].src, actual[j].dst)});
            ++j;
        } else {
            if (expected[i].mult != actual[j].mult)
                c.deltas.push_back({actual[j].src, actual[j].dst,
                                    static_cast<std::int64_t>(actual[j].mult) - static_cast<std::int64_t>(expected[i].mult)});
            ++i;
            ++j;
        }
    }
    return c;
}

/// dec(G_s) with corrections applied. Equals the graph the corrections were computed against.
inline LabeledMultiGraph reconstruct(const SummaryGraph &s, const CorrectionSet &c) {
    auto edges = decompress(s).edges();
    auto check = [&](NodeId a, NodeId b) {
        if (a >= s.node_count || b >= s.node_count) throw Error("correction references a node outside the summary");
    };
    auto find = [&](NodeId a, NodeId b) {
        return std::lower_bound(edges.begin(), edges.end(), Edge{a, b, 0},
                                [](const Edge &x, const Edge &y) { return std::tie(x.src, x.dst) < std::tie(y.src, y.dst); });
    };
    for (const auto &d : c.deltas) {
        check(d.src, d.dst);
        auto it = find(d.src, d.dst);
        if (it == edges.end() || it->src != d.src || it->dst != d.dst)
            throw Error("multiplicity delta on an edge absent from the decompressed graph");
        const auto corrected = static_cast<std::int64_t>(it->mult) + d.delta;
        if (corrected < 1) throw Error("multiplicity delta yields a non-positive multiplicity");
        it->mult = static_cast<Multiplicity>(corrected);
    }
    for (const auto &n : c.negative) {
        check(n.src, n.dst);
        auto it = find(n.src, n.dst);
        if (it == edges.end() || it->src != n.src || it->dst != n.dst)
            throw Error("negative correction on an edge absent from the decompressed graph");
        it->mult = 0;
    }
    GraphBuilder b(s.node_count);
    const auto labels = s.node_labels();
    for (NodeId u = 0; u < s.node_count; ++u) b.set_label(u, labels[u]);
    for (const auto &e : edges)
        if (e.mult > 0) b.add_edge(e.src, e.dst, e.mult);
    for (const auto &p : c.positive) {
        check(p.src, p.dst);
        auto it = find(p.src, p.dst);
        if (it != edges.end() && it->src == p.src && it->dst == p.dst && it->mult > 0)
            throw Error("positive correction on an edge already present in the decompressed graph");
        b.add_edge(p.src, p.dst, p.mult);
    }
    b.set_node_names(s.node_names);
    b.set_label_names(s.label_names);
    b.set_label_count(s.label_count);
    return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Costs

/// How well a glyph explains the edges inside its own member set (self-loops included).
struct GlyphFit {
    std::uint64_t flips = 0;      // positions in S_v x S_v where expansion and graph disagree
    std::uint64_t max_pairs = 0;  // |S_v|^2
    std::vector<Multiplicity> covered;  // true multiplicities of correctly expanded edges
    BitCost uncovered_bits = 0.0;       // L_N(m) of every positive correction
};

/// `members` must be sorted. The hub is required for stars and ignored otherwise.
inline GlyphFit fit_glyph(const LabeledMultiGraph &g, std::span<const NodeId> members, Glyph glyph,
                          std::optional<NodeId> hub, bool self_loop) {
    GlyphFit fit;
    const std::uint64_t k = members.size();
    fit.max_pairs = k * k;
    auto member = [&](NodeId x) { return std::binary_search(members.begin(), members.end(), x); };
    auto expected = [&](NodeId a, NodeId b) {
        if (a == b) return self_loop;
        switch (glyph) {
            case Glyph::Clique: return true;
            case Glyph::InStar: return b == *hub;
            case Glyph::OutStar: return a == *hub;
            default: return false;
        }
    };
    std::uint64_t matched = 0;
    for (NodeId a : members) {
        for (const auto &n : g.out(a)) {
            if (!member(n.node)) continue;
            if (expected(a, n.node)) {
                fit.covered.push_back(n.mult);
                ++matched;
            } else {
                ++fit.flips;
                fit.uncovered_bits += len_natural(n.mult);
            }
        }
    }
    std::uint64_t expected_count = self_loop ? k : 0;
    switch (glyph) {
        case Glyph::Clique: expected_count += k * (k - 1); break;
        case Glyph::InStar:
        case Glyph::OutStar: expected_count += k - 1; break;
        default: break;
    }
    fit.flips += expected_count - matched;
    return fit;
}

inline BitCost glyph_bundle_cost(const GlyphFit &fit, Multiplicity rep_mult) {
    BitCost bits = cost_correction_set(fit.flips, fit.max_pairs) + fit.uncovered_bits;
    if (!fit.covered.empty()) bits += cost_multiplicity_diff(fit.covered, rep_mult);
    return bits;
}

/// Correction bits of a super-edge bundle: negatives inside the footprint, multiplicity
/// deltas of the covered edges, and a positive-only residual bundle outside the footprint.
inline BitCost linked_bundle_cost(std::uint64_t footprint_pairs, std::span<const Multiplicity> covered,
                                  Multiplicity rep_mult, std::uint64_t residual_count, std::uint64_t residual_pairs,
                                  BitCost residual_ln_bits) {
    BitCost bits = cost_correction_set(footprint_pairs - covered.size(), footprint_pairs);
    if (!covered.empty()) bits += cost_multiplicity_diff(covered, rep_mult);
    if (residual_count > 0) bits += cost_correction_set(residual_count, residual_pairs) + residual_ln_bits;
    return bits;
}

/// Bits for the edges between two super-nodes with no super-edge. Pairs without edges
/// are not materialized as bundles and cost nothing.
inline BitCost unlinked_bundle_cost(std::uint64_t edge_count, std::uint64_t max_pairs, BitCost ln_bits) {
    if (edge_count == 0) return 0.0;
    return cost_correction_set(edge_count, max_pairs) + ln_bits;
}

/// L_SNODE(v). `out_mults` are the representative multiplicities of v's out-super-edges.
inline BitCost cost_supernode(const SuperNode &v, std::size_t summary_size, std::size_t label_count,
                              std::size_t glyph_count, std::span<const Multiplicity> out_mults) {
    if (out_mults.size() > summary_size) throw std::domain_error("cost_supernode: more neighbors than super-nodes");
    BitCost bits = std::log2(static_cast<double>(label_count)) + std::log2(static_cast<double>(glyph_count)) +
                   len_natural(v.members.size()) + len_natural(v.rep_mult) +
                   std::log2(static_cast<double>(summary_size) + 1.0) + log2_binomial(summary_size, out_mults.size());
    for (auto m : out_mults) bits += len_natural(m);
    return bits;
}

/// L(G_s).
inline BitCost cost_summary(const SummaryGraph &s) {
    if (s.super_nodes.empty()) throw Error("cost_summary: empty summary");
    const std::size_t n = s.super_nodes.size();
    BitCost bits = len_natural(n) + len_natural(s.label_count);
    std::vector<Multiplicity> mults;
    for (const auto &v : s.super_nodes) {
        mults.clear();
        auto [lo, hi] = s.out_range(v.id);
        for (auto it = lo; it != hi; ++it) mults.push_back(it->rep_mult);
        bits += cost_supernode(v, n, s.label_count, kGlyphCount, mults);
    }
    return bits;
}

/// L(G | dec(G_s)), with its per-super-node and per-super-edge parts.
struct CorrectionCost {
    BitCost map_bits = 0.0;        // sum of L_MAP(v)
    BitCost glyph_bits = 0.0;      // within-super-node bundles
    BitCost super_edge_bits = 0.0; // super-edge bundles (footprint + residual)
    BitCost unlinked_bits = 0.0;   // bundles between unlinked super-node pairs
    std::vector<BitCost> per_super_node;  // L_MAP(v) + glyph bundle of v
    std::vector<BitCost> per_super_edge;  // in super_edges order

    BitCost total() const noexcept { return map_bits + glyph_bits + super_edge_bits + unlinked_bits; }
};

inline CorrectionCost correction_cost(const LabeledMultiGraph &g, const SummaryGraph &s) {
    detail::check_partition(g, s);
    const auto owner = s.owners();
    const auto links = detail::super_edge_index(s);
    CorrectionCost cost;
    cost.per_super_node.resize(s.super_nodes.size());
    for (const auto &v : s.super_nodes) {
        const BitCost map = cost_node_map(v.members.size(), s.node_count, is_star(v.glyph));
        const BitCost glyph = glyph_bundle_cost(fit_glyph(g, v.members, v.glyph, v.hub, v.self_loop), v.rep_mult);
        cost.map_bits += map;
        cost.glyph_bits += glyph;
        cost.per_super_node[v.id] = map + glyph;
    }

    struct LinkAcc {
        std::vector<Multiplicity> covered;
        std::uint64_t residual = 0;
        BitCost residual_ln = 0.0;
    };
    struct PairAcc {
        std::uint64_t count = 0;
        BitCost ln = 0.0;
    };
    std::vector<LinkAcc> link_acc(s.super_edges.size());
    std::unordered_map<std::uint64_t, PairAcc> unlinked;
    for (NodeId a = 0; a < g.node_count(); ++a) {
        const SuperNodeId oa = owner[a];
        for (const auto &n : g.out(a)) {
            const SuperNodeId ob = owner[n.node];
            if (oa == ob) continue;
            const auto key = detail::pair_key(oa, ob);
            if (auto it = links.find(key); it != links.end()) {
                auto &acc = link_acc[it->second];
                if (in_footprint(s.super_nodes[oa], a) && in_footprint(s.super_nodes[ob], n.node)) {
                    acc.covered.push_back(n.mult);
                } else {
                    ++acc.residual;
                    acc.residual_ln += len_natural(n.mult);
                }
            } else {
                auto &acc = unlinked[key];
                ++acc.count;
                acc.ln += len_natural(n.mult);
            }
        }
    }
    cost.per_super_edge.resize(s.super_edges.size());
    for (std::size_t i = 0; i < s.super_edges.size(); ++i) {
        const auto &e = s.super_edges[i];
        const auto &src = s.super_nodes[e.src];
        const auto &dst = s.super_nodes[e.dst];
        const std::uint64_t all_pairs = std::uint64_t{src.members.size()} * dst.members.size();
        const std::uint64_t fp_pairs = std::uint64_t{footprint_size(src)} * footprint_size(dst);
        const auto &acc = link_acc[i];
        const BitCost bits =
            linked_bundle_cost(fp_pairs, acc.covered, e.rep_mult, acc.residual, all_pairs - fp_pairs, acc.residual_ln);
        cost.per_super_edge[i] = bits;
        cost.super_edge_bits += bits;
    }
    // Sum unlinked bundles in key order so the result does not depend on hash iteration order.
    std::vector<std::pair<std::uint64_t, PairAcc>> pairs(unlinked.begin(), unlinked.end());
    std::sort(pairs.begin(), pairs.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
    for (const auto &[key, acc] : pairs) {
        const auto a = static_cast<SuperNodeId>(key >> 32);
        const auto b = static_cast<SuperNodeId>(key & 0xffffffffu);
        const std::uint64_t max_pairs = std::uint64_t{s.super_nodes[a].members.size()} * s.super_nodes[b].members.size();
        cost.unlinked_bits += unlinked_bundle_cost(acc.count, max_pairs, acc.ln);
    }
    return cost;
}

/// Two-part description length L(G_s) + L(G | dec(G_s)).
inline CostBreakdown total_cost(const LabeledMultiGraph &g, const SummaryGraph &s) {
    return {cost_summary(s), correction_cost(g, s).total()};
}

}  // namespace lmgsum
