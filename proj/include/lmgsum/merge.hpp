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
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include "lmgsum/encoding.hpp"
#include "lmgsum/graph.hpp"
#include "lmgsum/summary.hpp"

namespace lmgsum {

inline constexpr SuperNodeId kNoSuperNode = std::numeric_limits<SuperNodeId>::max();

/// Partition of `nodes` by label, ascending label order, singleton groups dropped.
inline std::vector<std::vector<NodeId>> split_by_label(std::span<const NodeId> nodes, const LabeledMultiGraph &g) {
    std::map<LabelId, std::vector<NodeId>> groups;
    for (NodeId v : nodes) groups[g.label(v)].push_back(v);
    std::vector<std::vector<NodeId>> out;
    for (auto &[label, members] : groups) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (members.size() >= 2) out.push_back(std::move(members));
    }
    return out;
}

struct GlyphDecision {
    Glyph glyph = Glyph::Disconnected;
    std::optional<NodeId> hub;
};

/// Structural glyph of a node set from its induced-subgraph statistics.
inline GlyphDecision decide_glyph(const InducedEdgeStats &st, std::size_t k) {
    if (k < 2) throw Error("decide_glyph: need at least 2 nodes");
    const std::size_t e = st.edge_count;
    if (2 * e >= k * (k - 1)) return {Glyph::Clique, std::nullopt};
    // Proxy correction counts: spokes missing toward/from the hub plus edges off the star.
    const std::size_t cost_in = (k - 1 - st.max_in_degree) + (e - st.max_in_degree);
    const std::size_t cost_out = (k - 1 - st.max_out_degree) + (e - st.max_out_degree);
    const bool in_ok = cost_in < e, out_ok = cost_out < e;
    if (in_ok && (!out_ok || cost_in <= cost_out)) return {Glyph::InStar, st.max_in_node};
    if (out_ok) return {Glyph::OutStar, st.max_out_node};
    return {Glyph::Disconnected, std::nullopt};
}

inline GlyphDecision decide_glyph(std::span<const NodeId> nodes, const LabeledMultiGraph &g) {
    if (nodes.size() < 2) throw Error("decide_glyph: need at least 2 nodes");
    return decide_glyph(induced_edge_stats(g, nodes), nodes.size());
}

/// Self-loop flag for a merged super-node: set when at least half the members carry one.
inline bool majority_self_loop(std::size_t loops, std::size_t members) { return 2 * loops >= members; }

struct RepresentativeMultiplicity {
    Multiplicity m = 1;
    BitCost cost = 0.0;
};

/**
 * m* minimizing sum_i ell_diff(m_i, m*) over [min, max].
 *
 * Exhaustive for ranges up to 1024, which is exact. Wider ranges use a dichotomous search
 * on the integer interval followed by a refinement pass over the most frequent values and a
 * small window around the search result.
 */
inline RepresentativeMultiplicity representative_multiplicity(std::span<const Multiplicity> mults) {
    if (mults.empty()) throw Error("representative_multiplicity: empty list");
    std::map<Multiplicity, std::uint64_t> hist;
    for (auto m : mults) {
        if (m < 1) throw Error("representative_multiplicity: multiplicities must be >= 1");
        ++hist[m];
    }
    auto cost_at = [&](Multiplicity r) {
        BitCost c = 0.0;
        for (const auto &[v, n] : hist) c += static_cast<double>(n) * ell_diff(v, r);
        return c;
    };
    RepresentativeMultiplicity best{0, std::numeric_limits<double>::infinity()};
    auto consider = [&](Multiplicity r) {
        const BitCost c = cost_at(r);
        if (c < best.cost || (c == best.cost && r < best.m)) best = {r, c};
    };
    const Multiplicity lo = hist.begin()->first, hi = hist.rbegin()->first;
    if (hi - lo <= 1024) {
        for (Multiplicity r = lo; r <= hi; ++r) consider(r);
        return best;
    }
    Multiplicity a = lo, b = hi;
    while (a < b) {
        const Multiplicity mid = a + (b - a) / 2;
        if (cost_at(mid) <= cost_at(mid + 1))
            b = mid;
        else
            a = mid + 1;
    }
    constexpr Multiplicity kWindow = 32;
    for (Multiplicity r = (a > lo + kWindow ? a - kWindow : lo); r <= std::min(hi, a + kWindow); ++r) consider(r);
    std::vector<std::pair<std::uint64_t, Multiplicity>> frequent;
    for (const auto &[v, n] : hist) frequent.push_back({n, v});
    std::sort(frequent.begin(), frequent.end(), [](const auto &x, const auto &y) {
        return x.first != y.first ? x.first > y.first : x.second < y.second;
    });
    if (frequent.size() > 64) frequent.resize(64);
    for (const auto &[n, v] : frequent) consider(v);
    return best;
}

// ---------------------------------------------------------------------------
// Bundles

struct BundleEdge {
    NodeId src;
    NodeId dst;
    Multiplicity mult;
    bool in_footprint;
};

/// Edges from super-node src to super-node dst. max_pairs is |S_src| |S_dst|; footprint_pairs
/// is the part a super-edge would cover.
struct EdgeBundle {
    SuperNodeId src = kNoSuperNode;
    SuperNodeId dst = kNoSuperNode;
    std::vector<BundleEdge> edges;
    std::uint64_t max_pairs = 0;
    std::uint64_t footprint_pairs = 0;
    BitCost link_overhead = 0.0;  // growth of the source's neighbor-subset code if linked
};

struct SuperEdgeDecision {
    bool make_super_edge = false;
    std::optional<Multiplicity> rep_mult;
    BitCost cost = 0.0;  // of the chosen branch
    BitCost cost_with = std::numeric_limits<double>::infinity();
    BitCost cost_without = 0.0;
};

inline SuperEdgeDecision decide_super_edge(const EdgeBundle &b) {
    if (b.edges.size() > b.max_pairs) throw Error("decide_super_edge: more edges than pairs");
    SuperEdgeDecision d;
    if (b.edges.empty()) {
        d.cost = d.cost_without = 1.0;
        return d;
    }
    std::vector<Multiplicity> covered;
    std::uint64_t residual = 0;
    BitCost residual_ln = 0.0, all_ln = 0.0;
    for (const auto &e : b.edges) {
        const BitCost ln = len_natural(e.mult);
        all_ln += ln;
        if (e.in_footprint) {
            covered.push_back(e.mult);
        } else {
            ++residual;
            residual_ln += ln;
        }
    }
    d.cost_without = cost_correction_set(b.edges.size(), b.max_pairs) + all_ln;
    if (!covered.empty()) {
        const Multiplicity rep = representative_multiplicity(covered).m;
        d.cost_with = b.link_overhead + len_natural(rep) + linked_bundle_cost(b.footprint_pairs, covered, rep, residual,
                                                            b.max_pairs - b.footprint_pairs, residual_ln);
        if (d.cost_with < d.cost_without) {
            d.make_super_edge = true;
            d.rep_mult = rep;
        }
    }
    d.cost = d.make_super_edge ? d.cost_with : d.cost_without;
    return d;
}

namespace detail {

/// Bundles between `v` and every other super-node it has crossing edges with: outgoing
/// bundles first (by destination id), then incoming (by source id).
template <typename OwnerOf, typename SuperOf>
std::vector<EdgeBundle> collect_bundles(const LabeledMultiGraph &g, const SuperNode &v, SuperNodeId self,
                                        OwnerOf &&owner_of, SuperOf &&super_of) {
    auto member = [&](NodeId x) { return std::binary_search(v.members.begin(), v.members.end(), x); };
    struct Tagged {
        SuperNodeId other;
        BundleEdge edge;
    };
    std::vector<Tagged> outs, ins;
    for (NodeId u : v.members) {
        for (const auto &n : g.out(u))
            if (!member(n.node)) outs.push_back({owner_of(n.node), {u, n.node, n.mult, false}});
        for (const auto &n : g.in(u))
            if (!member(n.node)) ins.push_back({owner_of(n.node), {n.node, u, n.mult, false}});
    }
    auto order = [](const Tagged &a, const Tagged &b) {
        return std::tie(a.other, a.edge.src, a.edge.dst) < std::tie(b.other, b.edge.src, b.edge.dst);
    };
    std::sort(outs.begin(), outs.end(), order);
    std::sort(ins.begin(), ins.end(), order);
    std::vector<EdgeBundle> bundles;
    auto group = [&](std::vector<Tagged> &list, bool outgoing) {
        for (std::size_t i = 0; i < list.size();) {
            const SuperNodeId z = list[i].other;
            const SuperNode &other = super_of(z);
            EdgeBundle b;
            b.src = outgoing ? self : z;
            b.dst = outgoing ? z : self;
            b.max_pairs = std::uint64_t{v.members.size()} * other.members.size();
            b.footprint_pairs = std::uint64_t{footprint_size(v)} * footprint_size(other);
            for (; i < list.size() && list[i].other == z; ++i) {
                auto e = list[i].edge;
                e.in_footprint = outgoing ? in_footprint(v, e.src) && in_footprint(other, e.dst)
                                          : in_footprint(other, e.src) && in_footprint(v, e.dst);
                b.edges.push_back(e);
            }
            bundles.push_back(std::move(b));
        }
    };
    group(outs, true);
    group(ins, false);
    return bundles;
}

}  // namespace detail

/// Bundles of `v` against the super-nodes of `s`. Members of v are taken out of whatever
/// super-nodes of s hold them; bundles use kNoSuperNode for v's own side unless v.id is
/// already one of s's super-nodes with the same members.
inline std::vector<EdgeBundle> bundle_edges(const SuperNode &v, const SummaryGraph &s, const LabeledMultiGraph &g) {
    detail::check_partition(g, s);
    const auto owner = s.owners();
    const bool existing = v.id < s.super_nodes.size() && s.super_nodes[v.id].members == v.members;
    return detail::collect_bundles(
        g, v, existing ? v.id : kNoSuperNode, [&](NodeId x) { return owner[x]; },
        [&](SuperNodeId z) -> const SuperNode & { return s.super_nodes[z]; });
}

// ---------------------------------------------------------------------------
// Incremental summary state

struct ProposedSuperEdge {
    SuperNodeId other;  // id in the evaluating SummaryState
    bool outgoing;      // new super-node -> other
    Multiplicity rep_mult;
    BitCost bits;  // L_N(m) plus the bundle's correction bits
};

struct MergeProposal {
    bool skipped = true;  // fewer than 2 unmarked nodes
    SuperNode node;       // id is assigned on commit
    std::vector<ProposedSuperEdge> super_edges;
    BitCost delta_bits = 0.0;

    BitCost local_bits = 0.0;
    BitCost unlinked_delta = 0.0;
    std::uint64_t state_version = 0;
};

/**
 * Running summary built by absorbing unmarked singletons into new super-nodes.
 *
 * The total is split into a |V_s|-dependent global part (super-node count, neighbor-count
 * fields, neighbor-subset binomials via an out-degree histogram), per-super-node local bits,
 * per-super-edge bits and unlinked bundle bits. Proposals price every changed term exactly,
 * so the running total stays equal to a from-scratch recomputation.
 */
class SummaryState {
  public:
    explicit SummaryState(const LabeledMultiGraph &g) : g_(&g), owner_(g.node_count()) {
        if (g.node_count() == 0) throw Error("SummaryState: empty graph");
        slots_.reserve(g.node_count());
        const auto base = singleton_summary(g);
        for (const auto &v : base.super_nodes) {
            owner_[v.id] = v.id;
            Slot slot;
            slot.node = v;
            slot.local_bits = local_bits(v, fit_glyph(g, v.members, v.glyph, v.hub, v.self_loop));
            slots_.push_back(std::move(slot));
        }
        alive_ = g.node_count();
        hist_[0] = alive_;
        for (NodeId a = 0; a < g.node_count(); ++a)
            for (const auto &n : g.out(a))
                if (n.node != a) unlinked_bits_ += unlinked_bundle_cost(1, 1, len_natural(n.mult));
        local_sum_ = 0.0;
        for (const auto &s : slots_) local_sum_ += s.local_bits;
        global_bits_ = global_bits(alive_, hist_, {});
        total_ = global_bits_ + local_sum_ + unlinked_bits_;
    }

    const LabeledMultiGraph &graph() const noexcept { return *g_; }
    BitCost total_bits() const noexcept { return total_; }
    std::size_t super_node_count() const noexcept { return alive_; }
    std::uint64_t version() const noexcept { return version_; }
    SuperNodeId owner(NodeId v) const { return owner_[v]; }
    bool is_merged(NodeId v) const { return slots_[owner_[v]].node.members.size() > 1; }
    const SuperNode &super_node(SuperNodeId id) const { return slots_[id].node; }

    MergeProposal evaluate(std::span<const NodeId> subset) const {
        MergeProposal p;
        p.state_version = version_;
        std::vector<NodeId> members;
        for (NodeId v : subset) {
            if (v >= g_->node_count()) throw Error("evaluate: node out of range");
            if (!is_merged(v)) members.push_back(v);
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (members.size() < 2) return p;
        const LabelId label = g_->label(members.front());
        for (NodeId v : members)
            if (g_->label(v) != label) throw Error("evaluate: candidate subset mixes labels");
        auto member = [&](NodeId x) { return std::binary_search(members.begin(), members.end(), x); };
        const std::size_t k = members.size();

        // Terms that disappear with the absorbed singletons.
        BitCost old_local = 0.0, old_links = 0.0;
        std::map<SuperNodeId, long long> deg_change;
        std::map<std::size_t, long long> hist_change;
        struct Part {
            SuperNodeId a, b;
            Multiplicity mult;
        };
        std::vector<Part> old_unlinked_parts;
        for (NodeId u : members) {
            const Slot &s = slots_[u];
            old_local += s.local_bits;
            hist_change[s.out.size()] -= 1;
            for (const auto &[z, link] : s.out) old_links += link.bits;
            for (SuperNodeId z : s.in) {
                old_links += slots_[z].out.at(u).bits;
                deg_change[z] -= 1;
            }
            for (const auto &n : g_->out(u)) {
                if (n.node == u) continue;
                const SuperNodeId z = owner_[n.node];
                if (!s.out.count(z)) old_unlinked_parts.push_back({u, z, n.mult});
            }
            for (const auto &n : g_->in(u)) {
                if (n.node == u || member(n.node)) continue;
                const SuperNodeId z = owner_[n.node];
                if (!slots_[z].out.count(u)) old_unlinked_parts.push_back({z, u, n.mult});
            }
        }
        const BitCost old_unlinked = sum_unlinked(old_unlinked_parts);

        // The replacement super-node.
        const auto stats = induced_edge_stats(*g_, members);
        const auto decision = decide_glyph(stats, k);
        SuperNode &x = p.node;
        x.id = kNoSuperNode;
        x.label = label;
        x.members = members;
        x.glyph = decision.glyph;
        x.hub = decision.hub;
        x.self_loop = majority_self_loop(stats.self_loop_count, k);
        const auto fit = fit_glyph(*g_, x.members, x.glyph, x.hub, x.self_loop);
        x.rep_mult = fit.covered.empty() ? 1 : representative_multiplicity(fit.covered).m;
        p.local_bits = local_bits(x, fit);

        BitCost new_links = 0.0, new_unlinked = 0.0;
        long long x_degree = 0;
        const std::size_t n_after = alive_ - k + 1;
        auto overhead = [&](long long degree) {
            const auto d = static_cast<std::uint64_t>(degree);
            return d + 1 > n_after ? std::numeric_limits<double>::infinity()
                                   : log2_binomial(n_after, d + 1) - log2_binomial(n_after, d);
        };
        auto bundles = detail::collect_bundles(
            *g_, x, kNoSuperNode, [&](NodeId v) { return owner_[v]; },
            [&](SuperNodeId z) -> const SuperNode & { return slots_[z].node; });
        for (auto &b : bundles) {
            const bool outgoing = b.src == kNoSuperNode;
            const SuperNodeId other = outgoing ? b.dst : b.src;
            b.link_overhead =
                overhead(outgoing ? x_degree : static_cast<long long>(slots_[other].out.size()) + deg_change[other]);
            auto d = decide_super_edge(b);
            if (d.make_super_edge) {
                d.cost -= b.link_overhead;  // the global term carries the neighbor-subset code
                p.super_edges.push_back({other, outgoing, *d.rep_mult, d.cost});
                new_links += d.cost;
                if (outgoing)
                    ++x_degree;
                else
                    deg_change[other] += 1;
            } else {
                new_unlinked += d.cost;
            }
        }
        for (const auto &[z, change] : deg_change) {
            if (change == 0) continue;
            const auto d = slots_[z].out.size();
            hist_change[d] -= 1;
            hist_change[static_cast<std::size_t>(static_cast<long long>(d) + change)] += 1;
        }
        hist_change[static_cast<std::size_t>(x_degree)] += 1;

        const BitCost global_delta = global_bits(n_after, hist_, hist_change) - global_bits_;
        p.unlinked_delta = new_unlinked - old_unlinked;
        p.delta_bits = global_delta + (p.local_bits - old_local) + (new_links - old_links) + p.unlinked_delta;
        p.skipped = false;
        return p;
    }

    /// Applies a proposal evaluated against the current state. Requires a negative delta.
    SuperNodeId commit(const MergeProposal &p) {
        if (p.skipped) throw Error("commit: proposal was skipped");
        if (p.state_version != version_) throw Error("commit: proposal is stale");
        if (!(p.delta_bits < 0.0)) throw Error("commit: proposal does not reduce the description length");
        const auto id = static_cast<SuperNodeId>(slots_.size());
        auto adjust = [&](std::size_t before, std::size_t after) {
            if (before == after) return;
            if (--hist_[before] == 0) hist_.erase(before);
            ++hist_[after];
        };
        for (NodeId u : p.node.members) {
            Slot &s = slots_[u];
            local_sum_ -= s.local_bits;
            for (const auto &[z, link] : s.out) slots_[z].in.erase(u);
            for (SuperNodeId z : s.in) {
                auto &out = slots_[z].out;
                const auto before = out.size();
                out.erase(u);
                adjust(before, out.size());
            }
            if (--hist_[s.out.size()] == 0) hist_.erase(s.out.size());
            s.out.clear();
            s.in.clear();
            s.alive = false;
            owner_[u] = id;
        }
        Slot x;
        x.node = p.node;
        x.node.id = id;
        x.local_bits = p.local_bits;
        local_sum_ += x.local_bits;
        slots_.push_back(std::move(x));
        for (const auto &e : p.super_edges) {
            const Link link{e.rep_mult, e.bits};
            if (e.outgoing) {
                slots_[id].out.emplace(e.other, link);
                slots_[e.other].in.insert(id);
            } else {
                auto &out = slots_[e.other].out;
                const auto before = out.size();
                out.emplace(id, link);
                adjust(before, out.size());
                slots_[id].in.insert(e.other);
            }
        }
        ++hist_[slots_[id].out.size()];
        alive_ = alive_ - p.node.members.size() + 1;
        unlinked_bits_ += p.unlinked_delta;
        global_bits_ = global_bits(alive_, hist_, {});
        total_ += p.delta_bits;
        ++version_;
        return id;
    }

    /// Total recomputed from the bookkeeping (not from the graph).
    BitCost bookkept_bits() const {
        BitCost links = 0.0;
        for (const auto &s : slots_)
            if (s.alive)
                for (const auto &[z, link] : s.out) links += link.bits;
        return global_bits(alive_, hist_, {}) + local_sum_ + links + unlinked_bits_;
    }

    /// Current summary with compact ids: surviving singletons in node order, then merged
    /// super-nodes in commit order.
    SummaryGraph snapshot() const {
        SummaryGraph s;
        s.node_count = g_->node_count();
        s.label_count = g_->label_count();
        s.node_names = g_->node_names();
        s.label_names = g_->label_names();
        std::vector<SuperNodeId> compact(slots_.size(), kNoSuperNode);
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            if (!slots_[i].alive) continue;
            compact[i] = static_cast<SuperNodeId>(s.super_nodes.size());
            SuperNode v = slots_[i].node;
            v.id = compact[i];
            s.super_nodes.push_back(std::move(v));
        }
        for (std::size_t i = 0; i < slots_.size(); ++i) {
            if (!slots_[i].alive) continue;
            for (const auto &[z, link] : slots_[i].out) s.super_edges.push_back({compact[i], compact[z], link.rep_mult});
        }
        std::sort(s.super_edges.begin(), s.super_edges.end(),
                  [](const SuperEdge &a, const SuperEdge &b) { return std::tie(a.src, a.dst) < std::tie(b.src, b.dst); });
        return s;
    }

  private:
    struct Link {
        Multiplicity rep_mult;
        BitCost bits;
    };
    struct Slot {
        SuperNode node;
        bool alive = true;
        BitCost local_bits = 0.0;
        std::map<SuperNodeId, Link> out;
        std::set<SuperNodeId> in;
    };

    // Terms of one super-node that do not depend on |V_s|: label and glyph codes, size,
    // multiplicity, node map and the within-super-node bundle.
    BitCost local_bits(const SuperNode &v, const GlyphFit &fit) const {
        return std::log2(static_cast<double>(g_->label_count())) + std::log2(static_cast<double>(kGlyphCount)) +
               len_natural(v.members.size()) + len_natural(v.rep_mult) +
               cost_node_map(v.members.size(), g_->node_count(), is_star(v.glyph)) + glyph_bundle_cost(fit, v.rep_mult);
    }

    BitCost global_bits(std::size_t n, const std::map<std::size_t, std::size_t> &hist,
                        const std::map<std::size_t, long long> &change) const {
        BitCost bits = len_natural(n) + len_natural(g_->label_count()) +
                       static_cast<double>(n) * std::log2(static_cast<double>(n) + 1.0);
        auto term = [&](std::size_t d, long long count) {
            if (d == 0 || count == 0) return;
            if (count < 0) throw Error("SummaryState: negative degree histogram entry");
            bits += static_cast<double>(count) * log2_binomial(n, d);
        };
        auto it = hist.begin();
        auto jt = change.begin();
        while (it != hist.end() || jt != change.end()) {
            if (jt == change.end() || (it != hist.end() && it->first < jt->first)) {
                term(it->first, static_cast<long long>(it->second));
                ++it;
            } else if (it == hist.end() || jt->first < it->first) {
                term(jt->first, jt->second);
                ++jt;
            } else {
                term(it->first, static_cast<long long>(it->second) + jt->second);
                ++it;
                ++jt;
            }
        }
        return bits;
    }

    template <typename Part>
    BitCost sum_unlinked(std::vector<Part> &parts) const {
        std::sort(parts.begin(), parts.end(), [](const Part &x, const Part &y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
        BitCost bits = 0.0;
        for (std::size_t i = 0; i < parts.size();) {
            std::size_t j = i;
            BitCost ln = 0.0;
            for (; j < parts.size() && parts[j].a == parts[i].a && parts[j].b == parts[i].b; ++j) ln += len_natural(parts[j].mult);
            const std::uint64_t max_pairs =
                std::uint64_t{slots_[parts[i].a].node.members.size()} * slots_[parts[i].b].node.members.size();
            bits += unlinked_bundle_cost(j - i, max_pairs, ln);
            i = j;
        }
        return bits;
    }

    const LabeledMultiGraph *g_;
    std::vector<Slot> slots_;
    std::vector<SuperNodeId> owner_;
    std::size_t alive_ = 0;
    std::map<std::size_t, std::size_t> hist_;  // out-degree -> live super-nodes
    BitCost local_sum_ = 0.0;
    BitCost unlinked_bits_ = 0.0;
    BitCost global_bits_ = 0.0;
    BitCost total_ = 0.0;
    std::uint64_t version_ = 0;
};

/// Unmarked node of the subset's label, outside it, adjacent to the most subset members
/// (at least 2 and at least half of them). Ties go to the smallest id.
inline std::optional<NodeId> completion_hub(const SummaryState &state, std::span<const NodeId> subset) {
    const auto &g = state.graph();
    std::vector<NodeId> members;
    for (NodeId v : subset)
        if (!state.is_merged(v)) members.push_back(v);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) return std::nullopt;
    const LabelId label = g.label(members.front());
    std::unordered_map<NodeId, std::size_t> counts;
    std::vector<NodeId> seen;
    for (NodeId u : members) {
        seen.clear();
        for (const auto &n : g.out(u)) seen.push_back(n.node);
        for (const auto &n : g.in(u)) seen.push_back(n.node);
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        for (NodeId w : seen) {
            if (std::binary_search(members.begin(), members.end(), w) || state.is_merged(w) || g.label(w) != label)
                continue;
            ++counts[w];
        }
    }
    std::optional<NodeId> best;
    std::size_t best_count = 0;
    for (const auto &[w, c] : counts)
        if (c > best_count || (c == best_count && best && w < *best)) {
            best = w;
            best_count = c;
        }
    if (!best || best_count < 2 || 2 * best_count < members.size()) return std::nullopt;
    return best;
}

/// Unmarked nodes of v's label, outside v, that fit v's structure: star edges to or from
/// the hub, or at least |S_v| directed edges into a clique.
inline std::vector<NodeId> completion_nodes(const SummaryState &state, const SuperNode &v) {
    const auto &g = state.graph();
    auto eligible = [&](NodeId w) {
        return !std::binary_search(v.members.begin(), v.members.end(), w) && !state.is_merged(w) &&
               g.label(w) == v.label;
    };
    std::vector<NodeId> extra;
    if (is_star(v.glyph)) {
        const auto spokes = v.glyph == Glyph::InStar ? g.in(*v.hub) : g.out(*v.hub);
        for (const auto &n : spokes)
            if (n.node != *v.hub && eligible(n.node)) extra.push_back(n.node);
    } else if (v.glyph == Glyph::Clique) {
        std::unordered_map<NodeId, std::size_t> counts;
        for (NodeId u : v.members) {
            for (const auto &n : g.out(u))
                if (eligible(n.node)) ++counts[n.node];
            for (const auto &n : g.in(u))
                if (eligible(n.node)) ++counts[n.node];
        }
        for (const auto &[w, c] : counts)
            if (c >= v.members.size()) extra.push_back(w);
        std::sort(extra.begin(), extra.end());
    }
    return extra;
}

/// Proposal for one label-homogeneous subset. With completion, the subset extended by its
/// completion hub, and each of those extended by the nodes fitting its proposed structure,
/// are priced too; the cheapest proposal is returned.
inline MergeProposal propose(const SummaryState &state, std::span<const NodeId> subset, bool completion = true) {
    auto base = state.evaluate(subset);
    if (!completion) return base;
    std::vector<MergeProposal> tried;
    tried.push_back(std::move(base));
    if (const auto hub = completion_hub(state, subset)) {
        std::vector<NodeId> extended(subset.begin(), subset.end());
        extended.push_back(*hub);
        tried.push_back(state.evaluate(extended));
    }
    for (std::size_t i = 0, n = tried.size(); i < n; ++i) {
        if (tried[i].skipped) continue;
        const auto extra = completion_nodes(state, tried[i].node);
        if (extra.empty()) continue;
        std::vector<NodeId> extended = tried[i].node.members;
        extended.insert(extended.end(), extra.begin(), extra.end());
        tried.push_back(state.evaluate(extended));
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < tried.size(); ++i) {
        if (tried[i].skipped) continue;
        if (tried[best].skipped || tried[i].delta_bits < tried[best].delta_bits) best = i;
    }
    return std::move(tried[best]);
}

}  // namespace lmgsum
