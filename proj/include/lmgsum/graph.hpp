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
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lmgsum {

using NodeId = std::uint32_t;
using LabelId = std::uint32_t;
using Multiplicity = std::uint64_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised by the text loaders; carries the 1-based line number of the offending line.
class ParseError : public Error {
  public:
    ParseError(std::string source, std::size_t line, const std::string &what)
        : Error(source + ":" + std::to_string(line) + ": " + what), source_(std::move(source)), line_(line) {}

    const std::string &source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }

  private:
    std::string source_;
    std::size_t line_;
};

struct Neighbor {
    NodeId node;
    Multiplicity mult;

    friend bool operator==(const Neighbor &, const Neighbor &) = default;
};

struct Edge {
    NodeId src;
    NodeId dst;
    Multiplicity mult;

    friend bool operator==(const Edge &, const Edge &) = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/**
 * Directed, node-labeled multi-graph with self-loops.
 *
 * Immutable once built. Adjacency is stored twice in CSR form (out and in), each list
 * sorted by neighbor id; a self-loop (v, v) appears once in out(v) and once in in(v).
 * Build instances with GraphBuilder or load_graph().
 */
class LabeledMultiGraph {
  public:
    LabeledMultiGraph() = default;

    std::size_t node_count() const noexcept { return labels_.size(); }

    /// |T|. Always at least 1 so that label-count codes are defined.
    std::size_t label_count() const noexcept { return label_count_; }

    LabelId label(NodeId v) const { return labels_[v]; }
    std::span<const LabelId> labels() const noexcept { return labels_; }

    std::span<const Neighbor> out(NodeId v) const {
        return {out_nbrs_.data() + out_offsets_[v], out_nbrs_.data() + out_offsets_[v + 1]};
    }
    std::span<const Neighbor> in(NodeId v) const {
        return {in_nbrs_.data() + in_offsets_[v], in_nbrs_.data() + in_offsets_[v + 1]};
    }

    std::size_t out_degree(NodeId v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
    std::size_t in_degree(NodeId v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

    /// |N^D(v)|: in-degree plus out-degree, a self-loop counted in both.
    std::size_t directed_degree(NodeId v) const { return in_degree(v) + out_degree(v); }

    /// Distinct directed edges, self-loops included.
    std::size_t edge_count() const noexcept { return out_nbrs_.size(); }

    Multiplicity total_multiplicity() const {
        Multiplicity total = 0;
        for (const auto &n : out_nbrs_) total += n.mult;
        return total;
    }

    /// Multiplicity of (u, v), or 0 when the edge is absent.
    Multiplicity multiplicity(NodeId u, NodeId v) const {
        auto row = out(u);
        auto it = std::lower_bound(row.begin(), row.end(), v, [](const Neighbor &n, NodeId x) { return n.node < x; });
        return (it != row.end() && it->node == v) ? it->mult : 0;
    }

    bool has_self_loop(NodeId v) const { return multiplicity(v, v) > 0; }

    std::vector<Edge> edges() const {
        std::vector<Edge> result;
        result.reserve(edge_count());
        for (NodeId u = 0; u < node_count(); ++u)
            for (const auto &n : out(u)) result.push_back({u, n.node, n.mult});
        return result;
    }

    const std::vector<std::string> &node_names() const noexcept { return node_names_; }
    const std::vector<std::string> &label_names() const noexcept { return label_names_; }

    std::string node_name(NodeId v) const { return v < node_names_.size() ? node_names_[v] : std::to_string(v); }
    std::string label_name(LabelId l) const {
        return l < label_names_.size() ? label_names_[l] : std::to_string(l);
    }

    /// Structural equality: node set, labels, every edge and every multiplicity. Names are metadata.
    friend bool operator==(const LabeledMultiGraph &a, const LabeledMultiGraph &b) {
        return a.labels_ == b.labels_ && a.out_offsets_ == b.out_offsets_ && a.out_nbrs_ == b.out_nbrs_;
    }

  private:
    friend class GraphBuilder;

    std::vector<LabelId> labels_;
    std::size_t label_count_ = 1;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<Neighbor> out_nbrs_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<Neighbor> in_nbrs_;
    std::vector<std::string> node_names_;
    std::vector<std::string> label_names_;
};

class GraphBuilder {
  public:
    explicit GraphBuilder(std::size_t node_count = 0) : labels_(node_count, 0) {}

    NodeId add_node(LabelId label = 0) {
        labels_.push_back(label);
        return static_cast<NodeId>(labels_.size() - 1);
    }

    std::size_t node_count() const noexcept { return labels_.size(); }

    void set_label(NodeId v, LabelId label) { labels_.at(v) = label; }

    /// Repeated (src, dst) pairs accumulate their multiplicities.
    void add_edge(NodeId src, NodeId dst, Multiplicity mult = 1) {
        if (mult < 1) throw Error("edge multiplicity must be >= 1");
        if (src >= labels_.size() || dst >= labels_.size()) throw Error("edge endpoint out of range");
        edges_.push_back({src, dst, mult});
    }

    void set_node_names(std::vector<std::string> names) { node_names_ = std::move(names); }
    void set_label_names(std::vector<std::string> names) { label_names_ = std::move(names); }
    void set_label_count(std::size_t count) { label_count_ = count; }

    LabeledMultiGraph build() && {
        LabeledMultiGraph g;
        const std::size_t n = labels_.size();
        std::sort(edges_.begin(), edges_.end(),
                  [](const Edge &a, const Edge &b) { return std::tie(a.src, a.dst) < std::tie(b.src, b.dst); });
        std::vector<Edge> merged;
        merged.reserve(edges_.size());
        for (const auto &e : edges_) {
            if (!merged.empty() && merged.back().src == e.src && merged.back().dst == e.dst)
                merged.back().mult += e.mult;
            else
                merged.push_back(e);
        }
        edges_.clear();

        g.out_offsets_.assign(n + 1, 0);
        g.in_offsets_.assign(n + 1, 0);
        for (const auto &e : merged) {
            ++g.out_offsets_[e.src + 1];
            ++g.in_offsets_[e.dst + 1];
        }
        std::partial_sum(g.out_offsets_.begin(), g.out_offsets_.end(), g.out_offsets_.begin());
        std::partial_sum(g.in_offsets_.begin(), g.in_offsets_.end(), g.in_offsets_.begin());
        g.out_nbrs_.resize(merged.size());
        g.in_nbrs_.resize(merged.size());
        std::vector<std::size_t> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
        // merged is sorted by (src, dst): out rows come out sorted, and in rows are filled in
        // increasing src order, so they are sorted too.
        for (std::size_t i = 0; i < merged.size(); ++i) {
            const auto &e = merged[i];
            g.out_nbrs_[i] = {e.dst, e.mult};
            g.in_nbrs_[in_fill[e.dst]++] = {e.src, e.mult};
        }

        LabelId max_label = 0;
        for (auto l : labels_) max_label = std::max(max_label, l);
        std::size_t count = std::max<std::size_t>({label_count_, label_names_.size(), n ? max_label + 1u : 1u, 1u});
        g.label_count_ = count;
        g.labels_ = std::move(labels_);
        g.node_names_ = std::move(node_names_);
        g.label_names_ = std::move(label_names_);
        return g;
    }

  private:
    std::vector<LabelId> labels_;
    std::vector<Edge> edges_;
    std::vector<std::string> node_names_;
    std::vector<std::string> label_names_;
    std::size_t label_count_ = 0;
};

/// Copy of g with labels replaced (same label table size). Used by label-permutation studies.
inline LabeledMultiGraph relabeled(const LabeledMultiGraph &g, std::span<const LabelId> labels) {
    if (labels.size() != g.node_count()) throw Error("relabeled: label vector size mismatch");
    GraphBuilder b(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) b.set_label(v, labels[v]);
    for (const auto &e : g.edges()) b.add_edge(e.src, e.dst, e.mult);
    b.set_node_names(g.node_names());
    b.set_label_names(g.label_names());
    b.set_label_count(g.label_count());
    return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Direction-tagged adjacency

enum class Direction : std::uint8_t { In = 0, Out = 1 };

/// A neighbor id together with the direction of the edge, packed so in- and out-tokens
/// of the same neighbor differ.
using Token = std::uint64_t;

constexpr Token make_token(NodeId node, Direction dir) noexcept {
    return (static_cast<Token>(node) << 1) | static_cast<Token>(dir);
}
constexpr NodeId token_node(Token t) noexcept { return static_cast<NodeId>(t >> 1); }
constexpr Direction token_direction(Token t) noexcept { return static_cast<Direction>(t & 1u); }

/// N^D(v) = N^I(v) || N^O(v).
inline std::vector<Token> concat_adjacency(const LabeledMultiGraph &g, NodeId v) {
    std::vector<Token> tokens;
    tokens.reserve(g.directed_degree(v));
    for (const auto &n : g.in(v)) tokens.push_back(make_token(n.node, Direction::In));
    for (const auto &n : g.out(v)) tokens.push_back(make_token(n.node, Direction::Out));
    return tokens;
}

struct InducedEdgeStats {
    std::size_t edge_count = 0;  // E_C, self-loops excluded
    std::size_t max_in_degree = 0;
    std::size_t max_out_degree = 0;
    std::size_t self_loop_count = 0;
    NodeId max_in_node = kNoNode;  // argmax, ties to the smallest id
    NodeId max_out_node = kNoNode;
};

/// Statistics of the subgraph induced on `nodes` (need not be sorted; duplicates are an error).
inline InducedEdgeStats induced_edge_stats(const LabeledMultiGraph &g, std::span<const NodeId> nodes) {
    if (nodes.empty()) throw Error("induced_edge_stats: empty node set");
    std::vector<NodeId> sorted(nodes.begin(), nodes.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error("induced_edge_stats: duplicate node");
    auto member = [&](NodeId x) { return std::binary_search(sorted.begin(), sorted.end(), x); };

    InducedEdgeStats stats;
    std::vector<std::size_t> in_deg(sorted.size(), 0);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const NodeId u = sorted[i];
        std::size_t out_deg = 0;
        for (const auto &n : g.out(u)) {
            if (n.node == u) {
                ++stats.self_loop_count;
            } else if (member(n.node)) {
                ++out_deg;
                ++stats.edge_count;
                ++in_deg[std::lower_bound(sorted.begin(), sorted.end(), n.node) - sorted.begin()];
            }
        }
        if (stats.max_out_node == kNoNode || out_deg > stats.max_out_degree) {
            stats.max_out_degree = out_deg;
            stats.max_out_node = u;
        }
    }
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (stats.max_in_node == kNoNode || in_deg[i] > stats.max_in_degree) {
            stats.max_in_degree = in_deg[i];
            stats.max_in_node = sorted[i];
        }
    }
    return stats;
}

// ---------------------------------------------------------------------------
// Edge-list / label-list loading

struct LoadOptions {
    bool undirected = false;
};

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == '\t' || line[i] == ' ')) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != '\t' && line[j] != ' ') ++j;
        fields.push_back(line.substr(i, j - i));
        i = j;
    }
    return fields;
}

inline bool skip_line(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
}

inline std::string_view chomp(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

}  // namespace detail

/**
 * Loads "src \t dst [\t mult]" lines (and optionally "node \t label" lines).
 *
 * Node identifiers are arbitrary strings, remapped to dense ids in order of first
 * appearance; graph.node_names() keeps the reverse mapping. '#' lines and blank lines
 * are skipped. Without a label stream every node gets the single label "unlabeled".
 */
inline LabeledMultiGraph load_graph(std::istream &edges, std::istream *labels = nullptr, LoadOptions options = {},
                                    const std::string &edge_source = "edges",
                                    const std::string &label_source = "labels") {
    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> names;
    std::vector<Edge> parsed;
    auto intern = [&](std::string_view name) {
        auto [it, inserted] = ids.try_emplace(std::string(name), static_cast<NodeId>(names.size()));
        if (inserted) names.emplace_back(name);
        return it->second;
    };

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(edges, line)) {
        ++lineno;
        std::string_view view = detail::chomp(line);
        if (detail::skip_line(view)) continue;
        auto fields = detail::split_fields(view);
        if (fields.size() < 2 || fields.size() > 3)
            throw ParseError(edge_source, lineno, "expected 'src<TAB>dst[<TAB>mult]'");
        Multiplicity mult = 1;
        if (fields.size() == 3) {
            long long value = 0;
            try {
                std::size_t used = 0;
                value = std::stoll(std::string(fields[2]), &used);
                if (used != fields[2].size()) throw std::invalid_argument("trailing");
            } catch (const std::exception &) {
                throw ParseError(edge_source, lineno, "malformed multiplicity '" + std::string(fields[2]) + "'");
            }
            if (value < 1) throw ParseError(edge_source, lineno, "multiplicity must be >= 1");
            mult = static_cast<Multiplicity>(value);
        }
        const NodeId src = intern(fields[0]);
        const NodeId dst = intern(fields[1]);
        parsed.push_back({src, dst, mult});
        if (options.undirected && src != dst) parsed.push_back({dst, src, mult});
    }

    std::vector<LabelId> node_labels(names.size(), 0);
    std::vector<std::string> label_names;
    if (labels != nullptr) {
        std::unordered_map<std::string, LabelId> label_ids;
        std::vector<bool> seen(names.size(), false);
        lineno = 0;
        while (std::getline(*labels, line)) {
            ++lineno;
            std::string_view view = detail::chomp(line);
            if (detail::skip_line(view)) continue;
            auto fields = detail::split_fields(view);
            if (fields.size() != 2) throw ParseError(label_source, lineno, "expected 'node<TAB>label'");
            auto node = ids.find(std::string(fields[0]));
            if (node == ids.end())
                throw ParseError(label_source, lineno, "unknown node '" + std::string(fields[0]) + "'");
            auto [it, inserted] =
                label_ids.try_emplace(std::string(fields[1]), static_cast<LabelId>(label_names.size()));
            if (inserted) label_names.emplace_back(fields[1]);
            if (seen[node->second] && node_labels[node->second] != it->second)
                throw ParseError(label_source, lineno, "conflicting label for node '" + std::string(fields[0]) + "'");
            node_labels[node->second] = it->second;
            seen[node->second] = true;
        }
        for (NodeId v = 0; v < names.size(); ++v)
            if (!seen[v]) throw Error(label_source + ": node '" + names[v] + "' has no label");
    } else {
        label_names.push_back("unlabeled");
    }

    GraphBuilder builder(names.size());
    for (NodeId v = 0; v < names.size(); ++v) builder.set_label(v, node_labels[v]);
    for (const auto &e : parsed) builder.add_edge(e.src, e.dst, e.mult);
    builder.set_node_names(std::move(names));
    builder.set_label_names(std::move(label_names));
    return std::move(builder).build();
}

inline LabeledMultiGraph load_graph_from_strings(const std::string &edges, const std::string *labels = nullptr,
                                                 LoadOptions options = {}) {
    std::istringstream edge_stream(edges);
    if (labels == nullptr) return load_graph(edge_stream, nullptr, options);
    std::istringstream label_stream(*labels);
    return load_graph(edge_stream, &label_stream, options);
}

}  // namespace lmgsum
