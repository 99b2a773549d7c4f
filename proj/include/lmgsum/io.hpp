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

// Serialization: summary JSON, run-report JSON, DOT rendering, correction lists and
// canonical edge dumps.

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "lmgsum/graph.hpp"
#include "lmgsum/summarizer.hpp"
#include "lmgsum/summary.hpp"

namespace lmgsum {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSummaryFormat = "lmgsum-summary";
inline constexpr int kSummaryVersion = 1;
inline constexpr std::string_view kCorrectionsHeader = "# lmgsum corrections v1";

inline Json summary_to_json(const SummaryGraph &s, std::optional<CostBreakdown> cost = std::nullopt) {
    Json j;
    j["format"] = kSummaryFormat;
    j["version"] = kSummaryVersion;
    j["node_count"] = s.node_count;
    j["label_count"] = s.label_count;
    j["nodes"] = s.node_names;
    j["labels"] = s.label_names;
    Json nodes = Json::array();
    for (const auto &v : s.super_nodes) {
        Json n;
        n["id"] = v.id;
        n["label"] = v.label;
        n["glyph"] = to_string(v.glyph);
        n["members"] = v.members;
        n["hub"] = v.hub ? Json(*v.hub) : Json(nullptr);
        n["rep_mult"] = v.rep_mult;
        n["self_loop"] = v.self_loop;
        nodes.push_back(std::move(n));
    }
    j["super_nodes"] = std::move(nodes);
    Json edges = Json::array();
    for (const auto &e : s.super_edges) edges.push_back({{"src", e.src}, {"dst", e.dst}, {"rep_mult", e.rep_mult}});
    j["super_edges"] = std::move(edges);
    if (cost) {
        j["cost"] = {{"summary_bits", cost->summary_bits},
                     {"correction_bits", cost->correction_bits},
                     {"total_bits", cost->total()}};
    }
    return j;
}

/// Parses and validates a summary. Throws Error on malformed input.
inline SummaryGraph summary_from_json(const Json &j) {
    try {
        if (j.at("format").get<std::string>() != kSummaryFormat) throw Error("not an lmgsum summary");
        if (j.at("version").get<int>() != kSummaryVersion) throw Error("unsupported summary version");
        SummaryGraph s;
        s.node_count = j.at("node_count").get<std::size_t>();
        s.label_count = j.at("label_count").get<std::size_t>();
        s.node_names = j.value("nodes", std::vector<std::string>{});
        s.label_names = j.value("labels", std::vector<std::string>{});
        for (const auto &n : j.at("super_nodes")) {
            SuperNode v;
            v.id = n.at("id").get<SuperNodeId>();
            v.label = n.at("label").get<LabelId>();
            v.glyph = glyph_from_string(n.at("glyph").get<std::string>());
            v.members = n.at("members").get<std::vector<NodeId>>();
            if (!n.at("hub").is_null()) v.hub = n.at("hub").get<NodeId>();
            v.rep_mult = n.at("rep_mult").get<Multiplicity>();
            v.self_loop = n.at("self_loop").get<bool>();
            s.super_nodes.push_back(std::move(v));
        }
        for (const auto &e : j.at("super_edges"))
            s.super_edges.push_back(
                {e.at("src").get<SuperNodeId>(), e.at("dst").get<SuperNodeId>(), e.at("rep_mult").get<Multiplicity>()});
        s.validate();
        return s;
    } catch (const nlohmann::json::exception &e) {
        throw Error(std::string("malformed summary JSON: ") + e.what());
    }
}

inline Json counts_to_json(const SummaryCounts &c) {
    Json j;
    for (Glyph g : {Glyph::Clique, Glyph::InStar, Glyph::OutStar, Glyph::Disconnected, Glyph::Singleton})
        j[std::string(to_string(g))] = c.by_glyph[static_cast<std::size_t>(g)];
    j["super_nodes"] = c.super_nodes;
    j["super_edges"] = c.super_edges;
    return j;
}

/// Report JSON. wall_seconds is the only field that varies between identical runs.
inline Json report_to_json(const RunReport &r) {
    Json j;
    j["bits_before"] = r.bits_before;
    j["bits_after"] = r.bits_after;
    j["compression_ratio"] = r.compression_ratio;
    j["candidates"] = r.candidates;
    j["proposals"] = r.proposals;
    j["commits"] = r.commits;
    j["corrections"] = r.corrections;
    Json cps = Json::array();
    for (const auto &cp : r.checkpoints) {
        cps.push_back({{"bands", cp.bands},
                       {"bits", cp.bits},
                       {"compression_ratio", cp.compression_ratio},
                       {"candidates", cp.candidates},
                       {"commits", cp.commits},
                       {"counts", counts_to_json(cp.counts)}});
    }
    j["checkpoints"] = std::move(cps);
    j["lsh"] = {{"buckets", r.lsh.buckets},
                {"pairs_verified", r.lsh.pairs_verified},
                {"pairs_pruned_by_degree", r.lsh.pairs_pruned_by_degree},
                {"capped_buckets", r.lsh.capped_buckets},
                {"cache_pops", r.lsh.cache_pops}};
    j["wall_seconds"] = r.wall_seconds;
    return j;
}

// ---------------------------------------------------------------------------
// DOT

constexpr std::string_view dot_shape(Glyph g) noexcept {
    switch (g) {
        case Glyph::Clique: return "square";
        case Glyph::InStar: return "triangle";
        case Glyph::OutStar: return "invtriangle";
        case Glyph::Disconnected: return "hexagon";
        case Glyph::Singleton: return "circle";
    }
    return "circle";
}

namespace detail {

inline std::string dot_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

constexpr std::array<std::string_view, 12> kPalette = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                                                       "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

}  // namespace detail

/// Super-node display name: the node's own name for singletons, "S<id>" otherwise.
inline std::string super_node_name(const SummaryGraph &s, const SuperNode &v) {
    if (v.members.size() == 1) {
        const NodeId u = v.members.front();
        return u < s.node_names.size() ? s.node_names[u] : std::to_string(u);
    }
    return "S" + std::to_string(v.id);
}

inline void write_dot(std::ostream &os, const SummaryGraph &s) {
    os << "digraph summary {\n  node [style=filled];\n";
    for (const auto &v : s.super_nodes) {
        os << "  n" << v.id << " [shape=" << dot_shape(v.glyph) << ", label=\""
           << detail::dot_escape(super_node_name(s, v)) << '|' << v.members.size() << '|' << v.rep_mult
           << "\", fillcolor=\"" << detail::kPalette[v.label % detail::kPalette.size()] << "\"];\n";
    }
    for (const auto &e : s.super_edges)
        os << "  n" << e.src << " -> n" << e.dst << " [label=\"" << e.rep_mult << "\"];\n";
    os << "}\n";
}

// ---------------------------------------------------------------------------
// Corrections

namespace detail {

inline std::string node_name(const std::vector<std::string> &names, NodeId v) {
    return v < names.size() ? names[v] : std::to_string(v);
}

inline BundleKind bundle_from_string(std::string_view s) {
    for (BundleKind k : {BundleKind::Glyph, BundleKind::SuperEdge, BundleKind::Residual, BundleKind::Unlinked})
        if (to_string(k) == s) return k;
    throw Error("unknown correction bundle '" + std::string(s) + "'");
}

}  // namespace detail

/// One correction per line, nodes by name:
///   +<TAB>src<TAB>dst<TAB>mult<TAB>bundle   -<TAB>src<TAB>dst<TAB>bundle   ~<TAB>src<TAB>dst<TAB>delta
inline void write_corrections(std::ostream &os, const CorrectionSet &c, const std::vector<std::string> &names) {
    os << kCorrectionsHeader << '\n';
    for (const auto &p : c.positive)
        os << "+\t" << detail::node_name(names, p.src) << '\t' << detail::node_name(names, p.dst) << '\t' << p.mult
           << '\t' << to_string(p.bundle) << '\n';
    for (const auto &n : c.negative)
        os << "-\t" << detail::node_name(names, n.src) << '\t' << detail::node_name(names, n.dst) << '\t'
           << to_string(n.bundle) << '\n';
    for (const auto &d : c.deltas)
        os << "~\t" << detail::node_name(names, d.src) << '\t' << detail::node_name(names, d.dst) << '\t' << d.delta
           << '\n';
}

inline CorrectionSet read_corrections(std::istream &is, const std::vector<std::string> &names,
                                      const std::string &source = "<corrections>") {
    std::unordered_map<std::string, NodeId> ids;
    for (NodeId v = 0; v < names.size(); ++v) ids.emplace(names[v], v);
    auto lookup = [&](std::string_view name, std::size_t line) {
        auto it = ids.find(std::string(name));
        if (it == ids.end()) throw ParseError(source, line, "unknown node '" + std::string(name) + "'");
        return it->second;
    };
    auto number = [&](std::string_view s, std::size_t line) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(std::string(s), &used);
            if (used != s.size()) throw std::invalid_argument("trailing characters");
            return v;
        } catch (const std::exception &) {
            throw ParseError(source, line, "bad number '" + std::string(s) + "'");
        }
    };
    CorrectionSet c;
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    while (std::getline(is, line)) {
        ++lineno;
        const auto text = detail::chomp(line);
        if (!header) {
            if (text != kCorrectionsHeader) throw ParseError(source, lineno, "missing corrections header");
            header = true;
            continue;
        }
        if (detail::skip_line(text)) continue;
        const auto f = detail::split_fields(text);
        if (f.size() < 3) throw ParseError(source, lineno, "expected at least 3 fields");
        const NodeId a = lookup(f[1], lineno), b = lookup(f[2], lineno);
        if (f[0] == "+") {
            if (f.size() < 4) throw ParseError(source, lineno, "positive correction needs a multiplicity");
            const auto m = number(f[3], lineno);
            if (m < 1) throw ParseError(source, lineno, "multiplicity must be >= 1");
            const auto kind = f.size() > 4 ? detail::bundle_from_string(f[4]) : BundleKind::Unlinked;
            c.positive.push_back({a, b, static_cast<Multiplicity>(m), kind});
        } else if (f[0] == "-") {
            const auto kind = f.size() > 3 ? detail::bundle_from_string(f[3]) : BundleKind::Glyph;
            c.negative.push_back({a, b, kind});
        } else if (f[0] == "~") {
            if (f.size() < 4) throw ParseError(source, lineno, "multiplicity delta needs a value");
            const auto d = number(f[3], lineno);
            if (d == 0) throw ParseError(source, lineno, "multiplicity delta must be non-zero");
            c.deltas.push_back({a, b, d});
        } else {
            throw ParseError(source, lineno, "unknown correction kind '" + std::string(f[0]) + "'");
        }
    }
    if (!header) throw ParseError(source, lineno, "missing corrections header");
    return c;
}

/// Sorted "node<TAB>label" and "src<TAB>dst<TAB>mult" lines by name; equal dumps mean equal
/// labeled multi-graphs.
inline std::vector<std::string> canonical_dump(const LabeledMultiGraph &g) {
    std::vector<std::string> lines;
    lines.reserve(g.node_count() + g.edge_count());
    for (NodeId v = 0; v < g.node_count(); ++v) lines.push_back("N\t" + g.node_name(v) + '\t' + g.label_name(g.label(v)));
    for (const auto &e : g.edges())
        lines.push_back("E\t" + g.node_name(e.src) + '\t' + g.node_name(e.dst) + '\t' + std::to_string(e.mult));
    std::sort(lines.begin(), lines.end());
    return lines;
}

}  // namespace lmgsum
