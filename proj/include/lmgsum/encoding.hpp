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

// Description-length primitives. Every cost is a real number of bits; nothing is rounded.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>

namespace lmgsum {

using BitCost = double;

struct CostBreakdown {
    BitCost summary_bits = 0.0;
    BitCost correction_bits = 0.0;

    BitCost total() const noexcept { return summary_bits + correction_bits; }
};

/// Universal code for k >= 1: 2 log2(k) + 1.
inline BitCost len_natural(std::uint64_t k) {
    if (k < 1) throw std::domain_error("len_natural: k must be >= 1");
    return 2.0 * std::log2(static_cast<double>(k)) + 1.0;
}

/// log2 (n choose k).
inline BitCost log2_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw std::domain_error("log2_binomial: k > n");
    const std::uint64_t small = std::min(k, n - k);
    if (small == 0) return 0.0;
    // Summing log terms is exact to a few ulps; lgamma differences lose digits to
    // cancellation when n is large and k is small.
    if (small <= 256) {
        double sum = 0.0;
        const double base = static_cast<double>(n - small);
        for (std::uint64_t i = 1; i <= small; ++i) sum += std::log2((base + static_cast<double>(i)) / static_cast<double>(i));
        return sum;
    }
    const double nn = static_cast<double>(n);
    const double kk = static_cast<double>(small);
    return (std::lgamma(nn + 1.0) - std::lgamma(kk + 1.0) - std::lgamma(nn - kk + 1.0)) / std::numbers::ln2;
}

/// Bits to encode a true multiplicity against a representative: 1 if equal, else
/// 2 log2|diff| + 3 (universal code of |diff|, zero flag, sign).
inline BitCost ell_diff(std::uint64_t m_true, std::uint64_t m_rep) {
    if (m_true == m_rep) return 1.0;
    const std::uint64_t diff = m_true > m_rep ? m_true - m_rep : m_rep - m_true;
    return 2.0 * std::log2(static_cast<double>(diff)) + 3.0;
}

inline BitCost cost_multiplicity_diff(std::span<const std::uint64_t> mults, std::uint64_t m_rep) {
    if (mults.empty()) throw std::domain_error("cost_multiplicity_diff: empty list");
    BitCost total = 0.0;
    for (auto m : mults) total += ell_diff(m, m_rep);
    return total;
}

/// Maps a super-node back to original nodes: which |S_v|-subset of V, plus the hub for stars.
inline BitCost cost_node_map(std::uint64_t member_count, std::uint64_t universe, bool is_star) {
    if (member_count < 1 || member_count > universe)
        throw std::domain_error("cost_node_map: need 1 <= member_count <= universe");
    BitCost bits = log2_binomial(universe, member_count);
    if (is_star) bits += std::log2(static_cast<double>(member_count));
    return bits;
}

/// Binomial code for a correction subset of size n_corrections out of n_max possible
/// positions. An empty subset costs a single flag bit.
inline BitCost cost_correction_set(std::uint64_t n_corrections, std::uint64_t n_max) {
    if (n_corrections > n_max) throw std::domain_error("cost_correction_set: corrections exceed maximum");
    if (n_corrections == 0) return 1.0;
    return len_natural(n_corrections) + log2_binomial(n_max, n_corrections);
}

inline double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

/// Per-correction entropy code: n_max * H(n_corrections / n_max). Always >= the binomial code.
inline BitCost cost_entropy_code(std::uint64_t n_corrections, std::uint64_t n_max) {
    if (n_max == 0) throw std::domain_error("cost_entropy_code: n_max must be >= 1");
    if (n_corrections > n_max) throw std::domain_error("cost_entropy_code: corrections exceed maximum");
    return static_cast<double>(n_max) *
           binary_entropy(static_cast<double>(n_corrections) / static_cast<double>(n_max));
}

}  // namespace lmgsum
