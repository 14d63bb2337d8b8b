// Copyright 2026 The lggm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lggm::detail {

/// Bit of the basis index that carries 1-based qubit `position` in an
/// n-qubit register (qubit 1 is the most significant bit).
inline std::uint64_t qubit_mask(int n_qubits, int position) {
    return std::uint64_t{1} << (n_qubits - position);
}

/// table[a] = basis-index bits obtained by writing the k-bit number `a`
/// (most significant bit first) onto `positions`.
inline std::vector<std::uint64_t> deposit_table(int n_qubits, std::span<const int> positions) {
    const std::size_t k = positions.size();
    std::vector<std::uint64_t> table(std::size_t{1} << k, 0);
    for (std::size_t a = 0; a < table.size(); ++a) {
        std::uint64_t bits = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if ((a >> (k - 1 - j)) & 1U) {
                bits |= qubit_mask(n_qubits, positions[j]);
            }
        }
        table[a] = bits;
    }
    return table;
}

/// Qubits of 1..n_qubits not in `positions`, ascending.
inline std::vector<int> complement(int n_qubits, std::span<const int> positions) {
    std::vector<int> rest;
    for (int q = 1; q <= n_qubits; ++q) {
        bool taken = false;
        for (int p : positions) {
            taken = taken || p == q;
        }
        if (!taken) {
            rest.push_back(q);
        }
    }
    return rest;
}

/// SplitMix64 step; used to derive independent per-sample seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace lggm::detail
