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

#include <span>
#include <variant>
#include <vector>

#include "lggm/qstate.hpp"

namespace lggm {

/// One side of a bipartition: sorted 1-based qubit positions.
using Cut = std::vector<int>;

struct AllCuts {};
struct MaxCutSize {
    int n_max;
};
struct ExplicitCuts {
    std::vector<Cut> cuts;
};
/// Which bipartitions the Schmidt-coefficient maximization runs over.
using CutPolicy = std::variant<AllCuts, MaxCutSize, ExplicitCuts>;

/// Cuts whose squared Schmidt coefficient lies this close to the maximum
/// are reported as tied.
inline constexpr double kCutTieTolerance = 1e-10;

struct GgmValue {
    /// 1 - max_schmidt_sq.
    double value = 0.0;
    /// Lexicographically smallest cut attaining the maximum.
    Cut argmax_cut;
    double max_schmidt_sq = 1.0;
    /// Every cut within kCutTieTolerance of the maximum, in enumeration order.
    std::vector<Cut> tied_cuts;
};

/// Largest eigenvalue of a Hermitian matrix (closed form for 2x2,
/// tridiagonal QR otherwise). Throws InvalidArgument if the input is
/// non-Hermitian beyond 1e-10.
double max_eigenvalue(const Eigen::MatrixXcd &matrix);
double max_eigenvalue(const DensityMatrix &rho);

/// Cuts visited for an n-qubit state under `policy`. For AllCuts these are
/// all subsets of size 1..floor(n/2); a subset of size exactly n/2 is
/// listed only if it contains qubit 1, since its complement has the same
/// spectrum.
std::vector<Cut> enumerate_cuts(int n_qubits, const CutPolicy &policy);

/// Generalized geometric measure: 1 minus the largest squared Schmidt
/// coefficient over the cuts selected by `policy`.
GgmValue ggm(const PureState &state, const CutPolicy &policy = AllCuts{});

/// Eigenvalues of reduced_density(state, subset), descending.
std::vector<double> schmidt_spectrum(const PureState &state, std::span<const int> subset);

namespace detail {

/// Precomputed index tables for evaluating max_c lambda_max(rho_c) on many
/// unnormalized n-qubit vectors with a fixed cut list.
class CutScanner {
   public:
    CutScanner(int n_qubits, const CutPolicy &policy);

    int n_qubits() const {
        return n_qubits_;
    }
    const std::vector<Cut> &cuts() const {
        return cuts_;
    }

    /// Largest eigenvalue of the reduced matrix of `psi` (not necessarily
    /// normalized) on cut `c`.
    double cut_eigenvalue(std::span<const Complex> psi, std::size_t c) const;

    /// max over cuts; writes the index of the first maximizing cut.
    double max_eigenvalue(std::span<const Complex> psi, std::size_t *best = nullptr) const;

   private:
    struct Table {
        std::uint64_t single_mask = 0;  // used when the cut has one qubit
        std::vector<std::uint64_t> keep;
        std::vector<std::uint64_t> drop;
    };

    int n_qubits_;
    std::vector<Cut> cuts_;
    std::vector<Table> tables_;
};

}  // namespace detail

}  // namespace lggm
