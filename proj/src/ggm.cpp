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

#include "lggm/ggm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lggm/detail/bits.hpp"
#include "lggm/error.hpp"

namespace lggm {

namespace {

double hermitian_2x2_max(double a, double d, Complex b) {
    const double half_gap = 0.5 * (a - d);
    return 0.5 * (a + d) + std::sqrt(half_gap * half_gap + std::norm(b));
}

// Combinations of `size` elements of 1..n in lexicographic order.
void append_combinations(int n, int size, bool require_first, std::vector<Cut> &out) {
    Cut current(size);
    for (int i = 0; i < size; ++i) {
        current[i] = i + 1;
    }
    while (true) {
        if (!require_first || current.front() == 1) {
            out.push_back(current);
        }
        int i = size - 1;
        while (i >= 0 && current[i] == n - size + i + 1) {
            --i;
        }
        if (i < 0) {
            return;
        }
        ++current[i];
        for (int j = i + 1; j < size; ++j) {
            current[j] = current[j - 1] + 1;
        }
    }
}

}  // namespace

double max_eigenvalue(const Eigen::MatrixXcd &matrix) {
    if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
        throw InvalidArgument("max_eigenvalue needs a nonempty square matrix");
    }
    if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw InvalidArgument("max_eigenvalue: matrix is not Hermitian");
    }
    if (matrix.rows() == 1) {
        return matrix(0, 0).real();
    }
    if (matrix.rows() == 2) {
        return hermitian_2x2_max(matrix(0, 0).real(), matrix(1, 1).real(), matrix(0, 1));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

double max_eigenvalue(const DensityMatrix &rho) {
    return max_eigenvalue(rho.entries);
}

std::vector<Cut> enumerate_cuts(int n_qubits, const CutPolicy &policy) {
    if (n_qubits < 2) {
        throw InvalidArgument("bipartitions need at least 2 qubits");
    }
    const int half = n_qubits / 2;
    std::vector<Cut> cuts;
    auto all_up_to = [&](int max_size) {
        for (int size = 1; size <= max_size; ++size) {
            append_combinations(n_qubits, size, 2 * size == n_qubits, cuts);
        }
    };
    if (std::holds_alternative<AllCuts>(policy)) {
        all_up_to(half);
    } else if (const auto *p = std::get_if<MaxCutSize>(&policy)) {
        if (p->n_max < 1) {
            throw InvalidArgument("MaxCutSize needs n_max >= 1");
        }
        all_up_to(std::min(p->n_max, half));
    } else {
        const auto &explicit_cuts = std::get<ExplicitCuts>(policy).cuts;
        if (explicit_cuts.empty()) {
            throw InvalidArgument("ExplicitCuts must list at least one cut");
        }
        for (Cut c : explicit_cuts) {
            if (c.empty() || static_cast<int>(c.size()) > half) {
                throw InvalidArgument("explicit cut size must lie in 1..floor(N/2)");
            }
            check_positions(n_qubits, c);
            std::sort(c.begin(), c.end());
            cuts.push_back(std::move(c));
        }
    }
    return cuts;
}

namespace detail {

CutScanner::CutScanner(int n_qubits, const CutPolicy &policy)
    : n_qubits_(n_qubits), cuts_(enumerate_cuts(n_qubits, policy)) {
    tables_.reserve(cuts_.size());
    for (const auto &cut : cuts_) {
        Table t;
        if (cut.size() == 1) {
            t.single_mask = qubit_mask(n_qubits, cut.front());
        } else {
            t.keep = deposit_table(n_qubits, cut);
            t.drop = deposit_table(n_qubits, complement(n_qubits, cut));
        }
        tables_.push_back(std::move(t));
    }
}

double CutScanner::cut_eigenvalue(std::span<const Complex> psi, std::size_t c) const {
    const Table &t = tables_[c];
    if (t.single_mask != 0) {
        const std::uint64_t mask = t.single_mask;
        const std::uint64_t dim = psi.size();
        double r00 = 0.0;
        double r11 = 0.0;
        Complex r01 = 0.0;
        for (std::uint64_t hi = 0; hi < dim; hi += 2 * mask) {
            for (std::uint64_t lo = 0; lo < mask; ++lo) {
                const Complex x0 = psi[hi + lo];
                const Complex x1 = psi[hi + lo + mask];
                r00 += std::norm(x0);
                r11 += std::norm(x1);
                r01 += x0 * std::conj(x1);
            }
        }
        return hermitian_2x2_max(r00, r11, r01);
    }
    const Eigen::Index d = static_cast<Eigen::Index>(t.keep.size());
    if (d == 4) {
        Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
        Eigen::Vector4cd v;
        for (std::uint64_t r : t.drop) {
            for (Eigen::Index a = 0; a < 4; ++a) {
                v(a) = psi[t.keep[a] | r];
            }
            rho.selfadjointView<Eigen::Lower>().rankUpdate(v);
        }
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho, Eigen::EigenvaluesOnly);
        return solver.eigenvalues()(3);
    }
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
    Eigen::VectorXcd v(d);
    for (std::uint64_t r : t.drop) {
        for (Eigen::Index a = 0; a < d; ++a) {
            v(a) = psi[t.keep[a] | r];
        }
        rho.selfadjointView<Eigen::Lower>().rankUpdate(v);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(d - 1);
}

double CutScanner::max_eigenvalue(std::span<const Complex> psi, std::size_t *best) const {
    double top = -1.0;
    std::size_t arg = 0;
    for (std::size_t c = 0; c < cuts_.size(); ++c) {
        const double e = cut_eigenvalue(psi, c);
        if (e > top) {
            top = e;
            arg = c;
        }
    }
    if (best != nullptr) {
        *best = arg;
    }
    return top;
}

}  // namespace detail

GgmValue ggm(const PureState &state, const CutPolicy &policy) {
    const detail::CutScanner scanner(state.n_qubits(), policy);
    const auto &cuts = scanner.cuts();
    std::vector<double> eig(cuts.size());
    double top = -1.0;
    for (std::size_t c = 0; c < cuts.size(); ++c) {
        eig[c] = scanner.cut_eigenvalue(state.amplitudes(), c);
        top = std::max(top, eig[c]);
    }
    GgmValue out;
    out.max_schmidt_sq = std::min(top, 1.0);
    out.value = std::max(0.0, 1.0 - top);
    for (std::size_t c = 0; c < cuts.size(); ++c) {
        if (eig[c] >= top - kCutTieTolerance) {
            out.tied_cuts.push_back(cuts[c]);
        }
    }
    out.argmax_cut = *std::min_element(out.tied_cuts.begin(), out.tied_cuts.end());
    return out;
}

std::vector<double> schmidt_spectrum(const PureState &state, std::span<const int> subset) {
    const auto rho = reduced_density(state, subset);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.entries, Eigen::EigenvaluesOnly);
    std::vector<double> values(solver.eigenvalues().begin(), solver.eigenvalues().end());
    for (auto &v : values) {
        v = std::max(v, 0.0);
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

}  // namespace lggm
