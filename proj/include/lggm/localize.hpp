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

#include <array>
#include <map>
#include <span>
#include <vector>

#include "lggm/ggm.hpp"
#include "lggm/qstate.hpp"

namespace lggm {

/// Product projective measurement on `positions` with one basis per qubit.
struct MeasurementConfig {
    std::vector<int> positions;
    std::vector<Angle> angles;
};

struct EnsembleEntry {
    double probability = 0.0;
    PureState state;
    bool negligible = false;
};

/// Post-measurement ensemble {p^l, psi^l}, l = 0..2^m - 1.
struct Ensemble {
    std::vector<EnsembleEntry> entries;
};

struct OptimizerSettings {
    /// Grid resolution per theta and per phi. The theta grid always
    /// contains 0, pi/2 and pi; the phi grid always contains 0.
    int grid_points_per_angle = 24;
    int refine_iterations = 200;
    /// Nelder-Mead stops when the simplex diameter drops below this.
    double refine_tolerance = 1e-7;
    /// Always evaluate the computational basis as a candidate.
    bool include_computational_basis = true;
    /// When false the grid is skipped and refinement starts from the best
    /// of the computational basis and `warm_starts`.
    bool use_grid = true;
    /// Extra candidate angle sets (one Angle per measured qubit), e.g. the
    /// optimum of a neighbouring point in a parameter sweep.
    std::vector<std::vector<Angle>> warm_starts;
};

struct OutcomeValue {
    double probability = 0.0;
    double ggm = 0.0;
};

struct LggmResult {
    std::vector<int> positions;
    /// Average post-measurement GGM at optimal_angles; a lower bound on
    /// the supremum over measurement bases.
    double value = 0.0;
    std::vector<Angle> optimal_angles;
    std::vector<OutcomeValue> per_outcome;
    int evaluations = 0;
};

Ensemble ensemble(const PureState &state, const MeasurementConfig &config);

/// sum_l p^l GGM(psi^l); negligible branches contribute 0. `policy` acts on
/// the post-measurement states, whose qubits are relabelled 1..n in
/// ascending original order.
double average_ggm(const Ensemble &ensemble, const CutPolicy &policy = AllCuts{});

/// Average GGM for the fixed measurement `config`, computed without
/// materializing the ensemble.
double localized_ggm(const PureState &state, const MeasurementConfig &config, const CutPolicy &policy = AllCuts{});

/// Localizable GGM for measurements on `positions`: grid search over all
/// 2m angles followed by Nelder-Mead refinement.
LggmResult lggm(const PureState &state, std::span<const int> positions, const OptimizerSettings &settings = {},
                const CutPolicy &policy = AllCuts{});

struct GlobalLggm {
    LggmResult best;
    std::map<std::vector<int>, LggmResult> per_position_set;
    /// True when the state is permutation symmetric and only {1..m} was run.
    bool symmetric = false;
};

/// Maximum of lggm over all C(N, m) position sets; ties go to the
/// lexicographically smallest set.
GlobalLggm global_lggm(const PureState &state, int m, const OptimizerSettings &settings = {},
                       const CutPolicy &policy = AllCuts{});

/// Invariance under every permutation of qubits (checked on the generators
/// swap(1,2) and the cyclic shift).
bool is_permutation_symmetric(const PureState &state, double tolerance = 1e-12);

/// Folds raw optimizer angles into theta in [0, pi], phi in [0, 2 pi)
/// describing the same measurement; phi = 0 whenever theta is 0 or pi.
std::vector<Angle> canonical_angles(std::span<const double> raw);

/// Check of the three-qubit maximal-Schmidt-cut conjecture on one state.
struct ConjectureReport {
    GgmValue ggm;
    /// Qubits r whose r:rest cut attains the maximal Schmidt coefficient.
    std::vector<int> max_cut_qubits;
    /// E_L^r for r = 1, 2, 3.
    std::array<double, 3> localized{};
    double global = 0.0;
    /// E_L^r >= G for every maximal-cut qubit r.
    bool lower_bound_holds = false;
    /// E_L^r' == G for every other qubit r'.
    bool others_equal = false;
    /// The global maximum is attained on a maximal-cut qubit.
    bool global_on_max_cut = false;
    bool holds() const {
        return lower_bound_holds && others_equal && global_on_max_cut;
    }
};

ConjectureReport conjecture_check(const PureState &state, const OptimizerSettings &settings = {},
                                  double tolerance = 1e-4);

}  // namespace lggm
