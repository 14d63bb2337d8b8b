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
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "lggm/ggm.hpp"
#include "lggm/localize.hpp"
#include "lggm/qstate.hpp"

namespace lggm {

/// H = J sum_i sx_i sx_{i+1} + h sum_i sz_i, with lambda = J / h.
struct IsingModel {
    double j = 1.0;
    double h = 1.0;
};

/// H = J' sum_i (sx_i sx_{i+1} + sy_i sy_{i+1} - Delta sz_i sz_{i+1}) + h' sum_i sz_i.
struct XxzModel {
    double j = 1.0;
    double delta = 0.5;
    double h = 0.0;
};

struct SpinModelSpec {
    std::variant<IsingModel, XxzModel> model = IsingModel{};
    int n_sites = 4;
    /// Site N + 1 is identified with site 1.
    bool periodic = true;
};

/// Throws InvalidArgument on a malformed spec.
void check_spin_spec(const SpinModelSpec &spec);

/// H v, computed by bit manipulation on basis indices. |0> is the +1
/// eigenvector of sz.
Amplitudes apply_hamiltonian(const SpinModelSpec &spec, std::span<const Complex> v);
std::vector<double> apply_hamiltonian(const SpinModelSpec &spec, std::span<const double> v);

struct LanczosSettings {
    int max_iterations = 500;
    double residual_tolerance = 1e-10;
    bool reorthogonalize = true;
    std::uint64_t seed = 20260101;
    /// Run Lanczos separately in each conserved sector (sz parity for
    /// Ising, total sz for XXZ) and keep the lowest. When false a single
    /// run covers the whole space.
    bool use_sectors = true;
    /// Number of restarts from the current Ritz vector when the Ritz
    /// estimate and the true residual disagree.
    int max_restarts = 4;
};

struct GroundState {
    double energy = 0.0;
    PureState state;
    /// Ising: parity of the number of |1> spins. XXZ: number of |1> spins.
    /// -1 when sectors were not used.
    int sector = -1;
    /// Gap to the lowest level found in any other sector (or to the second
    /// Ritz value when sectors are off).
    double gap = 0.0;
    bool degenerate = false;
    double residual = 0.0;
    int iterations = 0;
};

constexpr double kDegeneracyGap = 1e-8;

/// Lowest eigenpair. Throws ConvergenceError when the residual stays above
/// the tolerance, DimensionError above max_qubits().
GroundState ground_state(const SpinModelSpec &spec, const LanczosSettings &settings = {});

enum class SweepParameter {
    /// Ising: J = lambda * h. XXZ: h' = lambda * J'.
    Lambda,
    /// XXZ anisotropy.
    Delta,
};

enum class SpinMeasure { G, EL1, EL12 };

/// Coarse grid plus refinement; sweeps also warm start from the previous
/// point, so a fine grid is not needed.
OptimizerSettings default_sweep_optimizer();

struct SweepSettings {
    SweepParameter parameter = SweepParameter::Lambda;
    std::vector<double> grid;
    std::vector<SpinMeasure> measures = {SpinMeasure::G, SpinMeasure::EL1};
    CutPolicy policy = MaxCutSize{2};
    OptimizerSettings optimizer = default_sweep_optimizer();
    LanczosSettings lanczos;
    /// Seed each point's angle search with the previous point's optimum.
    bool warm_start = true;
};

struct SweepPoint {
    double parameter = 0.0;
    double energy = 0.0;
    int sector = -1;
    bool degenerate = false;
    std::optional<double> g;
    std::optional<double> el1;
    std::optional<double> el12;
    std::vector<Angle> el1_angles;
    std::vector<Angle> el12_angles;
};

struct SweepResult {
    SweepParameter parameter = SweepParameter::Lambda;
    std::vector<SweepPoint> points;

    std::vector<double> grid() const;
    /// Values of one measure; throws if it was not computed.
    std::vector<double> series(SpinMeasure measure) const;
    /// Central differences on the (possibly non-uniform) grid at interior
    /// points; length grid().size() - 2.
    std::vector<double> derivative(SpinMeasure measure) const;
};

/// Applies `value` of `parameter` to a copy of `base`.
SpinModelSpec with_parameter(const SpinModelSpec &base, SweepParameter parameter, double value);

SweepResult sweep(const SpinModelSpec &base, const SweepSettings &settings);

enum class ExtremumKind {
    /// Maximum of the central-difference derivative.
    DerivativeMax,
    /// Minimum of the series itself.
    SeriesMin,
    /// Largest jump between left and right one-sided differences.
    Cusp,
};

struct Extremum {
    double parameter = 0.0;
    std::size_t index = 0;
    /// Derivative value, series value, or jump magnitude for a cusp.
    double sharpness = 0.0;
};

/// Throws FlatSeriesError when no interior extremum stands out.
Extremum locate_extremum(const SweepResult &result, SpinMeasure measure, ExtremumKind kind);

/// Same on raw arrays (grid strictly increasing).
Extremum locate_extremum(std::span<const double> grid, std::span<const double> series, ExtremumKind kind);

std::string to_string(SpinMeasure measure);

}  // namespace lggm
