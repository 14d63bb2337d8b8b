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
#include <complex>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace lggm {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;

/// Largest qubit count any routine will allocate a dense vector for.
int max_qubits();
void set_max_qubits(int n);

/// Throws DimensionError when `n_qubits` exceeds max_qubits().
void check_dimension(int n_qubits);

/// Normalized pure state of N qubits.
///
/// Basis convention used everywhere in the library: qubit 1 is the most
/// significant bit of the basis index, so amplitude index
/// b_1 b_2 ... b_N (binary) holds <b_1 b_2 ... b_N|psi>.
class PureState {
   public:
    /// Rescales `amplitudes` to unit norm. Throws on a zero vector or a
    /// length that is not 2^n_qubits.
    static PureState normalized(int n_qubits, Amplitudes amplitudes);

    int n_qubits() const {
        return n_qubits_;
    }
    std::size_t dim() const {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    const Complex &operator[](std::size_t i) const {
        return amplitudes_[i];
    }

    double norm_squared() const;

   private:
    PureState(int n_qubits, Amplitudes amplitudes) : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    }

    int n_qubits_;
    Amplitudes amplitudes_;
};

/// Reduced state of an ordered qubit subset. The first listed qubit is the
/// most significant bit of the row/column index.
struct DensityMatrix {
    int n_qubits = 0;
    Eigen::MatrixXcd entries;

    double trace() const {
        return entries.trace().real();
    }
    /// max |rho - rho^dagger| entry.
    double hermiticity_error() const;
};

/// Local measurement angles of one qubit, theta in [0, pi], phi in [0, 2 pi).
struct Angle {
    double theta = 0.0;
    double phi = 0.0;

    bool operator==(const Angle &) const = default;
};

// ---------------------------------------------------------------------------
// Named state families.

struct GhzSpec {
    int n_qubits;
    Complex a1{M_SQRT1_2};
    Complex a2{M_SQRT1_2};
};
struct GeneralizedWSpec {
    std::vector<Complex> a;  // a_i on qubit i; N = a.size()
};
struct DickeSpec {
    int n_qubits;
    int excitations;
};
struct DickeSuperpositionSpec {
    std::vector<Complex> a;  // coefficient of |D^N_k>, k = 0..N
};
/// sqrt(a1)|001> + sqrt(a2)|010> + sqrt(a3)|100> + sqrt(a4)|000>,
/// a4 = 1 - (a1 + a2 + a3).
struct WClassSpec {
    double a1, a2, a3;
    double a4() const {
        return 1.0 - (a1 + a2 + a3);
    }
};
/// sqrt(K) (cos d |000> + e^{i mu} sin d (x)_i (cos g_i |0> + sin g_i |1>)).
struct GhzClassSpec {
    double delta, gamma1, gamma2, gamma3, mu;
};
/// One of the nine SLOCC families of four qubits (index 1..9).
struct FourQubitClassSpec {
    int index;
    std::array<Complex, 4> a{};
};
/// Example states with a two-qubit measurement advantage:
/// which = 4 is the four-qubit example, which = 5 the five-qubit one.
struct MeasurementExampleSpec {
    int which;
    double a;
};
struct RawSpec {
    int n_qubits;
    Amplitudes amplitudes;
};
struct HaarSpec {
    int n_qubits;
    std::uint64_t seed;
};

using StateSpec = std::variant<GhzSpec, GeneralizedWSpec, DickeSpec, DickeSuperpositionSpec, WClassSpec, GhzClassSpec,
                               FourQubitClassSpec, MeasurementExampleSpec, RawSpec, HaarSpec>;

PureState build(const StateSpec &spec);

PureState ghz_state(int n_qubits);
PureState w_state(int n_qubits);
/// |0...0>
PureState zero_state(int n_qubits);

/// Independent complex Gaussians, normalized. Deterministic in `seed`.
PureState haar_random(int n_qubits, std::uint64_t seed);

/// Kronecker product; qubits of `a` come first.
PureState tensor(const PureState &a, const PureState &b);

/// Applies u[i] to qubit i + 1.
PureState apply_local_unitaries(const PureState &state, std::span<const Eigen::Matrix2cd> unitaries);

/// Haar-random 2x2 unitary (QR of a complex Ginibre matrix with phase fix).
Eigen::Matrix2cd haar_unitary_2x2(std::uint64_t seed);

/// Partial trace onto `subset` (1-based, distinct, any order).
DensityMatrix reduced_density(const PureState &state, std::span<const int> subset);

/// {xi^1, xi^2}: xi^1 = c|0> + e^{i phi} s|1>, xi^2 = -s e^{-i phi}|0> + c|1>
/// with c = cos(theta/2), s = sin(theta/2).
std::array<Eigen::Vector2cd, 2> measurement_basis(const Angle &angle);

/// Probability below which a measurement branch is treated as absent.
inline constexpr double kNegligibleProbability = 1e-12;

struct Collapse {
    double probability = 0.0;
    /// Normalized state of the unmeasured qubits (ascending original order).
    /// Set to |0...0> when `negligible`.
    PureState state;
    bool negligible = false;
};

/// Projects qubits `positions` onto basis vectors selected by `outcome` and
/// traces them out. Bit j of `outcome` (counting from the most significant
/// of m bits) picks xi^1 (0) or xi^2 (1) for positions[j].
Collapse project_and_trace(const PureState &state, std::span<const int> positions, std::span<const Angle> angles,
                           std::uint64_t outcome);

/// Throws InvalidArgument unless theta in [0, pi] and phi in [0, 2 pi).
void check_angle(const Angle &angle);

/// Throws InvalidArgument unless positions are distinct and in 1..n_qubits.
void check_positions(int n_qubits, std::span<const int> positions);

}  // namespace lggm
