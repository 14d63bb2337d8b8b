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

#include "lggm/qstate.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <random>
#include <string>
#include <string_view>

#include "lggm/detail/bits.hpp"
#include "lggm/error.hpp"

namespace lggm {

namespace {

std::atomic<int> g_max_qubits{26};

constexpr double kAngleSlack = 1e-12;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

double binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0.0;
    }
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

std::uint64_t index_of(std::string_view bits) {
    std::uint64_t idx = 0;
    for (char c : bits) {
        idx = (idx << 1) | (c == '1' ? 1U : 0U);
    }
    return idx;
}

Amplitudes zeros(int n_qubits) {
    check_dimension(n_qubits);
    return Amplitudes(std::size_t{1} << n_qubits, Complex{0.0});
}

void add(Amplitudes &amps, std::string_view bits, Complex value) {
    amps[index_of(bits)] += value;
}

PureState build_ghz(const GhzSpec &s) {
    if (s.n_qubits < 2) {
        throw InvalidArgument("gGHZ needs at least 2 qubits");
    }
    auto amps = zeros(s.n_qubits);
    amps.front() = s.a1;
    amps.back() = s.a2;
    return PureState::normalized(s.n_qubits, std::move(amps));
}

PureState build_gw(const GeneralizedWSpec &s) {
    const int n = static_cast<int>(s.a.size());
    if (n < 2) {
        throw InvalidArgument("gW needs at least 2 coefficients");
    }
    auto amps = zeros(n);
    for (int i = 1; i <= n; ++i) {
        amps[detail::qubit_mask(n, i)] = s.a[i - 1];
    }
    return PureState::normalized(n, std::move(amps));
}

void add_dicke(Amplitudes &amps, int n, int k, Complex coefficient) {
    const double scale = 1.0 / std::sqrt(binomial(n, k));
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (std::popcount(i) == k) {
            amps[i] += coefficient * scale;
        }
    }
}

PureState build_dicke(const DickeSpec &s) {
    if (s.n_qubits < 1) {
        throw InvalidArgument("Dicke state needs at least 1 qubit");
    }
    if (s.excitations < 0 || s.excitations > s.n_qubits) {
        throw InvalidArgument("Dicke excitation number must lie in 0..N, got " + std::to_string(s.excitations));
    }
    auto amps = zeros(s.n_qubits);
    add_dicke(amps, s.n_qubits, s.excitations, 1.0);
    return PureState::normalized(s.n_qubits, std::move(amps));
}

PureState build_dicke_superposition(const DickeSuperpositionSpec &s) {
    const int n = static_cast<int>(s.a.size()) - 1;
    if (n < 1) {
        throw InvalidArgument("Dicke superposition needs N + 1 >= 2 coefficients");
    }
    auto amps = zeros(n);
    for (int k = 0; k <= n; ++k) {
        add_dicke(amps, n, k, s.a[k]);
    }
    return PureState::normalized(n, std::move(amps));
}

PureState build_wclass(const WClassSpec &s) {
    if (s.a1 < 0 || s.a2 < 0 || s.a3 < 0) {
        throw InvalidArgument("W-class parameters a1, a2, a3 must be non-negative");
    }
    const double a4 = s.a4();
    if (a4 < -1e-12) {
        throw InvalidArgument("W-class parameter a4 = 1 - (a1 + a2 + a3) is negative");
    }
    auto amps = zeros(3);
    add(amps, "001", std::sqrt(s.a1));
    add(amps, "010", std::sqrt(s.a2));
    add(amps, "100", std::sqrt(s.a3));
    add(amps, "000", std::sqrt(std::max(a4, 0.0)));
    return PureState::normalized(3, std::move(amps));
}

PureState build_ghz_class(const GhzClassSpec &s) {
    const double cd = std::cos(s.delta);
    const double sd = std::sin(s.delta);
    const double g[3] = {s.gamma1, s.gamma2, s.gamma3};
    const double k_inv = 1.0 + 2.0 * cd * sd * std::cos(g[0]) * std::cos(g[1]) * std::cos(g[2]) * std::cos(s.mu);
    if (k_inv <= 0.0) {
        throw InvalidArgument("GHZ-class parameters give a vanishing state");
    }
    const double sqrt_k = 1.0 / std::sqrt(k_inv);
    auto amps = zeros(3);
    amps[0] += sqrt_k * cd;
    const Complex branch = sqrt_k * std::polar(sd, s.mu);
    for (std::size_t i = 0; i < 8; ++i) {
        Complex c = branch;
        for (int q = 0; q < 3; ++q) {
            const bool one = (i >> (2 - q)) & 1U;
            c *= one ? std::sin(g[q]) : std::cos(g[q]);
        }
        amps[i] += c;
    }
    return PureState::normalized(3, std::move(amps));
}

PureState build_four_qubit_class(const FourQubitClassSpec &s) {
    const auto &[a1, a2, a3, a4] = s.a;
    const Complex i1{0.0, 1.0};
    auto amps = zeros(4);
    auto put = [&](std::initializer_list<std::string_view> keys, Complex v) {
        for (auto k : keys) {
            add(amps, k, v);
        }
    };
    switch (s.index) {
        case 1:
            put({"0000", "1111"}, 0.5 * (a1 + a2));
            put({"0011", "1100"}, 0.5 * (a1 - a2));
            put({"0101", "1010"}, 0.5 * (a3 + a4));
            put({"0110", "1001"}, 0.5 * (a3 - a4));
            break;
        case 2:
            put({"0000", "1111"}, 0.5 * (a1 + a2));
            put({"0011", "1100"}, 0.5 * (a1 - a2));
            put({"0101", "1010", "0110"}, a3);
            break;
        case 3:
            put({"0000", "1111"}, a1);
            put({"0101", "1010", "0110", "0011"}, a2);
            break;
        case 4:
            put({"0000", "1111"}, a1);
            put({"0101", "1010"}, 0.5 * (a1 + a2));
            put({"0110", "1001"}, 0.5 * (a1 - a2));
            put({"0001", "0010", "0111", "1011"}, 0.5 * std::sqrt(2.0) * i1);
            break;
        case 5:
            put({"0000", "0101", "1010", "1111"}, a1);
            put({"0001"}, i1);
            put({"0110"}, 1.0);
            put({"1011"}, -i1);
            break;
        case 6:
            put({"0000", "1111"}, a1);
            put({"0011", "0101", "0110"}, 1.0);
            break;
        case 7:
            put({"0000", "0101", "1000", "1110"}, 1.0);
            break;
        case 8:
            put({"0000", "1011", "1101", "1110"}, 1.0);
            break;
        case 9:
            put({"0000", "0111"}, 1.0);
            break;
        default:
            throw InvalidArgument("four-qubit class index must lie in 1..9, got " + std::to_string(s.index));
    }
    return PureState::normalized(4, std::move(amps));
}

PureState build_example(const MeasurementExampleSpec &s) {
    if (s.a < 0.0 || s.a > 0.5) {
        throw InvalidArgument("example parameter a must lie in [0, 1/2]");
    }
    const double rest = 1.0 - 4.0 * s.a * s.a;
    if (s.which == 4) {
        auto amps = zeros(4);
        for (auto k : {"0000", "0011", "1100", "1111"}) {
            add(amps, k, s.a);
        }
        for (auto k : {"0101", "1010", "0110", "1001", "1011", "0100"}) {
            add(amps, k, std::sqrt(rest / 6.0));
        }
        return PureState::normalized(4, std::move(amps));
    }
    if (s.which == 5) {
        auto amps = zeros(5);
        for (auto k : {"00000", "00111", "11000", "11111"}) {
            add(amps, k, s.a);
        }
        for (auto k : {"01010", "10101", "00001", "10000"}) {
            add(amps, k, std::sqrt(rest / 4.0));
        }
        return PureState::normalized(5, std::move(amps));
    }
    throw InvalidArgument("example selector must be 4 or 5");
}

}  // namespace

int max_qubits() {
    return g_max_qubits.load();
}

void set_max_qubits(int n) {
    if (n < 1 || n > 40) {
        throw InvalidArgument("qubit cap must lie in 1..40");
    }
    g_max_qubits.store(n);
}

void check_dimension(int n_qubits) {
    if (n_qubits < 1) {
        throw InvalidArgument("qubit count must be positive");
    }
    if (n_qubits > max_qubits()) {
        throw DimensionError("state of " + std::to_string(n_qubits) + " qubits exceeds the cap of " +
                             std::to_string(max_qubits()));
    }
}

PureState PureState::normalized(int n_qubits, Amplitudes amplitudes) {
    check_dimension(n_qubits);
    if (amplitudes.size() != (std::size_t{1} << n_qubits)) {
        throw InvalidArgument("amplitude vector length " + std::to_string(amplitudes.size()) + " is not 2^" +
                              std::to_string(n_qubits));
    }
    double norm2 = 0.0;
    for (const auto &c : amplitudes) {
        norm2 += std::norm(c);
    }
    if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
        throw InvalidArgument("cannot normalize a zero or non-finite amplitude vector");
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto &c : amplitudes) {
        c *= scale;
    }
    return PureState(n_qubits, std::move(amplitudes));
}

double PureState::norm_squared() const {
    double s = 0.0;
    for (const auto &c : amplitudes_) {
        s += std::norm(c);
    }
    return s;
}

double DensityMatrix::hermiticity_error() const {
    return (entries - entries.adjoint()).cwiseAbs().maxCoeff();
}

PureState build(const StateSpec &spec) {
    return std::visit(overloaded{
                          [](const GhzSpec &s) { return build_ghz(s); },
                          [](const GeneralizedWSpec &s) { return build_gw(s); },
                          [](const DickeSpec &s) { return build_dicke(s); },
                          [](const DickeSuperpositionSpec &s) { return build_dicke_superposition(s); },
                          [](const WClassSpec &s) { return build_wclass(s); },
                          [](const GhzClassSpec &s) { return build_ghz_class(s); },
                          [](const FourQubitClassSpec &s) { return build_four_qubit_class(s); },
                          [](const MeasurementExampleSpec &s) { return build_example(s); },
                          [](const RawSpec &s) { return PureState::normalized(s.n_qubits, s.amplitudes); },
                          [](const HaarSpec &s) { return haar_random(s.n_qubits, s.seed); },
                      },
                      spec);
}

PureState ghz_state(int n_qubits) {
    return build(GhzSpec{n_qubits});
}

PureState w_state(int n_qubits) {
    return build(DickeSpec{n_qubits, 1});
}

PureState zero_state(int n_qubits) {
    auto amps = zeros(n_qubits);
    amps[0] = 1.0;
    return PureState::normalized(n_qubits, std::move(amps));
}

PureState haar_random(int n_qubits, std::uint64_t seed) {
    if (n_qubits < 1) {
        throw InvalidArgument("Haar state needs at least 1 qubit");
    }
    auto amps = zeros(n_qubits);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    for (auto &c : amps) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        c = Complex{re, im};
    }
    return PureState::normalized(n_qubits, std::move(amps));
}

PureState tensor(const PureState &a, const PureState &b) {
    const int n = a.n_qubits() + b.n_qubits();
    auto amps = zeros(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            amps[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return PureState::normalized(n, std::move(amps));
}

PureState apply_local_unitaries(const PureState &state, std::span<const Eigen::Matrix2cd> unitaries) {
    const int n = state.n_qubits();
    if (static_cast<int>(unitaries.size()) > n) {
        throw InvalidArgument("more unitaries than qubits");
    }
    Amplitudes amps(state.amplitudes().begin(), state.amplitudes().end());
    for (std::size_t q = 0; q < unitaries.size(); ++q) {
        const auto &u = unitaries[q];
        const std::uint64_t mask = detail::qubit_mask(n, static_cast<int>(q) + 1);
        for (std::size_t i = 0; i < amps.size(); ++i) {
            if (i & mask) {
                continue;
            }
            const Complex x0 = amps[i];
            const Complex x1 = amps[i | mask];
            amps[i] = u(0, 0) * x0 + u(0, 1) * x1;
            amps[i | mask] = u(1, 0) * x0 + u(1, 1) * x1;
        }
    }
    return PureState::normalized(n, std::move(amps));
}

Eigen::Matrix2cd haar_unitary_2x2(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    Eigen::Matrix2cd z;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            z(r, c) = Complex{re, im};
        }
    }
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(z);
    Eigen::Matrix2cd q = qr.householderQ();
    Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < 2; ++c) {
        const Complex d = r(c, c);
        if (std::abs(d) > 0) {
            q.col(c) *= d / std::abs(d);
        }
    }
    return q;
}

void check_positions(int n_qubits, std::span<const int> positions) {
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] < 1 || positions[i] > n_qubits) {
            throw InvalidArgument("qubit position " + std::to_string(positions[i]) + " outside 1.." +
                                  std::to_string(n_qubits));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (positions[i] == positions[j]) {
                throw InvalidArgument("qubit position " + std::to_string(positions[i]) + " repeated");
            }
        }
    }
}

void check_angle(const Angle &angle) {
    if (!(angle.theta >= -kAngleSlack && angle.theta <= M_PI + kAngleSlack)) {
        throw InvalidArgument("theta must lie in [0, pi]");
    }
    if (!(angle.phi >= -kAngleSlack && angle.phi < 2.0 * M_PI)) {
        throw InvalidArgument("phi must lie in [0, 2 pi)");
    }
}

DensityMatrix reduced_density(const PureState &state, std::span<const int> subset) {
    const int n = state.n_qubits();
    if (subset.empty()) {
        throw InvalidArgument("reduced_density needs a nonempty subset");
    }
    check_positions(n, subset);
    const auto rest = detail::complement(n, subset);
    const auto keep = detail::deposit_table(n, subset);
    const auto drop = detail::deposit_table(n, rest);
    const Eigen::Index d = static_cast<Eigen::Index>(keep.size());
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
    Eigen::VectorXcd v(d);
    for (std::uint64_t r : drop) {
        for (Eigen::Index a = 0; a < d; ++a) {
            v(a) = state[keep[a] | r];
        }
        rho.noalias() += v * v.adjoint();
    }
    return DensityMatrix{static_cast<int>(subset.size()), std::move(rho)};
}

std::array<Eigen::Vector2cd, 2> measurement_basis(const Angle &angle) {
    const double c = std::cos(angle.theta / 2.0);
    const double s = std::sin(angle.theta / 2.0);
    Eigen::Vector2cd xi1;
    xi1 << c, std::polar(s, angle.phi);
    Eigen::Vector2cd xi2;
    xi2 << -std::polar(s, -angle.phi), c;
    return {xi1, xi2};
}

Collapse project_and_trace(const PureState &state, std::span<const int> positions, std::span<const Angle> angles,
                           std::uint64_t outcome) {
    const int n = state.n_qubits();
    const int m = static_cast<int>(positions.size());
    if (m < 1) {
        throw InvalidArgument("at least one qubit must be measured");
    }
    if (m > n - 2) {
        throw InvalidArgument("measuring " + std::to_string(m) + " of " + std::to_string(n) +
                              " qubits leaves fewer than 2");
    }
    if (angles.size() != positions.size()) {
        throw InvalidArgument("one angle pair per measured qubit is required");
    }
    check_positions(n, positions);
    for (const auto &a : angles) {
        check_angle(a);
    }
    if (outcome >= (std::uint64_t{1} << m)) {
        throw InvalidArgument("outcome index out of range");
    }

    // Bra coefficient <xi^{l_j}|b> for each measured qubit.
    std::vector<std::array<Complex, 2>> bra(m);
    for (int j = 0; j < m; ++j) {
        const auto basis = measurement_basis(angles[j]);
        const auto &xi = basis[(outcome >> (m - 1 - j)) & 1U];
        bra[j] = {std::conj(xi(0)), std::conj(xi(1))};
    }
    const auto rest = detail::complement(n, positions);
    const auto meas = detail::deposit_table(n, positions);
    const auto keep = detail::deposit_table(n, rest);

    std::vector<Complex> weight(meas.size());
    for (std::size_t a = 0; a < meas.size(); ++a) {
        Complex w = 1.0;
        for (int j = 0; j < m; ++j) {
            w *= bra[j][(a >> (m - 1 - j)) & 1U];
        }
        weight[a] = w;
    }

    Amplitudes out(keep.size(), Complex{0.0});
    double p = 0.0;
    for (std::size_t r = 0; r < keep.size(); ++r) {
        Complex acc = 0.0;
        for (std::size_t a = 0; a < meas.size(); ++a) {
            acc += weight[a] * state[meas[a] | keep[r]];
        }
        out[r] = acc;
        p += std::norm(acc);
    }
    const int n_rest = n - m;
    if (p < kNegligibleProbability) {
        return Collapse{0.0, zero_state(n_rest), true};
    }
    return Collapse{p, PureState::normalized(n_rest, std::move(out)), false};
}

}  // namespace lggm
