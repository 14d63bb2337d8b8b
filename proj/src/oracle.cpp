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

#include "lggm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "lggm/error.hpp"
#include "lggm/nelder_mead.hpp"

namespace lggm::oracle {

namespace {

double binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0.0;
    }
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

void check_dicke(int n_qubits, int excitations) {
    if (n_qubits < 3) {
        throw InvalidArgument("Dicke closed forms need N >= 3");
    }
    if (excitations < 0 || excitations > n_qubits) {
        throw InvalidArgument("excitations must lie in 0..N");
    }
}

}  // namespace

AnalyticValue gghz_lggm(double a2_sq) {
    if (!(a2_sq >= 0.0) || a2_sq > 0.5 + 1e-12) {
        throw InvalidArgument("a2_sq must lie in [0, 1/2]; reorder the coefficients");
    }
    return {a2_sq, "gghz_smaller_weight", "0 <= |a2|^2 <= 1/2"};
}

AnalyticValue gw_lggm_table(const std::array<double, 3> &a_sq, int r) {
    if (r < 1 || r > 3) {
        throw InvalidArgument("r must be 1, 2 or 3");
    }
    double sum = 0.0;
    for (double a : a_sq) {
        if (!(a > 0.0)) {
            throw InvalidArgument("generalized W weights must be positive; a zero weight leaves a two-qubit state");
        }
        sum += a;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw InvalidArgument("generalized W weights must sum to 1");
    }
    double v = 1.0;
    for (int i = 0; i < 3; ++i) {
        if (i != r - 1) {
            v = std::min(v, a_sq[i]);
        }
    }
    return {v, "gw_min_rule", "N = 3, all weights positive"};
}

AnalyticValue dicke_ggm(int n_qubits, int excitations) {
    check_dicke(n_qubits, excitations);
    const int n = n_qubits;
    const int k = std::min(excitations, n - excitations);
    if (2 * k == n) {
        return {(n - 2.0) / (2.0 * (n - 1.0)), "dicke_ggm_half_filling", "k = N/2"};
    }
    return {static_cast<double>(k) / n, "dicke_ggm_k_over_n", "k < N/2 (after k -> N-k)"};
}

AnalyticValue dicke_lggm(int n_qubits, int excitations) {
    check_dicke(n_qubits, excitations);
    const int n = n_qubits;
    const int k = std::min(excitations, n - excitations);
    if (n % 2 == 0) {
        auto v = dicke_ggm(n, k);
        v.formula_id = "dicke_lggm_even";
        v.validity = "even N";
        return v;
    }
    if (2 * k < n - 1) {
        return {static_cast<double>(k) / n, "dicke_lggm_k_over_n", "odd N, k < (N-1)/2"};
    }
    if (n == 3) {
        return {1.0 / 3.0, "dicke_lggm_three_qubits", "N = 3, k in {1, 2}"};
    }
    const double v = (n - 1.0) / (2.0 * n) - (n + 1.0) / (4.0 * n * (n - 2.0));
    return {v, "dicke_lggm_odd_half_filling", "odd N > 3, k = (N-1)/2"};
}

AnalyticValue fourq_table(int class_index, const std::vector<int> &positions) {
    if (class_index < 7 || class_index > 9) {
        throw InvalidArgument("four-qubit table covers classes 7, 8 and 9 only");
    }
    std::vector<int> p = positions;
    std::sort(p.begin(), p.end());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1 || p[i] > 4 || (i > 0 && p[i] == p[i - 1])) {
            throw InvalidArgument("positions must be distinct qubits in 1..4");
        }
    }
    if (p.size() > 2) {
        throw InvalidArgument("four-qubit table lists one or two measured qubits");
    }
    const std::string id = "fourq_class_" + std::to_string(class_index);
    if (class_index == 7) {
        return {0.25, id, "all entries"};
    }
    // Classes 8 and 9 share the same pattern with base values 1/4 and 0.
    const double low = class_index == 8 ? 0.25 : 0.0;
    double v = low;
    if (p.size() == 1) {
        v = p[0] == 1 ? 0.5 : low;
    } else if (p.size() == 2) {
        v = (p[0] == 3 && p[1] == 4) ? low : 0.5;
    }
    return {v, id, "tabulated entry"};
}

double wclass_fwc(const WClassSpec &spec, double theta, double phi) {
    const double a1 = spec.a1, a2 = spec.a2, a3 = spec.a3, a4 = std::max(0.0, spec.a4());
    if (!(a1 > 0.0 && a2 > 0.0 && a3 > 0.0) || spec.a4() < -1e-12) {
        throw InvalidArgument("W-class parameters need a1, a2, a3 > 0 and a1 + a2 + a3 <= 1");
    }
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    const double q1[2] = {c * c, s * s};
    const double q2[2] = {s * s, c * c};
    const double u[2] = {c * c * c * c, s * s * s * s};
    const double cross = std::sqrt(a3 * a4) * std::sin(theta) * std::cos(phi);
    double f = 0.0;
    for (int l = 0; l < 2; ++l) {
        const double sign = l == 0 ? 1.0 : -1.0;  // -(-1)^l with l = 1, 2
        const double p = (a1 + a2 + a4) * q1[l] + a3 * q2[l] + sign * cross;
        f += std::sqrt(std::max(0.0, p * p - 4.0 * a1 * a2 * u[l]));
    }
    return f;
}

WClassLggm wclass_lggm(const WClassSpec &spec) {
    constexpr int kGrid = 48;
    double best = wclass_fwc(spec, 0.0, 0.0);
    Angle best_angle{0.0, 0.0};
    for (int i = 0; i <= kGrid; ++i) {
        const double theta = M_PI * i / kGrid;
        for (int j = 0; j < kGrid; ++j) {
            const double phi = 2.0 * M_PI * j / kGrid;
            const double f = wclass_fwc(spec, theta, phi);
            if (f < best) {
                best = f;
                best_angle = {theta, phi};
            }
        }
    }
    NelderMeadSettings nm;
    nm.max_iterations = 500;
    nm.tolerance = 1e-10;
    nm.initial_step = 0.5 * M_PI / kGrid;
    auto f = [&](std::span<const double> x) { return wclass_fwc(spec, x[0], x[1]); };
    const auto r = nelder_mead_minimize(f, {best_angle.theta, best_angle.phi}, nm);
    if (r.value < best) {
        best = r.value;
        best_angle = {r.x[0], r.x[1]};
    }
    return {(1.0 - best) / 2.0, best_angle};
}

DensityMatrix dicke_post_measurement_rdm(int n_qubits, int excitations, int n, const Angle &angle, int outcome) {
    check_dicke(n_qubits, excitations);
    check_angle(angle);
    const int big_n = n_qubits;
    const int k = excitations;
    const int n_prime = big_n % 2 == 0 ? (big_n - 2) / 2 : (big_n - 1) / 2;
    if (n < 1 || n > n_prime) {
        throw InvalidArgument("subsystem size must lie in 1..N'");
    }
    if (outcome != 0 && outcome != 1) {
        throw InvalidArgument("outcome must be 0 or 1");
    }
    const double c = std::cos(angle.theta / 2.0), s = std::sin(angle.theta / 2.0);
    const double q1 = outcome == 0 ? c * c : s * s;
    const double q2 = outcome == 0 ? s * s : c * c;
    const double sign = outcome == 0 ? 1.0 : -1.0;
    const int rest = big_n - n - 1;

    // Dicke-basis blocks.
    std::vector<double> f(n + 1), g(n);
    for (int i = 0; i <= n; ++i) {
        f[i] = binom(n, i) * (binom(rest, k - i) * q1 + binom(rest, k - i - 1) * q2);
    }
    for (int i = 0; i < n; ++i) {
        g[i] = std::sin(angle.theta) / 2.0 * binom(rest, k - i - 1) * std::sqrt(binom(n, i + 1) * binom(n, i));
    }
    const double p = (binom(big_n - 1, k) * q1 + binom(big_n - 1, k - 1) * q2) / binom(big_n, k);
    if (p < kNegligibleProbability) {
        throw InvalidArgument("outcome has negligible probability");
    }
    const double norm = 1.0 / (binom(big_n, k) * p);

    // Expand |D^n_i><D^n_j| into the computational basis.
    const std::size_t dim = std::size_t{1} << n;
    DensityMatrix rho{n, Eigen::MatrixXcd::Zero(dim, dim)};
    const Complex phase = std::polar(1.0, angle.phi);
    for (std::size_t x = 0; x < dim; ++x) {
        const int wx = std::popcount(x);
        for (std::size_t y = 0; y < dim; ++y) {
            const int wy = std::popcount(y);
            Complex v{0.0};
            if (wx == wy) {
                v = f[wx] / binom(n, wx);
            } else if (wx == wy + 1) {
                v = sign * g[wy] * phase / std::sqrt(binom(n, wx) * binom(n, wy));
            } else if (wy == wx + 1) {
                v = sign * g[wx] * std::conj(phase) / std::sqrt(binom(n, wx) * binom(n, wy));
            }
            rho.entries(x, y) = norm * v;
        }
    }
    return rho;
}

}  // namespace lggm::oracle
