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

#include "lggm/localize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lggm/detail/bits.hpp"
#include "lggm/error.hpp"
#include "lggm/nelder_mead.hpp"

namespace lggm {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

/// Evaluates sum_l (p^l - Lambda^l), where Lambda^l is the largest
/// cut eigenvalue of the unnormalized branch psi^l. This equals
/// sum_l p^l GGM(psi^l / sqrt(p^l)).
class LocalizedObjective {
   public:
    LocalizedObjective(const PureState &state, std::span<const int> positions, const CutPolicy &policy)
        : m_(static_cast<int>(positions.size())),
          n_rest_(state.n_qubits() - m_),
          rest_dim_(std::size_t{1} << n_rest_),
          scanner_(n_rest_, policy) {
        const int n = state.n_qubits();
        const auto meas = detail::deposit_table(n, positions);
        const auto keep = detail::deposit_table(n, detail::complement(n, positions));
        stages_.resize(m_ + 1);
        for (auto &s : stages_) {
            s.assign(meas.size() * rest_dim_, Complex{0.0});
        }
        for (std::size_t a = 0; a < meas.size(); ++a) {
            for (std::size_t r = 0; r < rest_dim_; ++r) {
                stages_[0][a * rest_dim_ + r] = state[meas[a] | keep[r]];
            }
        }
    }

    int measured() const {
        return m_;
    }

    /// Contracts measured qubit `j` (stage j -> j + 1) with basis `angle`.
    void apply(int j, const Angle &angle) {
        const auto basis = measurement_basis(angle);
        const Complex b00 = std::conj(basis[0](0)), b01 = std::conj(basis[0](1));
        const Complex b10 = std::conj(basis[1](0)), b11 = std::conj(basis[1](1));
        const std::size_t prefixes = std::size_t{1} << j;
        const std::size_t tail = (std::size_t{1} << (m_ - j - 1)) * rest_dim_;
        const auto &in = stages_[j];
        auto &out = stages_[j + 1];
        for (std::size_t o = 0; o < prefixes; ++o) {
            const Complex *x0 = in.data() + (2 * o) * tail;
            const Complex *x1 = x0 + tail;
            Complex *y0 = out.data() + (2 * o) * tail;
            Complex *y1 = y0 + tail;
            for (std::size_t t = 0; t < tail; ++t) {
                y0[t] = b00 * x0[t] + b01 * x1[t];
                y1[t] = b10 * x0[t] + b11 * x1[t];
            }
        }
    }

    /// Value once all m qubits have been contracted.
    double leaf_value(std::vector<OutcomeValue> *outcomes = nullptr) const {
        const auto &last = stages_[m_];
        const std::size_t n_outcomes = std::size_t{1} << m_;
        double total = 0.0;
        if (outcomes != nullptr) {
            outcomes->clear();
        }
        for (std::size_t o = 0; o < n_outcomes; ++o) {
            std::span<const Complex> branch(last.data() + o * rest_dim_, rest_dim_);
            double p = 0.0;
            for (const auto &c : branch) {
                p += std::norm(c);
            }
            double g = 0.0;
            if (p >= kNegligibleProbability) {
                const double top = scanner_.max_eigenvalue(branch);
                g = std::max(0.0, 1.0 - top / p);
                total += std::max(0.0, p - top);
            }
            if (outcomes != nullptr) {
                outcomes->push_back({p >= kNegligibleProbability ? p : 0.0, g});
            }
        }
        return total;
    }

    double evaluate(std::span<const Angle> angles, std::vector<OutcomeValue> *outcomes = nullptr) {
        ++evaluations_;
        for (int j = 0; j < m_; ++j) {
            apply(j, angles[j]);
        }
        return leaf_value(outcomes);
    }

    int evaluations() const {
        return evaluations_;
    }
    void count_evaluation() {
        ++evaluations_;
    }

   private:
    int m_;
    int n_rest_;
    std::size_t rest_dim_;
    detail::CutScanner scanner_;
    std::vector<std::vector<Complex>> stages_;
    int evaluations_ = 0;
};

struct AngleGrid {
    std::vector<Angle> points;
    double spacing = 0.0;
};

AngleGrid make_grid(int points_per_angle) {
    const int g = points_per_angle;
    std::vector<double> thetas;
    for (int i = 0; i < g; ++i) {
        thetas.push_back(M_PI * i / (g - 1));
    }
    thetas.push_back(M_PI / 2.0);
    std::sort(thetas.begin(), thetas.end());
    thetas.erase(std::unique(thetas.begin(), thetas.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                 thetas.end());
    AngleGrid grid;
    grid.spacing = M_PI / (g - 1);
    for (double t : thetas) {
        if (t == 0.0 || t == M_PI) {
            grid.points.push_back({t, 0.0});
            continue;
        }
        for (int k = 0; k < g; ++k) {
            grid.points.push_back({t, kTwoPi * k / g});
        }
    }
    return grid;
}

void grid_search(LocalizedObjective &objective, const AngleGrid &grid, int j, std::vector<Angle> &current,
                 double &best_value, std::vector<Angle> &best_angles) {
    for (const Angle &a : grid.points) {
        current[j] = a;
        objective.apply(j, a);
        if (j + 1 < objective.measured()) {
            grid_search(objective, grid, j + 1, current, best_value, best_angles);
            continue;
        }
        objective.count_evaluation();
        const double v = objective.leaf_value();
        if (v > best_value) {
            best_value = v;
            best_angles = current;
        }
    }
}

std::vector<double> flatten(std::span<const Angle> angles) {
    std::vector<double> raw;
    for (const auto &a : angles) {
        raw.push_back(a.theta);
        raw.push_back(a.phi);
    }
    return raw;
}

std::vector<Angle> unflatten(std::span<const double> raw) {
    std::vector<Angle> angles(raw.size() / 2);
    for (std::size_t j = 0; j < angles.size(); ++j) {
        angles[j] = {raw[2 * j], raw[2 * j + 1]};
    }
    return angles;
}

void validate(const PureState &state, std::span<const int> positions, const OptimizerSettings &settings) {
    const int m = static_cast<int>(positions.size());
    if (m < 1) {
        throw InvalidArgument("at least one qubit must be measured");
    }
    if (state.n_qubits() - m < 2) {
        throw InvalidArgument("measurement must leave at least 2 unmeasured qubits");
    }
    check_positions(state.n_qubits(), positions);
    if (settings.use_grid && settings.grid_points_per_angle < 2) {
        throw InvalidArgument("grid_points_per_angle must be at least 2");
    }
    if (settings.refine_iterations < 0 || !(settings.refine_tolerance > 0.0)) {
        throw InvalidArgument("refine_iterations must be >= 0 and refine_tolerance > 0");
    }
    for (const auto &w : settings.warm_starts) {
        if (static_cast<int>(w.size()) != m) {
            throw InvalidArgument("warm start needs one angle pair per measured qubit");
        }
    }
}

}  // namespace

std::vector<Angle> canonical_angles(std::span<const double> raw) {
    auto angles = unflatten(raw);
    for (auto &a : angles) {
        double theta = std::fmod(a.theta, kTwoPi);
        if (theta < 0) {
            theta += kTwoPi;
        }
        double phi = a.phi;
        if (theta > M_PI) {
            theta = kTwoPi - theta;
            phi += M_PI;
        }
        phi = std::fmod(phi, kTwoPi);
        if (phi < 0) {
            phi += kTwoPi;
        }
        if (phi >= kTwoPi) {
            phi = 0.0;
        }
        if (theta < 1e-12) {
            theta = 0.0;
            phi = 0.0;
        } else if (M_PI - theta < 1e-12) {
            theta = M_PI;
            phi = 0.0;
        }
        a = {theta, phi};
    }
    return angles;
}

Ensemble ensemble(const PureState &state, const MeasurementConfig &config) {
    const std::size_t n_outcomes = std::size_t{1} << config.positions.size();
    Ensemble out;
    out.entries.reserve(n_outcomes);
    for (std::size_t l = 0; l < n_outcomes; ++l) {
        auto c = project_and_trace(state, config.positions, config.angles, l);
        out.entries.push_back({c.probability, std::move(c.state), c.negligible});
    }
    return out;
}

double average_ggm(const Ensemble &ensemble, const CutPolicy &policy) {
    double total = 0.0;
    for (const auto &e : ensemble.entries) {
        if (e.negligible || e.probability < kNegligibleProbability) {
            continue;
        }
        total += e.probability * ggm(e.state, policy).value;
    }
    return total;
}

double localized_ggm(const PureState &state, const MeasurementConfig &config, const CutPolicy &policy) {
    if (config.angles.size() != config.positions.size()) {
        throw InvalidArgument("one angle pair per measured qubit is required");
    }
    validate(state, config.positions, OptimizerSettings{});
    for (const auto &a : config.angles) {
        check_angle(a);
    }
    LocalizedObjective objective(state, config.positions, policy);
    return objective.evaluate(config.angles);
}

LggmResult lggm(const PureState &state, std::span<const int> positions, const OptimizerSettings &settings,
                const CutPolicy &policy) {
    validate(state, positions, settings);
    const int m = static_cast<int>(positions.size());
    LocalizedObjective objective(state, positions, policy);

    double best_value = -1.0;
    std::vector<Angle> best_angles(m);
    double step = 0.25;
    if (settings.use_grid) {
        const auto grid = make_grid(settings.grid_points_per_angle);
        std::vector<Angle> current(m);
        grid_search(objective, grid, 0, current, best_value, best_angles);
        step = 0.5 * grid.spacing;
    }
    auto consider = [&](std::span<const Angle> candidate) {
        const double v = objective.evaluate(candidate);
        if (v > best_value) {
            best_value = v;
            best_angles.assign(candidate.begin(), candidate.end());
        }
    };
    if (settings.include_computational_basis || !settings.use_grid) {
        consider(std::vector<Angle>(m));
    }
    for (const auto &w : settings.warm_starts) {
        consider(w);
    }

    if (settings.refine_iterations > 0) {
        NelderMeadSettings nm;
        nm.max_iterations = settings.refine_iterations;
        nm.tolerance = settings.refine_tolerance;
        nm.initial_step = step;
        auto negated = [&](std::span<const double> raw) { return -objective.evaluate(unflatten(raw)); };
        const auto refined = nelder_mead_minimize(negated, flatten(best_angles), nm);
        if (-refined.value > best_value) {
            best_value = -refined.value;
            best_angles = unflatten(refined.x);
        }
    }

    LggmResult result;
    result.positions.assign(positions.begin(), positions.end());
    result.optimal_angles = canonical_angles(flatten(best_angles));
    result.value = objective.evaluate(result.optimal_angles, &result.per_outcome);
    result.evaluations = objective.evaluations();
    return result;
}

bool is_permutation_symmetric(const PureState &state, double tolerance) {
    const int n = state.n_qubits();
    if (n < 2) {
        return true;
    }
    const std::uint64_t dim = state.dim();
    const std::uint64_t top = std::uint64_t{1} << (n - 1);
    const std::uint64_t second = top >> 1;
    for (std::uint64_t i = 0; i < dim; ++i) {
        // swap of qubits 1 and 2
        const bool b1 = i & top;
        const bool b2 = i & second;
        std::uint64_t swapped = i & ~(top | second);
        swapped |= b1 ? second : 0;
        swapped |= b2 ? top : 0;
        // cyclic shift: qubit k -> k + 1
        const std::uint64_t shifted = (i >> 1) | ((i & 1U) << (n - 1));
        if (std::abs(state[i] - state[swapped]) > tolerance || std::abs(state[i] - state[shifted]) > tolerance) {
            return false;
        }
    }
    return true;
}

GlobalLggm global_lggm(const PureState &state, int m, const OptimizerSettings &settings, const CutPolicy &policy) {
    const int n = state.n_qubits();
    if (m < 1 || m > n - 2) {
        throw InvalidArgument("number of measured qubits must lie in 1..N-2, got " + std::to_string(m));
    }
    GlobalLggm out;
    out.symmetric = is_permutation_symmetric(state);
    std::vector<std::vector<int>> sets;
    if (out.symmetric) {
        std::vector<int> first(m);
        for (int j = 0; j < m; ++j) {
            first[j] = j + 1;
        }
        sets.push_back(first);
    } else {
        std::vector<int> current(m);
        for (int j = 0; j < m; ++j) {
            current[j] = j + 1;
        }
        while (true) {
            sets.push_back(current);
            int i = m - 1;
            while (i >= 0 && current[i] == n - m + i + 1) {
                --i;
            }
            if (i < 0) {
                break;
            }
            ++current[i];
            for (int j = i + 1; j < m; ++j) {
                current[j] = current[j - 1] + 1;
            }
        }
    }
    bool first = true;
    for (const auto &set : sets) {
        auto r = lggm(state, set, settings, policy);
        if (first || r.value > out.best.value) {
            out.best = r;
            first = false;
        }
        out.per_position_set.emplace(set, std::move(r));
    }
    return out;
}

ConjectureReport conjecture_check(const PureState &state, const OptimizerSettings &settings, double tolerance) {
    if (state.n_qubits() != 3) {
        throw InvalidArgument("the conjecture check applies to three-qubit states only");
    }
    ConjectureReport report;
    report.ggm = ggm(state, AllCuts{});
    for (const auto &cut : report.ggm.tied_cuts) {
        report.max_cut_qubits.push_back(cut.front());
    }
    for (int r = 1; r <= 3; ++r) {
        const int pos[] = {r};
        report.localized[r - 1] = lggm(state, pos, settings).value;
    }
    report.global = *std::max_element(report.localized.begin(), report.localized.end());
    const double g = report.ggm.value;
    auto is_max_cut = [&](int r) {
        return std::find(report.max_cut_qubits.begin(), report.max_cut_qubits.end(), r) != report.max_cut_qubits.end();
    };
    report.lower_bound_holds = true;
    report.others_equal = true;
    double best_on_max_cut = 0.0;
    for (int r = 1; r <= 3; ++r) {
        const double e = report.localized[r - 1];
        if (is_max_cut(r)) {
            report.lower_bound_holds = report.lower_bound_holds && e >= g - tolerance;
            best_on_max_cut = std::max(best_on_max_cut, e);
        } else {
            report.others_equal = report.others_equal && std::abs(e - g) <= tolerance;
        }
    }
    report.global_on_max_cut = report.global - best_on_max_cut <= tolerance;
    return report;
}

}  // namespace lggm
