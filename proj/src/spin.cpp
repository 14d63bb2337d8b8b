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

#include "lggm/spin.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

#include "lggm/detail/bits.hpp"
#include "lggm/error.hpp"

namespace lggm {

namespace {

/// Bit masks and couplings shared by the full-space and sector kernels.
struct Terms {
    int n = 0;
    bool ising = true;
    double coupling = 0.0;  // J or J'
    double delta = 0.0;
    double field = 0.0;  // h or h'
    std::vector<std::uint64_t> bonds;

    explicit Terms(const SpinModelSpec &spec) : n(spec.n_sites) {
        if (const auto *m = std::get_if<IsingModel>(&spec.model)) {
            coupling = m->j;
            field = m->h;
        } else {
            const auto &x = std::get<XxzModel>(spec.model);
            ising = false;
            coupling = x.j;
            delta = x.delta;
            field = x.h;
        }
        const int n_bonds = spec.periodic ? n : n - 1;
        for (int i = 1; i <= n_bonds; ++i) {
            const int next = i == n ? 1 : i + 1;
            bonds.push_back(detail::qubit_mask(n, i) | detail::qubit_mask(n, next));
        }
    }

    double diagonal(std::uint64_t s) const {
        double d = field * (n - 2 * std::popcount(s));
        if (!ising) {
            for (auto b : bonds) {
                const int ones = std::popcount(s & b);
                d -= coupling * delta * (ones == 1 ? -1.0 : 1.0);
            }
        }
        return d;
    }

    /// Amplitude of <s ^ bond| H |s>, zero when the bond does not flip.
    double hop(std::uint64_t s, std::uint64_t bond) const {
        if (ising) {
            return coupling;
        }
        return std::popcount(s & bond) == 1 ? 2.0 * coupling : 0.0;
    }

    int sector_of(std::uint64_t s) const {
        return ising ? std::popcount(s) & 1 : std::popcount(s);
    }
    int sector_count() const {
        return ising ? 2 : n + 1;
    }
};

template <class T>
std::vector<T> apply_full(const SpinModelSpec &spec, std::span<const T> v) {
    check_spin_spec(spec);
    const std::size_t dim = std::size_t{1} << spec.n_sites;
    if (v.size() != dim) {
        throw InvalidArgument("vector length " + std::to_string(v.size()) + " does not match 2^N = " +
                              std::to_string(dim));
    }
    const Terms terms(spec);
    std::vector<T> out(dim);
    for (std::uint64_t s = 0; s < dim; ++s) {
        T acc = terms.diagonal(s) * v[s];
        for (auto b : terms.bonds) {
            const double amp = terms.hop(s, b);
            if (amp != 0.0) {
                acc += amp * v[s ^ b];
            }
        }
        out[s] = acc;
    }
    return out;
}

/// Basis states of one conserved sector, with a shared index map giving
/// each full-space state its position inside its own sector.
struct Sector {
    int id = -1;
    std::vector<std::uint64_t> states;
    std::vector<double> diagonal;
};

struct SectorOperator {
    const Terms &terms;
    const Sector &sector;
    const std::vector<std::uint32_t> &index;

    std::size_t dim() const {
        return sector.states.size();
    }

    void apply(const Eigen::VectorXd &x, Eigen::VectorXd &y) const {
        const std::size_t d = dim();
        for (std::size_t i = 0; i < d; ++i) {
            const std::uint64_t s = sector.states[i];
            double acc = sector.diagonal[i] * x[i];
            for (auto b : terms.bonds) {
                const double amp = terms.hop(s, b);
                if (amp != 0.0) {
                    acc += amp * x[index[s ^ b]];
                }
            }
            y[i] = acc;
        }
    }
};

struct LanczosOutcome {
    double energy = 0.0;
    double second = INFINITY;
    Eigen::VectorXd vector;
    double residual = 0.0;
    int iterations = 0;
};

LanczosOutcome lanczos(const SectorOperator &op, Eigen::VectorXd start, const LanczosSettings &settings) {
    const std::size_t dim = op.dim();
    LanczosOutcome out;
    Eigen::VectorXd hx(dim);
    for (int attempt = 0; attempt <= settings.max_restarts; ++attempt) {
        std::vector<Eigen::VectorXd> basis;
        std::vector<double> alpha, beta;
        basis.push_back(start.normalized());
        Eigen::VectorXd w(dim);
        Eigen::VectorXd ritz_coeffs;
        const int limit = static_cast<int>(std::min<std::size_t>(settings.max_iterations, dim));
        for (int j = 0; j < limit; ++j) {
            op.apply(basis[j], w);
            ++out.iterations;
            const double a = basis[j].dot(w);
            alpha.push_back(a);
            w -= a * basis[j];
            if (j > 0) {
                w -= beta[j - 1] * basis[j - 1];
            }
            if (settings.reorthogonalize) {
                for (int pass = 0; pass < 2; ++pass) {
                    for (const auto &v : basis) {
                        w -= v.dot(w) * v;
                    }
                }
            }
            const double b = w.norm();
            const int k = j + 1;
            const bool exhausted = b < 1e-13 * std::max(1.0, std::abs(a));
            const bool check = exhausted || k < 20 || k % 5 == 0 || k == limit;
            if (check) {
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
                Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), k);
                Eigen::VectorXd sub = k > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), k - 1))
                                            : Eigen::VectorXd(0);
                tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);

                out.second = k > 1 ? tri.eigenvalues()[1] : INFINITY;
                ritz_coeffs = tri.eigenvectors().col(0);
                const double estimate = b * std::abs(ritz_coeffs[k - 1]);
                if (exhausted || estimate < 0.1 * settings.residual_tolerance || k == limit) {
                    break;
                }
            }
            beta.push_back(b);
            basis.push_back(w / b);
        }
        Eigen::VectorXd x = Eigen::VectorXd::Zero(dim);
        for (Eigen::Index i = 0; i < ritz_coeffs.size(); ++i) {
            x += ritz_coeffs[i] * basis[i];
        }
        x.normalize();
        op.apply(x, hx);
        out.energy = x.dot(hx);
        out.residual = (hx - out.energy * x).norm();
        out.vector = std::move(x);
        if (out.residual < settings.residual_tolerance) {
            return out;
        }
        start = out.vector;
    }
    throw ConvergenceError("Lanczos did not reach residual " + std::to_string(settings.residual_tolerance) +
                           " (last residual " + std::to_string(out.residual) + ")");
}

}  // namespace

void check_spin_spec(const SpinModelSpec &spec) {
    if (spec.n_sites < 2) {
        throw InvalidArgument("spin chains need at least 2 sites");
    }
    if (const auto *m = std::get_if<IsingModel>(&spec.model)) {
        if (!(m->j > 0.0) || !(m->h > 0.0) || !std::isfinite(m->j) || !std::isfinite(m->h)) {
            throw InvalidArgument("Ising couplings J and h must be positive");
        }
    } else {
        const auto &x = std::get<XxzModel>(spec.model);
        if (!std::isfinite(x.j) || !std::isfinite(x.delta) || !std::isfinite(x.h)) {
            throw InvalidArgument("XXZ parameters must be finite");
        }
    }
}

Amplitudes apply_hamiltonian(const SpinModelSpec &spec, std::span<const Complex> v) {
    return apply_full<Complex>(spec, v);
}

std::vector<double> apply_hamiltonian(const SpinModelSpec &spec, std::span<const double> v) {
    return apply_full<double>(spec, v);
}

GroundState ground_state(const SpinModelSpec &spec, const LanczosSettings &settings) {
    check_spin_spec(spec);
    check_dimension(spec.n_sites);
    if (settings.max_iterations < 1 || !(settings.residual_tolerance > 0.0)) {
        throw InvalidArgument("Lanczos needs max_iterations >= 1 and a positive tolerance");
    }
    const Terms terms(spec);
    const std::uint64_t full_dim = std::uint64_t{1} << spec.n_sites;

    const int n_sectors = settings.use_sectors ? terms.sector_count() : 1;
    std::vector<Sector> sectors(n_sectors);
    std::vector<std::uint32_t> index(full_dim);
    for (int i = 0; i < n_sectors; ++i) {
        sectors[i].id = settings.use_sectors ? i : -1;
    }
    for (std::uint64_t s = 0; s < full_dim; ++s) {
        auto &sec = sectors[settings.use_sectors ? terms.sector_of(s) : 0];
        index[s] = static_cast<std::uint32_t>(sec.states.size());
        sec.states.push_back(s);
        sec.diagonal.push_back(terms.diagonal(s));
    }

    struct Candidate {
        int sector;
        LanczosOutcome result;
    };
    std::vector<Candidate> found;
    int iterations = 0;
    for (const auto &sec : sectors) {
        if (sec.states.empty()) {
            continue;
        }
        std::mt19937_64 rng(detail::splitmix64(settings.seed ^ static_cast<std::uint64_t>(sec.id + 1)));
        std::normal_distribution<double> normal;
        Eigen::VectorXd start(sec.states.size());
        for (auto &x : start) {
            x = normal(rng);
        }
        SectorOperator op{terms, sec, index};
        auto r = lanczos(op, std::move(start), settings);
        iterations += r.iterations;
        found.push_back({sec.id, std::move(r)});
    }

    double e0 = INFINITY;
    for (const auto &c : found) {
        e0 = std::min(e0, c.result.energy);
    }
    // Among (near-)degenerate sectors prefer the most balanced one, then the
    // lowest id, so the choice does not depend on rounding.
    auto balance = [&](int id) { return terms.ising ? id : std::abs(2 * id - spec.n_sites); };
    const Candidate *best = nullptr;
    for (const auto &c : found) {
        if (c.result.energy - e0 > kDegeneracyGap) {
            continue;
        }
        if (best == nullptr || balance(c.sector) < balance(best->sector)) {
            best = &c;
        }
    }
    double gap = best->result.second - best->result.energy;
    for (const auto &c : found) {
        if (&c != best) {
            gap = std::min(gap, c.result.energy - best->result.energy);
        }
    }

    Amplitudes amps(full_dim, Complex{0.0});
    const auto &states = sectors[settings.use_sectors ? best->sector : 0].states;
    for (std::size_t i = 0; i < states.size(); ++i) {
        amps[states[i]] = best->result.vector[i];
    }
    return GroundState{best->result.energy,
                       PureState::normalized(spec.n_sites, std::move(amps)),
                       best->sector,
                       gap,
                       gap < kDegeneracyGap,
                       best->result.residual,
                       iterations};
}

OptimizerSettings default_sweep_optimizer() {
    OptimizerSettings s;
    s.grid_points_per_angle = 4;
    s.refine_iterations = 100;
    s.refine_tolerance = 1e-6;
    return s;
}

SpinModelSpec with_parameter(const SpinModelSpec &base, SweepParameter parameter, double value) {
    SpinModelSpec spec = base;
    if (auto *m = std::get_if<IsingModel>(&spec.model)) {
        if (parameter != SweepParameter::Lambda) {
            throw InvalidArgument("the Ising chain is swept in lambda only");
        }
        m->j = value * m->h;
    } else {
        auto &x = std::get<XxzModel>(spec.model);
        if (parameter == SweepParameter::Lambda) {
            x.h = value * x.j;
        } else {
            x.delta = value;
        }
    }
    return spec;
}

std::vector<double> SweepResult::grid() const {
    std::vector<double> g;
    for (const auto &p : points) {
        g.push_back(p.parameter);
    }
    return g;
}

std::vector<double> SweepResult::series(SpinMeasure measure) const {
    std::vector<double> s;
    for (const auto &p : points) {
        const auto &v = measure == SpinMeasure::G ? p.g : measure == SpinMeasure::EL1 ? p.el1 : p.el12;
        if (!v) {
            throw InvalidArgument("measure " + to_string(measure) + " was not computed in this sweep");
        }
        s.push_back(*v);
    }
    return s;
}

namespace {

std::vector<double> central_differences(std::span<const double> x, std::span<const double> y) {
    std::vector<double> d;
    for (std::size_t i = 1; i + 1 < x.size(); ++i) {
        const double hm = x[i] - x[i - 1];
        const double hp = x[i + 1] - x[i];
        d.push_back((hm * hm * (y[i + 1] - y[i]) + hp * hp * (y[i] - y[i - 1])) / (hm * hp * (hm + hp)));
    }
    return d;
}

void check_grid(std::span<const double> grid) {
    if (grid.empty()) {
        throw InvalidArgument("sweep grid is empty");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i]) || (i > 0 && !(grid[i] > grid[i - 1]))) {
            throw InvalidArgument("sweep grid must be finite and strictly increasing");
        }
    }
}

}  // namespace

std::vector<double> SweepResult::derivative(SpinMeasure measure) const {
    const auto x = grid();
    const auto y = series(measure);
    return central_differences(x, y);
}

SweepResult sweep(const SpinModelSpec &base, const SweepSettings &settings) {
    check_grid(settings.grid);
    check_spin_spec(base);
    if (std::holds_alternative<XxzModel>(base.model) && (base.n_sites < 4 || base.n_sites % 2 != 0)) {
        throw InvalidArgument("XXZ sweeps need an even number of sites >= 4");
    }
    auto wants = [&](SpinMeasure m) {
        return std::find(settings.measures.begin(), settings.measures.end(), m) != settings.measures.end();
    };
    SweepResult result;
    result.parameter = settings.parameter;
    std::vector<Angle> prev1, prev12;
    for (double value : settings.grid) {
        const auto spec = with_parameter(base, settings.parameter, value);
        const auto gs = ground_state(spec, settings.lanczos);
        SweepPoint point;
        point.parameter = value;
        point.energy = gs.energy;
        point.sector = gs.sector;
        point.degenerate = gs.degenerate;
        if (wants(SpinMeasure::G)) {
            point.g = ggm(gs.state, settings.policy).value;
        }
        auto localize = [&](std::vector<int> positions, std::vector<Angle> &prev) {
            OptimizerSettings opt = settings.optimizer;
            if (settings.warm_start && !prev.empty()) {
                opt.warm_starts.push_back(prev);
            }
            auto r = lggm(gs.state, positions, opt, settings.policy);
            prev = r.optimal_angles;
            return r;
        };
        if (wants(SpinMeasure::EL1)) {
            auto r = localize({1}, prev1);
            point.el1 = r.value;
            point.el1_angles = r.optimal_angles;
        }
        if (wants(SpinMeasure::EL12)) {
            auto r = localize({1, 2}, prev12);
            point.el12 = r.value;
            point.el12_angles = r.optimal_angles;
        }
        result.points.push_back(std::move(point));
    }
    return result;
}

Extremum locate_extremum(std::span<const double> grid, std::span<const double> series, ExtremumKind kind) {
    check_grid(grid);
    if (series.size() != grid.size()) {
        throw InvalidArgument("series and grid lengths differ");
    }
    if (grid.size() < 3) {
        throw InvalidArgument("at least three grid points are needed to locate an extremum");
    }
    auto is_flat = [](std::span<const double> v) {
        const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        const double scale = std::max({1.0, std::abs(*lo), std::abs(*hi)});
        return *hi - *lo <= 1e-9 * scale;
    };
    Extremum e;
    if (kind == ExtremumKind::DerivativeMax) {
        const auto d = central_differences(grid, series);
        if (is_flat(d)) {
            throw FlatSeriesError("derivative is flat; no maximum to locate");
        }
        const auto it = std::max_element(d.begin(), d.end());
        e.index = static_cast<std::size_t>(it - d.begin()) + 1;
        e.sharpness = *it;
    } else if (kind == ExtremumKind::SeriesMin) {
        if (is_flat(series)) {
            throw FlatSeriesError("series is flat; no minimum to locate");
        }
        const auto it = std::min_element(series.begin(), series.end());
        e.index = static_cast<std::size_t>(it - series.begin());
        if (e.index == 0 || e.index + 1 == series.size()) {
            throw FlatSeriesError("series minimum lies on the grid boundary");
        }
        e.sharpness = *it;
    } else {
        std::vector<double> jumps;
        for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
            const double left = (series[i] - series[i - 1]) / (grid[i] - grid[i - 1]);
            const double right = (series[i + 1] - series[i]) / (grid[i + 1] - grid[i]);
            jumps.push_back(std::abs(right - left));
        }
        if (is_flat(jumps)) {
            throw FlatSeriesError("no change in slope; no cusp to locate");
        }
        const auto it = std::max_element(jumps.begin(), jumps.end());
        e.index = static_cast<std::size_t>(it - jumps.begin()) + 1;
        e.sharpness = *it;
    }
    e.parameter = grid[e.index];
    return e;
}

Extremum locate_extremum(const SweepResult &result, SpinMeasure measure, ExtremumKind kind) {
    const auto x = result.grid();
    const auto y = result.series(measure);
    return locate_extremum(x, y, kind);
}

std::string to_string(SpinMeasure measure) {
    switch (measure) {
        case SpinMeasure::G:
            return "G";
        case SpinMeasure::EL1:
            return "EL1";
        case SpinMeasure::EL12:
            return "EL12";
    }
    return "?";
}

}  // namespace lggm
