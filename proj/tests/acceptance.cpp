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


// Acceptance harness. Prints one "[PASS]" or "[FAIL]" line per criterion.
// Usage: acceptance [criterion ...]   (no argument runs all of 1..11)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "lggm/campaign.hpp"
#include "lggm/ggm.hpp"
#include "lggm/localize.hpp"
#include "lggm/oracle.hpp"
#include "lggm/qstate.hpp"
#include "lggm/spin.hpp"
#include "reference.hpp"

namespace {

using namespace lggm;

struct Verdict {
    bool pass = true;
    std::string detail;
};

double el(const PureState &s, std::vector<int> positions, const CutPolicy &policy = AllCuts{}) {
    return lggm::lggm(s, positions, OptimizerSettings{}, policy).value;
}

std::vector<double> linspace_step(double a, double b, double step) {
    std::vector<double> out;
    const int n = static_cast<int>(std::lround((b - a) / step));
    for (int i = 0; i <= n; ++i) {
        out.push_back(std::round((a + i * step) * 1e9) / 1e9);
    }
    return out;
}

/// Random gW weights with random phases; |a_i|^2 are normalized exponentials,
/// which is the distribution of normalized complex Gaussian amplitudes.
GeneralizedWSpec random_gw(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    GeneralizedWSpec spec;
    for (int i = 0; i < n; ++i) {
        spec.a.emplace_back(g(rng), g(rng));
    }
    double t = 0.0;
    for (const auto &a : spec.a) {
        t += std::norm(a);
    }
    for (auto &a : spec.a) {
        a /= std::sqrt(t);
    }
    return spec;
}

Verdict criterion_1() {
    Verdict v;
    double worst = 0.0;
    auto check = [&](double got, double want) {
        worst = std::max(worst, std::abs(got - want));
    };
    for (int n = 3; n <= 8; ++n) {
        const auto ghz = ghz_state(n);
        check(ggm(ghz).value, 0.5);
        check(el(ghz, {1}), 0.5);
        const auto w = w_state(n);
        check(ggm(w).value, 1.0 / n);
        check(el(w, {1}), 1.0 / n);
    }
    for (double x : {0.1, 0.25, 0.4}) {
        for (int n : {3, 4, 5}) {
            const auto s = build(GhzSpec{n, Complex(std::sqrt(1.0 - x)), Complex(std::sqrt(x))});
            check(el(s, {1}), x);
            check(oracle::gghz_lggm(x).value, x);
        }
    }
    struct Row {
        int n, k;
        double g, el;
    };
    for (const Row &r : {Row{6, 3, 0.4, 0.4}, Row{7, 3, 3.0 / 7.0, 0.371429}, Row{3, 1, 1.0 / 3.0, 1.0 / 3.0}}) {
        const auto s = build(DickeSpec{r.n, r.k});
        check(ggm(s).value, r.g);
        check(el(s, {1}), r.el);
        check(oracle::dicke_ggm(r.n, r.k).value, r.g);
        check(oracle::dicke_lggm(r.n, r.k).value, r.el);
    }
    v.pass = worst <= 1e-4;
    v.detail = fmt::format("GHZ/W N=3..8, gGHZ, Dicke table; max deviation {:.2e} (tol 1e-4)", worst);
    return v;
}

Verdict criterion_2() {
    std::mt19937_64 rng(2002);
    std::vector<std::array<int, 3>> orders = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    double worst = 0.0;
    int global_misses = 0, total = 0;
    for (const auto &order : orders) {
        for (int i = 0; i < 50; ++i) {
            // Sort the weights, then place them so that qubit order[j] gets
            // the j-th largest.
            auto raw = random_gw(3, rng);
            std::sort(raw.a.begin(), raw.a.end(), [](Complex x, Complex y) { return std::norm(x) > std::norm(y); });
            GeneralizedWSpec spec{std::vector<Complex>(3)};
            for (int j = 0; j < 3; ++j) {
                spec.a[order[j]] = raw.a[j];
            }
            const auto s = build(spec);
            const std::array<double, 3> w = {std::norm(spec.a[0]), std::norm(spec.a[1]), std::norm(spec.a[2])};
            std::array<double, 3> numeric{};
            for (int r = 1; r <= 3; ++r) {
                numeric[r - 1] = el(s, {r});
                worst = std::max(worst, std::abs(numeric[r - 1] - oracle::gw_lggm_table(w, r).value));
            }
            // Qubit whose 1:rest cut has the largest Schmidt coefficient.
            int best_r = 1;
            double best_l = -1.0;
            for (int r = 1; r <= 3; ++r) {
                const double l = std::max(w[r - 1], 1.0 - w[r - 1]);
                if (l > best_l + 1e-12) {
                    best_l = l;
                    best_r = r;
                }
            }
            const double global = global_lggm(s, 1).best.value;
            if (std::abs(numeric[best_r - 1] - global) > 1e-4) {
                ++global_misses;
            }
            ++total;
        }
    }
    Verdict v;
    v.pass = worst <= 1e-4 && global_misses == 0;
    v.detail = fmt::format("{} gW3 states over 6 orderings; max |E_L^r - rule| {:.2e}; E_GL off the max-Schmidt qubit in {}",
                           total, worst, global_misses);
    return v;
}

Verdict criterion_3() {
    double worst = 0.0;
    int entries = 0;
    std::vector<std::string> mismatches;
    for (int cls = 7; cls <= 9; ++cls) {
        const auto s = build(FourQubitClassSpec{cls, {}});
        std::vector<std::vector<int>> sets = {{}};
        for (int r = 1; r <= 4; ++r) {
            sets.push_back({r});
        }
        for (int a = 1; a <= 4; ++a) {
            for (int b = a + 1; b <= 4; ++b) {
                sets.push_back({a, b});
            }
        }
        for (const auto &p : sets) {
            const double got = p.empty() ? ggm(s).value : el(s, p);
            const double want = oracle::fourq_table(cls, p).value;
            worst = std::max(worst, std::abs(got - want));
            if (std::abs(got - want) > 1e-4) {
                mismatches.push_back(fmt::format("class {} {{{}}}: {:.4g} vs table {:.4g}", cls,
                                                 p.size() == 1 ? fmt::format("{}", p[0])
                                                               : fmt::format("{},{}", p[0], p[1]),
                                                 got, want));
            }
            ++entries;
        }
    }
    Verdict v;
    v.pass = entries == 33 && mismatches.empty();
    v.detail = fmt::format("{} entries for classes 7, 8, 9; {} outside 1e-4 (max deviation {:.2e})", entries,
                           mismatches.size(), worst);
    for (const auto &m : mismatches) {
        v.detail += "; " + m;
    }
    return v;
}

Verdict criterion_4() {
    std::mt19937_64 rng(4004);
    int lower = 0, upper = 0, checked = 0;
    for (int n = 3; n <= 5; ++n) {
        for (int i = 0; i < 1000; ++i) {
            const auto spec = random_gw(n, rng);
            const auto s = build(spec);
            double min_w = 1.0;
            for (const auto &a : spec.a) {
                min_w = std::min(min_w, std::norm(a));
            }
            const double bound = (1.0 - min_w) / (n - 1);
            const double g = ggm(s).value;
            for (int r = 1; r <= n; ++r) {
                const double e = el(s, {r});
                lower += e < g - 1e-6;
                upper += e > bound + 1e-9;
                ++checked;
            }
        }
    }
    Verdict v;
    v.pass = lower == 0 && upper == 0;
    v.detail = fmt::format("{} (state, qubit) pairs at N=3,4,5; G <= E_L^r violations {}, upper bound violations {}",
                           checked, lower, upper);
    return v;
}

Verdict criterion_5() {
    std::mt19937_64 rng(5005);
    int below = 0, above = 0;
    double min_gap = 1.0;
    for (int i = 0; i < 10000; ++i) {
        const auto s = build(random_gw(3, rng));
        const double g = ggm(s).value;
        const double e = el(s, {1});
        below += e < g - 1e-6;
        above += e > (1.0 - g) / 2.0 + 1e-6;
        min_gap = std::min({min_gap, e - g, (1.0 - g) / 2.0 - e});
    }
    Verdict v;
    v.pass = below == 0 && above == 0;
    v.detail = fmt::format("10^4 gW3 states; below E_L^1 = G: {}, above 2E_L^1 + G = 1: {}; closest approach {:.1e}",
                           below, above, min_gap);
    return v;
}

bool within(double x, double target, double tol) {
    return std::abs(x - target) <= tol;
}

Verdict criterion_6() {
    CampaignSpec haar;
    haar.family = Family::Haar;
    haar.n_qubits = 4;
    haar.n_samples = 10000;
    haar.seed = 6006;
    haar.measure_el12 = true;
    const auto hs = summarize(run_campaign(haar), haar.equality_tolerance);

    CampaignSpec dicke = haar;
    dicke.family = Family::DickeSuperposition;
    dicke.seed = 6007;
    const auto ds = summarize(run_campaign(dicke), dicke.equality_tolerance);

    // The three 4-qubit percentages partition the ensemble as
    // "E_L^1 >= G" versus "G > E_L^1", and the two conditional fractions are
    // taken over the G > E_L^1 samples. The strict E_L^1 > G fraction is
    // printed alongside for reference.
    const auto &e1 = *hs.el1_vs_g;
    const double not_below = e1.fraction_greater() + e1.fraction_equal();
    const double strict = e1.fraction_greater();
    const double c_g = hs.el12_vs_g_given_el1_lt_g->fraction_greater();
    const double c_e = hs.el12_vs_el1_given_el1_lt_g->fraction_greater();
    const double c_g_le = hs.el12_vs_g_given_el1_le_g->fraction_greater();
    const double c_e_le = hs.el12_vs_el1_given_el1_le_g->fraction_greater();
    const double d_less = ds.el1_vs_g->fraction_less();
    const double d_12 = ds.el12_vs_el1->fraction_less();

    const bool ok_a = within(not_below, 0.29, 0.03);
    const bool ok_b = within(c_g, 0.22, 0.04);
    const bool ok_c = within(c_e, 0.476, 0.04);
    const bool ok_d = within(d_less, 0.334, 0.03);
    const bool ok_e = within(d_12, 0.991, 0.01);
    Verdict v;
    v.pass = ok_a && ok_b && ok_c && ok_d && ok_e;
    auto mark = [](bool ok) { return ok ? "ok" : "OUT"; };
    v.detail = fmt::format(
        "Haar4: E_L1>=G {:.1f}% [29+-3 {}] (strict E_L1>G {:.1f}%), E_L12>G|G>E_L1 {:.1f}% [22+-4 {}], "
        "E_L12>E_L1|G>E_L1 {:.1f}% [47.6+-4 {}] (over E_L1<=G: {:.1f}%, {:.1f}%); "
        "Dicke4: E_L1<G {:.1f}% [33.4+-3 {}], E_L12<E_L1 {:.1f}% [99.1+-1 {}]",
        100 * not_below, mark(ok_a), 100 * strict, 100 * c_g, mark(ok_b), 100 * c_e, mark(ok_c), 100 * c_g_le,
        100 * c_e_le, 100 * d_less, mark(ok_d), 100 * d_12, mark(ok_e));
    return v;
}

Verdict criterion_7() {
    CampaignSpec spec;
    spec.family = Family::MixedThreeQubit;
    spec.n_qubits = 3;
    spec.n_samples = 100000;
    spec.seed = 7007;
    spec.measure_el1 = false;
    spec.check_conjecture = true;
    const auto s = summarize(run_campaign(spec), spec.equality_tolerance);
    Verdict v;
    v.pass = s.conjecture_violations && *s.conjecture_violations == 0;
    v.detail = fmt::format("10^5 mixed GHZ/W-class 3-qubit states; conjecture violations {}",
                           s.conjecture_violations.value_or(spec.n_samples));
    return v;
}

Verdict criterion_8() {
    // gW4 with weights x, (1-x)/5, 3(1-x)/10, (1-x)/2; x = |a_1|^2.
    const auto grid = linspace_step(0.005, 0.45, 0.0025);
    int order_violations = 0;
    double crossover = -1.0;
    for (double x : grid) {
        GeneralizedWSpec spec;
        for (double w : {x, (1 - x) / 5, 3 * (1 - x) / 10, (1 - x) / 2}) {
            spec.a.emplace_back(std::sqrt(w));
        }
        const auto s = build(spec);
        const double g = ggm(s).value;
        const double e1 = el(s, {1});
        const double e12 = el(s, {1, 2});
        order_violations += (e1 < g - 1e-6) || (e12 < e1 - 1e-6);
        if (crossover < 0.0 && e1 - g <= 1e-6) {
            crossover = x;
        }
    }
    Verdict v;
    v.pass = order_violations == 0 && crossover > 0.0 && within(crossover, 0.17, 0.01);
    v.detail = fmt::format("{} points in (0, 0.45]; ordering violations {}; G = E_L^1 from x = {:.4f} (0.17+-0.01)",
                           grid.size(), order_violations, crossover);
    return v;
}

Verdict criterion_9() {
    struct Run {
        int n;
        double lo, hi;
    };
    std::vector<Extremum> peaks;
    for (const Run &r : {Run{12, 0.8, 1.2}, Run{16, 0.9, 1.1}}) {
        SweepSettings settings;
        settings.parameter = SweepParameter::Lambda;
        settings.grid = linspace_step(r.lo, r.hi, 0.02);
        settings.measures = {SpinMeasure::EL1};
        const auto res = sweep(SpinModelSpec{IsingModel{1.0, 1.0}, r.n, true}, settings);
        peaks.push_back(locate_extremum(res, SpinMeasure::EL1, ExtremumKind::DerivativeMax));
    }
    const bool at_one = std::abs(peaks[0].parameter - 1.0) <= 0.02 + 1e-9 && std::abs(peaks[1].parameter - 1.0) <= 0.02 + 1e-9;
    const bool sharper = peaks[1].sharpness > peaks[0].sharpness;
    Verdict v;
    v.pass = at_one && sharper;
    v.detail = fmt::format("argmax dE_L1/dlambda: N=12 at {:.2f} (peak {:.4f}), N=16 at {:.2f} (peak {:.4f})",
                           peaks[0].parameter, peaks[0].sharpness, peaks[1].parameter, peaks[1].sharpness);
    return v;
}

Verdict criterion_10() {
    const SpinModelSpec base{XxzModel{1.0, 0.5, 0.0}, 12, true};
    SweepSettings field;
    field.parameter = SweepParameter::Lambda;
    field.grid = linspace_step(0.0, 1.5, 0.05);
    field.measures = {SpinMeasure::G, SpinMeasure::EL1, SpinMeasure::EL12};
    const auto fr = sweep(base, field);

    double above_one = 0.0;
    int plateaus = 0, flat_breaks = 0, silent_changes = 0;
    for (std::size_t i = 0; i < fr.points.size(); ++i) {
        const auto &p = fr.points[i];
        const double vals[] = {*p.g, *p.el1, *p.el12};
        if (p.parameter > 1.0 + 1e-9) {
            above_one = std::max({above_one, vals[0], vals[1], vals[2]});
        }
        if (i == 0 || p.sector != fr.points[i - 1].sector) {
            ++plateaus;
        }
        if (i == 0) {
            continue;
        }
        const auto &q = fr.points[i - 1];
        const double change = std::max({std::abs(*p.g - *q.g), std::abs(*p.el1 - *q.el1), std::abs(*p.el12 - *q.el12)});
        if (p.sector == q.sector) {
            flat_breaks += change > 1e-6;
        } else {
            silent_changes += change <= 1e-6;
        }
    }

    SweepSettings aniso;
    aniso.parameter = SweepParameter::Delta;
    aniso.grid = linspace_step(-2.0, 0.0, 0.05);
    aniso.measures = {SpinMeasure::G, SpinMeasure::EL1};
    const auto ar = sweep(base, aniso);
    const auto gmin = locate_extremum(ar, SpinMeasure::G, ExtremumKind::SeriesMin);
    const auto cusp = locate_extremum(ar, SpinMeasure::EL1, ExtremumKind::Cusp);

    Verdict v;
    const bool kt = std::abs(gmin.parameter + 1.0) <= 0.05 + 1e-9 && std::abs(cusp.parameter + 1.0) <= 0.05 + 1e-9;
    v.pass = above_one < 1e-6 && plateaus >= 2 && flat_breaks == 0 && silent_changes == 0 && kt;
    v.detail = fmt::format(
        "lambda sweep: max measure for lambda>1 {:.1e}, {} sector plateaus, in-sector changes {}, sector changes "
        "without a step {}; Delta sweep: G min at {:.2f}, E_L1 cusp at {:.2f} (jump {:.3f})",
        above_one, plateaus, flat_breaks, silent_changes, gmin.parameter, cusp.parameter, cusp.sharpness);
    return v;
}

Verdict criterion_11() {
    std::mt19937_64 rng(1111);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    double rdm_err = 0.0;
    for (int i = 0; i < 200; ++i) {
        const int n_total = 3 + static_cast<int>(u(rng) * 6);  // 3..8
        const int k = 1 + static_cast<int>(u(rng) * (n_total - 1));
        const int n_prime = n_total % 2 == 0 ? (n_total - 2) / 2 : (n_total - 1) / 2;
        const int n = 1 + static_cast<int>(u(rng) * n_prime);
        const Angle a{u(rng) * M_PI, u(rng) * 2 * M_PI};
        const int l = u(rng) < 0.5 ? 0 : 1;
        const int pos[] = {1};
        const Angle angles[] = {a};
        const auto c = project_and_trace(build(DickeSpec{n_total, k}), pos, angles, l);
        std::vector<int> sub;
        for (int q = 1; q <= n; ++q) {
            sub.push_back(q);
        }
        const auto ref = reduced_density(c.state, sub);
        const auto rho = oracle::dicke_post_measurement_rdm(n_total, k, n, a, l);
        rdm_err = std::max(rdm_err, (rho.entries - ref.entries).cwiseAbs().maxCoeff());
    }

    double wc_err = 0.0;
    for (int i = 0; i < 100; ++i) {
        double w[4];
        double t = 0.0;
        for (double &x : w) {
            x = -std::log(1.0 - u(rng));
            t += x;
        }
        const WClassSpec s{w[0] / t, w[1] / t, w[2] / t};
        wc_err = std::max(wc_err, std::abs(oracle::wclass_lggm(s).value - el(build(s), {1})));
    }

    double apply_err = 0.0, energy_err = 0.0;
    for (int n = 4; n <= 10; n += 2) {
        const SpinModelSpec models[] = {{IsingModel{0.5 + u(rng), 0.5 + u(rng)}, n, true},
                                        {XxzModel{0.5 + u(rng), 2.0 * u(rng) - 1.0, u(rng)}, n, true}};
        for (const auto &spec : models) {
            Eigen::MatrixXcd dense;
            if (const auto *m = std::get_if<IsingModel>(&spec.model)) {
                dense = testing::dense_ising(n, m->j, m->h, true);
            } else {
                const auto &x = std::get<XxzModel>(spec.model);
                dense = testing::dense_xxz(n, x.j, x.delta, x.h, true);
            }
            Amplitudes v(std::size_t{1} << n);
            for (auto &z : v) {
                z = Complex(u(rng) - 0.5, u(rng) - 0.5);
            }
            const Eigen::Map<const Eigen::VectorXcd> vm(v.data(), static_cast<Eigen::Index>(v.size()));
            const Eigen::VectorXcd ref = dense * vm;
            const auto out = apply_hamiltonian(spec, v);
            for (std::size_t j = 0; j < out.size(); ++j) {
                apply_err = std::max(apply_err, std::abs(out[j] - ref(static_cast<Eigen::Index>(j))));
            }
            const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(dense, Eigen::EigenvaluesOnly);
            energy_err = std::max(energy_err, std::abs(ground_state(spec).energy - eig.eigenvalues()(0)));
        }
    }

    Verdict v;
    v.pass = rdm_err <= 1e-10 && wc_err <= 1e-6 && apply_err <= 1e-9 && energy_err <= 1e-9;
    v.detail = fmt::format(
        "Dicke RDM max error {:.1e} (1e-10), W-class f_wc vs numeric {:.1e} (1e-6), H*v {:.1e} (1e-9), "
        "Lanczos energy {:.1e} (1e-9)",
        rdm_err, wc_err, apply_err, energy_err);
    return v;
}

}  // namespace

int main(int argc, char **argv) {
    const std::vector<std::function<Verdict()>> criteria = {criterion_1, criterion_2, criterion_3, criterion_4,
                                                            criterion_5, criterion_6, criterion_7, criterion_8,
                                                            criterion_9, criterion_10, criterion_11};
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const int c = std::atoi(argv[i]);
        if (c < 1 || c > static_cast<int>(criteria.size())) {
            fmt::print(stderr, "unknown criterion '{}'\n", argv[i]);
            return 2;
        }
        selected.push_back(c);
    }
    if (selected.empty()) {
        for (int c = 1; c <= static_cast<int>(criteria.size()); ++c) {
            selected.push_back(c);
        }
    }
    int failures = 0;
    for (int c : selected) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[c - 1]();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        fmt::print("[{}] criterion {}: {} ({:.1f} s)\n", v.pass ? "PASS" : "FAIL", c, v.detail, secs);
        std::fflush(stdout);
        failures += !v.pass;
    }
    return failures == 0 ? 0 : 1;
}
