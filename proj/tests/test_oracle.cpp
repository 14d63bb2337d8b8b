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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "lggm/error.hpp"
#include "lggm/ggm.hpp"
#include "lggm/localize.hpp"
#include "lggm/oracle.hpp"
#include "lggm/qstate.hpp"

namespace lggm {
namespace {

TEST(Oracle, GeneralizedGhz) {
    EXPECT_EQ(oracle::gghz_lggm(0.5).value, 0.5);
    EXPECT_EQ(oracle::gghz_lggm(0.0).value, 0.0);
    EXPECT_EQ(oracle::gghz_lggm(0.3).value, 0.3);
    EXPECT_THROW(oracle::gghz_lggm(0.6), InvalidArgument);
    EXPECT_THROW(oracle::gghz_lggm(-0.1), InvalidArgument);
}

TEST(Oracle, GeneralizedGhzAgreesWithNumeric) {
    for (double a2 : {0.05, 0.1, 0.25, 0.4, 0.5}) {
        const auto s = build(GhzSpec{4, Complex(std::sqrt(1 - a2)), Complex(std::sqrt(a2))});
        const int pos[] = {1};
        EXPECT_NEAR(lggm(s, pos).value, oracle::gghz_lggm(a2).value, 1e-4);
        EXPECT_NEAR(ggm(s).value, a2, 1e-12);
    }
}

TEST(Oracle, GeneralizedWMinRule) {
    EXPECT_EQ(oracle::gw_lggm_table({0.5, 0.3, 0.2}, 1).value, 0.2);
    EXPECT_EQ(oracle::gw_lggm_table({0.5, 0.3, 0.2}, 3).value, 0.3);
    EXPECT_EQ(oracle::gw_lggm_table({0.2, 0.5, 0.3}, 3).value, 0.2);
    EXPECT_NEAR(oracle::gw_lggm_table({1.0 / 3, 1.0 / 3, 1.0 / 3}, 2).value, 1.0 / 3, 1e-15);
    EXPECT_THROW(oracle::gw_lggm_table({0.5, 0.5, 0.0}, 1), InvalidArgument);
    EXPECT_THROW(oracle::gw_lggm_table({0.5, 0.3, 0.3}, 1), InvalidArgument);
    EXPECT_THROW(oracle::gw_lggm_table({0.5, 0.3, 0.2}, 4), InvalidArgument);
}

TEST(Oracle, GeneralizedWRuleAboveSmallestWeight) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    for (int i = 0; i < 200; ++i) {
        std::array<double, 3> a{u(rng), u(rng), u(rng)};
        const double t = a[0] + a[1] + a[2];
        for (auto &x : a) {
            x /= t;
        }
        const double lo = std::min({a[0], a[1], a[2]});
        for (int r = 1; r <= 3; ++r) {
            EXPECT_GE(oracle::gw_lggm_table(a, r).value, lo);
        }
    }
}

TEST(Oracle, GeneralizedWAgreesWithNumeric) {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> nd;
    for (int i = 0; i < 10; ++i) {
        std::vector<Complex> a(3);
        std::array<double, 3> w{};
        double t = 0.0;
        for (int k = 0; k < 3; ++k) {
            a[k] = {nd(rng), nd(rng)};
            w[k] = std::norm(a[k]);
            t += w[k];
        }
        for (auto &x : w) {
            x /= t;
        }
        const auto s = build(GeneralizedWSpec{a});
        for (int r = 1; r <= 3; ++r) {
            const int pos[] = {r};
            EXPECT_NEAR(lggm(s, pos).value, oracle::gw_lggm_table(w, r).value, 1e-4);
        }
    }
}

TEST(Oracle, DickeValues) {
    EXPECT_NEAR(oracle::dicke_ggm(6, 3).value, 0.4, 1e-15);
    EXPECT_NEAR(oracle::dicke_ggm(7, 3).value, 3.0 / 7.0, 1e-15);
    EXPECT_EQ(oracle::dicke_ggm(5, 0).value, 0.0);
    EXPECT_NEAR(oracle::dicke_ggm(7, 4).value, 3.0 / 7.0, 1e-15);
    EXPECT_NEAR(oracle::dicke_lggm(8, 4).value, 3.0 / 7.0, 1e-15);
    EXPECT_NEAR(oracle::dicke_lggm(3, 1).value, 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(oracle::dicke_lggm(3, 2).value, 1.0 / 3.0, 1e-15);
    EXPECT_NEAR(oracle::dicke_lggm(9, 4).value, 4.0 / 9.0 - 5.0 / 126.0, 1e-15);
    EXPECT_NEAR(oracle::dicke_lggm(9, 4).value, 0.404762, 1e-6);
    EXPECT_NEAR(oracle::dicke_lggm(7, 3).value, 0.371429, 1e-6);
    EXPECT_NEAR(oracle::dicke_lggm(7, 4).value, oracle::dicke_lggm(7, 3).value, 1e-15);
    EXPECT_THROW(oracle::dicke_ggm(2, 1), InvalidArgument);
    EXPECT_THROW(oracle::dicke_lggm(5, 6), InvalidArgument);
}

TEST(Oracle, DickeLggmBoundedByGgm) {
    for (int n = 3; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            const double g = oracle::dicke_ggm(n, k).value;
            const double e = oracle::dicke_lggm(n, k).value;
            const int kk = std::min(k, n - k);
            const bool strict = n % 2 == 1 && n > 3 && kk == (n - 1) / 2;
            if (strict) {
                EXPECT_LT(e, g - 1e-6) << n << " " << k;
            } else {
                EXPECT_NEAR(e, g, 1e-15) << n << " " << k;
            }
            EXPECT_GE(e, 0.0);
            EXPECT_LE(e, 0.5);
        }
    }
}

TEST(Oracle, DickeAgreesWithNumeric) {
    const int pos[] = {1};
    for (auto [n, k] : {std::pair{3, 1}, {4, 1}, {4, 2}, {5, 2}, {6, 3}, {7, 3}, {7, 2}}) {
        const auto s = build(DickeSpec{n, k});
        EXPECT_NEAR(ggm(s).value, oracle::dicke_ggm(n, k).value, 1e-10) << n << k;
        EXPECT_NEAR(lggm(s, pos).value, oracle::dicke_lggm(n, k).value, 1e-4) << n << k;
    }
}

TEST(Oracle, FourQubitTable) {
    EXPECT_EQ(oracle::fourq_table(7, {2}).value, 0.25);
    EXPECT_EQ(oracle::fourq_table(9, {3}).value, 0.0);
    EXPECT_EQ(oracle::fourq_table(8, {3, 4}).value, 0.25);
    EXPECT_EQ(oracle::fourq_table(8, {4, 3}).value, 0.25);
    EXPECT_EQ(oracle::fourq_table(8, {1}).value, 0.5);
    EXPECT_EQ(oracle::fourq_table(8, {}).value, 0.25);
    EXPECT_EQ(oracle::fourq_table(9, {}).value, 0.0);
    EXPECT_EQ(oracle::fourq_table(9, {1}).value, 0.5);
    EXPECT_EQ(oracle::fourq_table(9, {2, 4}).value, 0.5);
    EXPECT_THROW(oracle::fourq_table(6, {1}), InvalidArgument);
    EXPECT_THROW(oracle::fourq_table(7, {1, 1}), InvalidArgument);
    EXPECT_THROW(oracle::fourq_table(7, {1, 2, 3}), InvalidArgument);
}

TEST(Oracle, WClassFwcReducesToGeneralizedW) {
    // a4 = 0: no phi dependence.
    const WClassSpec s{0.3, 0.2, 0.5};
    for (double theta : {0.0, 0.7, 1.9, M_PI}) {
        EXPECT_NEAR(oracle::wclass_fwc(s, theta, 0.0), oracle::wclass_fwc(s, theta, 2.1), 1e-14);
    }
    // theta = 0: p = (a1 + a2 + a4, a3).
    const WClassSpec t{0.2, 0.3, 0.1};
    const double p1 = 0.2 + 0.3 + 0.4, p2 = 0.1;
    const double expected = std::sqrt(p1 * p1 - 4 * 0.2 * 0.3) + p2;
    EXPECT_NEAR(oracle::wclass_fwc(t, 0.0, 1.0), expected, 1e-14);
    EXPECT_THROW(oracle::wclass_fwc({0.5, 0.5, 0.5}, 0.0, 0.0), InvalidArgument);
}

TEST(Oracle, WClassScalarPathAgreesWithNumeric) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10; ++i) {
        double w[4], t = 0.0;
        for (auto &x : w) {
            x = u(rng) + 0.01;
            t += x;
        }
        const WClassSpec s{w[0] / t, w[1] / t, w[2] / t};
        const int pos[] = {1};
        EXPECT_NEAR(oracle::wclass_lggm(s).value, lggm(build(s), pos).value, 1e-6);
    }
}

TEST(Oracle, DickeRdmMatchesPipeline) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 40; ++i) {
        const int n_total = 4 + static_cast<int>(u(rng) * 4);  // 4..7
        const int k = 1 + static_cast<int>(u(rng) * (n_total - 1));
        const int n_prime = n_total % 2 == 0 ? (n_total - 2) / 2 : (n_total - 1) / 2;
        const int n = 1 + static_cast<int>(u(rng) * n_prime);
        const Angle a{u(rng) * M_PI, u(rng) * 2 * M_PI};
        const int l = u(rng) < 0.5 ? 0 : 1;
        const auto state = build(DickeSpec{n_total, k});
        const int pos[] = {1};
        const Angle angles[] = {a};
        const auto c = project_and_trace(state, pos, angles, l);
        std::vector<int> sub;
        for (int q = 1; q <= n; ++q) {
            sub.push_back(q);
        }
        const auto ref = reduced_density(c.state, sub);
        const auto rho = oracle::dicke_post_measurement_rdm(n_total, k, n, a, l);
        EXPECT_LT((rho.entries - ref.entries).cwiseAbs().maxCoeff(), 1e-10)
            << n_total << " " << k << " " << n << " " << l;
        EXPECT_NEAR(rho.trace(), 1.0, 1e-12);
    }
}

TEST(Oracle, DickeRdmThetaZeroIsDiagonalInDickeBasis) {
    const auto rho = oracle::dicke_post_measurement_rdm(4, 2, 1, {0.0, 0.0}, 0);
    EXPECT_NEAR(std::abs(rho.entries(0, 1)), 0.0, 1e-15);
    EXPECT_NEAR(rho.trace(), 1.0, 1e-14);
    EXPECT_THROW(oracle::dicke_post_measurement_rdm(4, 2, 2, {0.0, 0.0}, 0), InvalidArgument);
    EXPECT_THROW(oracle::dicke_post_measurement_rdm(4, 2, 1, {0.0, 0.0}, 2), InvalidArgument);
}

}  // namespace
}  // namespace lggm
