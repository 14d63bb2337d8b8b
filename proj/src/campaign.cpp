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

#include "lggm/campaign.hpp"

#include <cmath>
#include <ostream>
#include <random>

#include <fmt/format.h>

#include "json.hpp"
#include "lggm/detail/bits.hpp"
#include "lggm/error.hpp"
#include "lggm/parallel.hpp"

namespace lggm {

namespace {

struct FamilyName {
    Family family;
    const char *name;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::Haar, "haar"},
    {Family::GeneralizedW, "gw"},
    {Family::DickeSuperposition, "dicke-superposition"},
    {Family::WClass, "wclass"},
    {Family::GhzClass, "ghzclass"},
    {Family::FourQubitClass, "fourq"},
    {Family::MixedThreeQubit, "mixed3"},
};

std::vector<Complex> gaussian_coefficients(std::mt19937_64 &rng, std::size_t count) {
    std::normal_distribution<double> normal;
    std::vector<Complex> a(count);
    for (auto &x : a) {
        const double re = normal(rng);
        x = {re, normal(rng)};
    }
    return a;
}

WClassSpec sample_wclass(std::mt19937_64 &rng) {
    const auto g = gaussian_coefficients(rng, 4);
    double w[4], total = 0.0;
    for (int i = 0; i < 4; ++i) {
        w[i] = std::norm(g[i]);
        total += w[i];
    }
    return {w[0] / total, w[1] / total, w[2] / total};
}

std::string fmt_optional(const std::optional<double> &v) {
    return v ? fmt::format("{:.9g}", *v) : std::string();
}

nlohmann::json comparison_json(const Comparison &c) {
    return {{"greater", c.greater},
            {"equal", c.equal},
            {"less", c.less},
            {"fraction_greater", c.fraction_greater()},
            {"fraction_equal", c.fraction_equal()},
            {"fraction_less", c.fraction_less()}};
}

}  // namespace

std::optional<Family> parse_family(const std::string &name) {
    for (const auto &f : kFamilyNames) {
        if (name == f.name) {
            return f.family;
        }
    }
    return std::nullopt;
}

std::string to_string(Family family) {
    for (const auto &f : kFamilyNames) {
        if (f.family == family) {
            return f.name;
        }
    }
    return "?";
}

void check_campaign_spec(const CampaignSpec &spec) {
    if (spec.n_samples < 1) {
        throw InvalidArgument("a campaign needs at least one sample");
    }
    const bool three_only =
        spec.family == Family::WClass || spec.family == Family::GhzClass || spec.family == Family::MixedThreeQubit;
    if (three_only && spec.n_qubits != 3) {
        throw InvalidArgument("family " + to_string(spec.family) + " is defined for three qubits");
    }
    if (spec.family == Family::FourQubitClass) {
        if (spec.n_qubits != 4) {
            throw InvalidArgument("four-qubit classes need n_qubits = 4");
        }
        if (spec.class_index < 1 || spec.class_index > 9) {
            throw InvalidArgument("four-qubit class index must lie in 1..9");
        }
    }
    if (spec.n_qubits < 3) {
        throw InvalidArgument("campaigns need at least three qubits");
    }
    check_dimension(spec.n_qubits);
    if (spec.measure_el12 && spec.n_qubits < 4) {
        throw InvalidArgument("EL12 needs at least four qubits");
    }
    if (spec.check_conjecture && spec.n_qubits != 3) {
        throw InvalidArgument("the conjecture check applies to three-qubit states");
    }
    if (!(spec.equality_tolerance >= 0.0)) {
        throw InvalidArgument("equality tolerance must be non-negative");
    }
}

std::uint64_t sample_seed(std::uint64_t campaign_seed, std::uint64_t index) {
    return detail::splitmix64(campaign_seed ^ detail::splitmix64(index));
}

PureState sample_state(const CampaignSpec &spec, std::uint64_t index) {
    const std::uint64_t seed = sample_seed(spec.seed, index);
    std::mt19937_64 rng(seed);
    const int n = spec.n_qubits;
    switch (spec.family) {
        case Family::Haar:
            return haar_random(n, seed);
        case Family::GeneralizedW:
            return build(GeneralizedWSpec{gaussian_coefficients(rng, n)});
        case Family::DickeSuperposition:
            return build(DickeSuperpositionSpec{gaussian_coefficients(rng, n + 1)});
        case Family::WClass:
            return build(sample_wclass(rng));
        case Family::GhzClass: {
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            GhzClassSpec s{};
            s.delta = M_PI / 4.0 * (1.0 - unit(rng));
            s.gamma1 = M_PI / 2.0 * (1.0 - unit(rng));
            s.gamma2 = M_PI / 2.0 * (1.0 - unit(rng));
            s.gamma3 = M_PI / 2.0 * (1.0 - unit(rng));
            s.mu = 2.0 * M_PI * unit(rng);
            return build(s);
        }
        case Family::FourQubitClass: {
            auto a = gaussian_coefficients(rng, 4);
            FourQubitClassSpec s{spec.class_index, {}};
            for (int i = 0; i < 4; ++i) {
                s.a[i] = {std::abs(a[i].real()), a[i].imag()};
            }
            return build(s);
        }
        case Family::MixedThreeQubit: {
            if (index % 2 == 0) {
                return haar_random(3, seed);
            }
            const auto w = build(sample_wclass(rng));
            std::vector<Eigen::Matrix2cd> u;
            for (std::uint64_t q = 0; q < 3; ++q) {
                u.push_back(haar_unitary_2x2(detail::splitmix64(seed + q + 1)));
            }
            return apply_local_unitaries(w, u);
        }
    }
    throw InvalidArgument("unknown family");
}

double Comparison::fraction_greater() const {
    return total() == 0 ? 0.0 : static_cast<double>(greater) / total();
}
double Comparison::fraction_equal() const {
    return total() == 0 ? 0.0 : static_cast<double>(equal) / total();
}
double Comparison::fraction_less() const {
    return total() == 0 ? 0.0 : static_cast<double>(less) / total();
}

void Comparison::add(double x, double y, double tolerance) {
    if (std::abs(x - y) <= tolerance) {
        ++equal;
    } else if (x > y) {
        ++greater;
    } else {
        ++less;
    }
}

CampaignRow evaluate_sample(const CampaignSpec &spec, std::uint64_t index) {
    const auto state = sample_state(spec, index);
    CampaignRow row;
    row.index = index;
    row.seed = sample_seed(spec.seed, index);
    if (spec.measure_g) {
        row.g = ggm(state, spec.policy).value;
    }
    if (spec.check_conjecture) {
        const auto report = conjecture_check(state, spec.optimizer, spec.equality_tolerance);
        row.conjecture_holds = report.holds();
        row.g = report.ggm.value;
        if (spec.measure_el1) {
            row.el1 = report.localized[0];
        }
        if (spec.measure_global) {
            row.global = report.global;
        }
    }
    if (spec.measure_el1 && !row.el1) {
        const int pos[] = {1};
        row.el1 = lggm(state, pos, spec.optimizer, spec.policy).value;
    }
    if (spec.measure_el12) {
        const int pos[] = {1, 2};
        row.el12 = lggm(state, pos, spec.optimizer, spec.policy).value;
    }
    if (spec.measure_global && !row.global) {
        row.global = global_lggm(state, 1, spec.optimizer, spec.policy).best.value;
    }
    return row;
}

std::vector<CampaignRow> run_campaign(const CampaignSpec &spec) {
    check_campaign_spec(spec);
    std::vector<CampaignRow> rows(spec.n_samples);
    parallel_for(
        rows.size(), [&](std::size_t i) { rows[i] = evaluate_sample(spec, i); },
        spec.workers > 0 ? spec.workers : worker_count());
    return rows;
}

CampaignSummary summarize(const std::vector<CampaignRow> &rows, double equality_tolerance) {
    CampaignSummary s;
    s.n_samples = rows.size();
    const double tol = equality_tolerance;
    auto bump = [&](std::optional<Comparison> &c, double x, double y) {
        if (!c) {
            c.emplace();
        }
        c->add(x, y, tol);
    };
    for (const auto &r : rows) {
        if (r.g && r.el1) {
            bump(s.el1_vs_g, *r.el1, *r.g);
        }
        if (r.g && r.el12) {
            bump(s.el12_vs_g, *r.el12, *r.g);
        }
        if (r.el1 && r.el12) {
            bump(s.el12_vs_el1, *r.el12, *r.el1);
        }
        if (r.g && r.el1 && r.el12 && *r.el1 <= *r.g + tol) {
            bump(s.el12_vs_g_given_el1_le_g, *r.el12, *r.g);
            bump(s.el12_vs_el1_given_el1_le_g, *r.el12, *r.el1);
        }
        if (r.g && r.el1 && r.el12 && *r.el1 < *r.g - tol) {
            bump(s.el12_vs_g_given_el1_lt_g, *r.el12, *r.g);
            bump(s.el12_vs_el1_given_el1_lt_g, *r.el12, *r.el1);
        }
        if (r.conjecture_holds) {
            s.conjecture_violations = s.conjecture_violations.value_or(0) + (*r.conjecture_holds ? 0 : 1);
        }
    }
    return s;
}

void write_campaign_csv(std::ostream &out, const std::vector<CampaignRow> &rows) {
    if (rows.empty()) {
        out << "seed_index,seed\n";
        return;
    }
    const auto &f = rows.front();
    out << "seed_index,seed";
    out << (f.g ? ",G" : "") << (f.el1 ? ",EL1" : "") << (f.el12 ? ",EL12" : "") << (f.global ? ",EGL" : "")
        << (f.conjecture_holds ? ",conjecture" : "") << '\n';
    for (const auto &r : rows) {
        out << r.index << ',' << r.seed;
        if (f.g) {
            out << ',' << fmt_optional(r.g);
        }
        if (f.el1) {
            out << ',' << fmt_optional(r.el1);
        }
        if (f.el12) {
            out << ',' << fmt_optional(r.el12);
        }
        if (f.global) {
            out << ',' << fmt_optional(r.global);
        }
        if (f.conjecture_holds) {
            out << ',' << (r.conjecture_holds.value_or(false) ? 1 : 0);
        }
        out << '\n';
    }
}

std::string summary_json(const CampaignSpec &spec, const CampaignSummary &summary) {
    nlohmann::json j;
    j["family"] = to_string(spec.family);
    j["n_qubits"] = spec.n_qubits;
    if (spec.family == Family::FourQubitClass) {
        j["class_index"] = spec.class_index;
    }
    j["n_samples"] = summary.n_samples;
    j["seed"] = spec.seed;
    j["equality_tolerance"] = spec.equality_tolerance;
    auto put = [&](const char *key, const std::optional<Comparison> &c) {
        if (c) {
            j[key] = comparison_json(*c);
        }
    };
    put("EL1_vs_G", summary.el1_vs_g);
    put("EL12_vs_G", summary.el12_vs_g);
    put("EL12_vs_EL1", summary.el12_vs_el1);
    put("EL12_vs_G_given_EL1_le_G", summary.el12_vs_g_given_el1_le_g);
    put("EL12_vs_EL1_given_EL1_le_G", summary.el12_vs_el1_given_el1_le_g);
    put("EL12_vs_G_given_EL1_lt_G", summary.el12_vs_g_given_el1_lt_g);
    put("EL12_vs_EL1_given_EL1_lt_G", summary.el12_vs_el1_given_el1_lt_g);
    if (summary.conjecture_violations) {
        j["conjecture_violations"] = *summary.conjecture_violations;
    }
    return j.dump(2);
}

}  // namespace lggm
