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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lggm/ggm.hpp"
#include "lggm/localize.hpp"
#include "lggm/qstate.hpp"

namespace lggm {

enum class Family {
    /// Complex Gaussian amplitudes on all 2^N basis states.
    Haar,
    /// Complex Gaussian coefficients a_i of the generalized W state.
    GeneralizedW,
    /// Complex Gaussian coefficients of the Dicke states |D^N_k>, k = 0..N.
    DickeSuperposition,
    /// Three-qubit W class: (a1, a2, a3, a4) uniform on the simplex.
    WClass,
    /// Three-qubit GHZ class with uniformly drawn angles.
    GhzClass,
    /// Four-qubit class `class_index` with complex Gaussian parameters.
    FourQubitClass,
    /// Three qubits, alternating Haar (GHZ class) and W-class samples, the
    /// latter rotated by random local unitaries.
    MixedThreeQubit,
};

std::optional<Family> parse_family(const std::string &name);
std::string to_string(Family family);

struct CampaignSpec {
    Family family = Family::Haar;
    int n_qubits = 3;
    int class_index = 1;
    int n_samples = 10000;
    std::uint64_t seed = 1;

    bool measure_g = true;
    bool measure_el1 = true;
    bool measure_el12 = false;
    /// max_r E_L^r over single-qubit positions.
    bool measure_global = false;
    /// Three-qubit conjecture check per sample (implies E_L^r for all r).
    bool check_conjecture = false;

    double equality_tolerance = 1e-4;
    OptimizerSettings optimizer;
    CutPolicy policy = AllCuts{};
    int workers = 0;  // 0 = worker_count()
};

/// Throws InvalidArgument when the campaign settings are inconsistent.
void check_campaign_spec(const CampaignSpec &spec);

/// Seed of sample `index`; independent of worker scheduling.
std::uint64_t sample_seed(std::uint64_t campaign_seed, std::uint64_t index);

PureState sample_state(const CampaignSpec &spec, std::uint64_t index);

struct CampaignRow {
    std::uint64_t index = 0;
    std::uint64_t seed = 0;
    std::optional<double> g;
    std::optional<double> el1;
    std::optional<double> el12;
    std::optional<double> global;
    std::optional<bool> conjecture_holds;
};

/// Counts of x > y, x == y (within tolerance), x < y.
struct Comparison {
    std::size_t greater = 0;
    std::size_t equal = 0;
    std::size_t less = 0;

    std::size_t total() const {
        return greater + equal + less;
    }
    double fraction_greater() const;
    double fraction_equal() const;
    double fraction_less() const;
    void add(double x, double y, double tolerance);
};

struct CampaignSummary {
    std::size_t n_samples = 0;
    std::optional<Comparison> el1_vs_g;
    std::optional<Comparison> el12_vs_g;
    std::optional<Comparison> el12_vs_el1;
    /// The same two comparisons restricted to samples with EL1 <= G
    /// (equality within tolerance included) ...
    std::optional<Comparison> el12_vs_g_given_el1_le_g;
    std::optional<Comparison> el12_vs_el1_given_el1_le_g;
    /// ... and to samples with EL1 < G beyond tolerance.
    std::optional<Comparison> el12_vs_g_given_el1_lt_g;
    std::optional<Comparison> el12_vs_el1_given_el1_lt_g;
    std::optional<std::size_t> conjecture_violations;
};

CampaignRow evaluate_sample(const CampaignSpec &spec, std::uint64_t index);

/// Rows in index order.
std::vector<CampaignRow> run_campaign(const CampaignSpec &spec);

CampaignSummary summarize(const std::vector<CampaignRow> &rows, double equality_tolerance);

/// CSV with a header row; columns present only for computed measures.
void write_campaign_csv(std::ostream &out, const std::vector<CampaignRow> &rows);

/// Summary as a JSON document.
std::string summary_json(const CampaignSpec &spec, const CampaignSummary &summary);

}  // namespace lggm
