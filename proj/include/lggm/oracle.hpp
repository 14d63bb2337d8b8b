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
#include <string>
#include <vector>

#include "lggm/qstate.hpp"

namespace lggm::oracle {

/// Closed-form value together with the formula that produced it.
struct AnalyticValue {
    double value = 0.0;
    std::string formula_id;
    std::string validity;
};

/// E_L^1 of a|0..0> + b|1..1> with |b|^2 = a2_sq <= 1/2.
AnalyticValue gghz_lggm(double a2_sq);

/// E_L^r of the three-qubit generalized W state with weights a_sq:
/// the smaller of the two weights not on qubit r.
AnalyticValue gw_lggm_table(const std::array<double, 3> &a_sq, int r);

/// GGM of the Dicke state |D^N_k>.
AnalyticValue dicke_ggm(int n_qubits, int excitations);

/// Single-qubit LGGM of |D^N_k>.
AnalyticValue dicke_lggm(int n_qubits, int excitations);

/// Entries of the four-qubit table for classes 7, 8 and 9. `positions` is
/// empty for the GGM, one qubit for E_L^r or two qubits for E_L^{r1,r2}.
AnalyticValue fourq_table(int class_index, const std::vector<int> &positions);

/// f_wc(theta, phi) for the W-class state sqrt(a1)|001> + sqrt(a2)|010>
/// + sqrt(a3)|100> + sqrt(a4)|000>, measured on qubit 1.
double wclass_fwc(const WClassSpec &spec, double theta, double phi);

/// (1 - min f_wc) / 2 with the minimizing angles.
struct WClassLggm {
    double value = 0.0;
    Angle angle;
};
WClassLggm wclass_lggm(const WClassSpec &spec);

/// Reduced density matrix on n qubits of outcome `outcome` (0 or 1) after
/// measuring one qubit of |D^N_k> in the basis `angle`. The matrix is
/// returned in the 2^n computational basis.
DensityMatrix dicke_post_measurement_rdm(int n_qubits, int excitations, int n, const Angle &angle, int outcome);

}  // namespace lggm::oracle
