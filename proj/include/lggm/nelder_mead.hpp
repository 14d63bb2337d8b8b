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

#include <functional>
#include <span>
#include <vector>

namespace lggm {

struct NelderMeadSettings {
    int max_iterations = 200;
    /// Stop once every vertex lies within this distance of the best one.
    double tolerance = 1e-7;
    /// Edge length of the initial axis-aligned simplex.
    double initial_step = 0.1;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    int evaluations = 0;
    bool converged = false;
};

/// Derivative-free minimization with the standard reflection (1),
/// expansion (2), contraction (1/2) and shrink (1/2) coefficients.
NelderMeadResult nelder_mead_minimize(const std::function<double(std::span<const double>)> &objective,
                                      std::vector<double> start, const NelderMeadSettings &settings = {});

}  // namespace lggm
