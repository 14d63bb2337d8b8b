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

#include "lggm/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lggm/error.hpp"

namespace lggm {

namespace {

double distance(const std::vector<double> &a, const std::vector<double> &b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += (a[i] - b[i]) * (a[i] - b[i]);
    }
    return std::sqrt(s);
}

}  // namespace

NelderMeadResult nelder_mead_minimize(const std::function<double(std::span<const double>)> &objective,
                                      std::vector<double> start, const NelderMeadSettings &settings) {
    const std::size_t dim = start.size();
    if (dim == 0) {
        throw InvalidArgument("Nelder-Mead needs at least one parameter");
    }
    if (!(settings.initial_step > 0.0) || !(settings.tolerance > 0.0)) {
        throw InvalidArgument("Nelder-Mead step and tolerance must be positive");
    }

    NelderMeadResult result;
    auto eval = [&](const std::vector<double> &x) {
        ++result.evaluations;
        return objective(x);
    };

    std::vector<std::vector<double>> simplex(dim + 1, start);
    for (std::size_t i = 0; i < dim; ++i) {
        simplex[i + 1][i] += settings.initial_step;
    }
    std::vector<double> values(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) {
        values[i] = eval(simplex[i]);
    }

    std::vector<std::size_t> order(dim + 1);
    std::vector<double> centroid(dim), trial(dim), trial2(dim);
    auto point_along = [&](double t, std::vector<double> &out, const std::vector<double> &worst) {
        for (std::size_t k = 0; k < dim; ++k) {
            out[k] = centroid[k] + t * (worst[k] - centroid[k]);
        }
    };

    while (true) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[dim - 1];

        double diameter = 0.0;
        for (std::size_t i = 0; i <= dim; ++i) {
            diameter = std::max(diameter, distance(simplex[i], simplex[best]));
        }
        if (diameter < settings.tolerance) {
            result.converged = true;
            break;
        }
        if (result.iterations >= settings.max_iterations) {
            break;
        }
        ++result.iterations;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == worst) {
                continue;
            }
            for (std::size_t k = 0; k < dim; ++k) {
                centroid[k] += simplex[i][k] / static_cast<double>(dim);
            }
        }

        point_along(-1.0, trial, simplex[worst]);
        const double f_reflect = eval(trial);
        if (f_reflect < values[best]) {
            point_along(-2.0, trial2, simplex[worst]);
            const double f_expand = eval(trial2);
            if (f_expand < f_reflect) {
                simplex[worst] = trial2;
                values[worst] = f_expand;
            } else {
                simplex[worst] = trial;
                values[worst] = f_reflect;
            }
            continue;
        }
        if (f_reflect < values[second_worst]) {
            simplex[worst] = trial;
            values[worst] = f_reflect;
            continue;
        }
        // Outside contraction if the reflection improved on the worst point,
        // inside contraction otherwise.
        const bool outside = f_reflect < values[worst];
        point_along(outside ? -0.5 : 0.5, trial2, simplex[worst]);
        const double f_contract = eval(trial2);
        if (f_contract < (outside ? f_reflect : values[worst])) {
            simplex[worst] = trial2;
            values[worst] = f_contract;
            continue;
        }
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == best) {
                continue;
            }
            for (std::size_t k = 0; k < dim; ++k) {
                simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
            }
            values[i] = eval(simplex[i]);
        }
    }

    const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
    result.x = simplex[best];
    result.value = values[best];
    return result;
}

}  // namespace lggm
