// Copyright 2026 The adiarot Authors
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


#include "adiarot/fit.hpp"

#include <algorithm>
#include <cmath>

#include "adiarot/errors.hpp"

namespace adiarot {

PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw ValidationError("power-law fit needs at least two matching points");
    }
    const auto n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
            throw ValidationError("power-law fit needs positive data");
        }
        double lx = std::log(x[i]);
        double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-300) {
        throw ValidationError("power-law fit needs distinct x values");
    }
    PowerLawFit fit;
    fit.exponent = (n * sxy - sx * sy) / denom;
    fit.prefactor = std::exp((sy - fit.exponent * sx) / n);
    for (std::size_t i = 0; i < x.size(); ++i) {
        double model = fit.prefactor * std::pow(x[i], fit.exponent);
        fit.max_relative_residual = std::max(fit.max_relative_residual, std::abs(y[i] / model - 1.0));
    }
    return fit;
}

}  // namespace adiarot
