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


#ifndef ADIAROT_FIT_HPP
#define ADIAROT_FIT_HPP

#include <span>

namespace adiarot {

struct PowerLawFit {
    double exponent = 0.0;
    double prefactor = 0.0;
    /// Largest |y / (prefactor x^exponent) - 1| over the points.
    double max_relative_residual = 0.0;
};

/// Least-squares line through (log x, log y). Needs at least two points
/// with positive coordinates.
PowerLawFit fit_power_law(std::span<const double> x, std::span<const double> y);

}  // namespace adiarot

#endif
