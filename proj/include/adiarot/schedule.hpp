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

#ifndef ADIAROT_SCHEDULE_HPP
#define ADIAROT_SCHEDULE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "adiarot/spectra.hpp"

namespace adiarot {

/// Piecewise-linear theta(t) for one stage. t starts at 0 and is strictly
/// increasing; theta runs monotonically from the stage's start to its end.
struct Schedule {
    std::size_t stage = 0;
    std::vector<double> t;
    std::vector<double> theta;
    /// |dtheta/dt| at each sample.
    std::vector<double> rate;
    double total_time = 0.0;
    /// Rate prefactor used to build the schedule; zero for linear schedules.
    double epsilon = 0.0;

    std::size_t size() const { return t.size(); }
    double theta_at(double time) const;
};

Schedule linear_schedule(double theta_start, double theta_end, double total_time, std::size_t stage = 0,
                         std::size_t samples = 401);

struct LocalScheduleOptions {
    double epsilon = 0.05;
    double coupling_floor = 1e-8;
};

/// |dtheta/dt| = epsilon * min_k g_k^2 / c_k at each trace point, over the
/// tracked excited levels with c_k above the coupling floor. A coupled level
/// whose gap vanishes (<= 1e-12) is a protocol failure (NumericalError).
/// Where no level is coupled the smallest nonzero gap over the floor sets
/// the rate.
std::vector<double> local_adiabatic_rates(const SpectrumTrace &trace, const LocalScheduleOptions &options = {});

/// Schedule on the trace grid with the rates above; total time by the
/// trapezoid rule on dt/dtheta.
Schedule local_adiabatic_schedule(const SpectrumTrace &trace, const LocalScheduleOptions &options = {});

/// Schedule on an arbitrary theta grid given |dtheta/dt| at each point.
Schedule schedule_from_rates(std::size_t stage, std::span<const double> theta, std::span<const double> rates,
                             double epsilon);

}  // namespace adiarot

#endif
