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

#include "adiarot/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "adiarot/errors.hpp"

namespace adiarot {

namespace {
constexpr double kVanishingGap = 1e-12;
}

double Schedule::theta_at(double time) const {
    if (t.empty()) {
        throw ValidationError("empty schedule");
    }
    if (time <= t.front()) {
        return theta.front();
    }
    if (time >= t.back()) {
        return theta.back();
    }
    auto it = std::upper_bound(t.begin(), t.end(), time);
    auto i = static_cast<std::size_t>(it - t.begin());
    double f = (time - t[i - 1]) / (t[i] - t[i - 1]);
    return theta[i - 1] + f * (theta[i] - theta[i - 1]);
}

Schedule linear_schedule(double theta_start, double theta_end, double total_time, std::size_t stage,
                         std::size_t samples) {
    if (!(total_time > 0.0)) {
        throw ValidationError("linear schedule needs a positive total time");
    }
    if (samples < 2) {
        throw ValidationError("a schedule needs at least two samples");
    }
    Schedule out;
    out.stage = stage;
    out.total_time = total_time;
    double rate = std::abs(theta_end - theta_start) / total_time;
    for (std::size_t i = 0; i < samples; ++i) {
        double f = static_cast<double>(i) / static_cast<double>(samples - 1);
        out.t.push_back(total_time * f);
        out.theta.push_back(theta_start + (theta_end - theta_start) * f);
        out.rate.push_back(rate);
    }
    out.t.back() = total_time;
    out.theta.back() = theta_end;
    return out;
}

std::vector<double> local_adiabatic_rates(const SpectrumTrace &trace, const LocalScheduleOptions &options) {
    if (!(options.epsilon > 0.0)) {
        throw ValidationError("epsilon must be positive");
    }
    if (!(options.coupling_floor > 0.0)) {
        throw ValidationError("coupling floor must be positive");
    }
    if (trace.level_count() < 2) {
        throw ValidationError("local schedule needs at least one excited level in the trace");
    }
    std::vector<double> rates(trace.size());
    for (std::size_t i = 0; i < trace.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        double smallest_gap = std::numeric_limits<double>::infinity();
        for (std::size_t k = 1; k < trace.level_count(); ++k) {
            double g = trace.gap(i, k);
            double c = trace.couplings[i][k];
            if (g > kVanishingGap) {
                smallest_gap = std::min(smallest_gap, g);
            }
            // Levels the drive cannot reach put no limit on the speed.
            if (c <= options.coupling_floor) {
                continue;
            }
            if (g <= kVanishingGap) {
                throw NumericalError("vanishing gap at theta = " + std::to_string(trace.theta[i]) +
                                     " on a coupled level");
            }
            best = std::min(best, g * g / c);
        }
        if (!std::isfinite(best)) {
            // dH/dtheta annihilates the ground state here; only the floor caps the rate.
            if (!std::isfinite(smallest_gap)) {
                throw NumericalError("no gapped excited level at theta = " + std::to_string(trace.theta[i]));
            }
            best = smallest_gap * smallest_gap / options.coupling_floor;
        }
        rates[i] = options.epsilon * best;
    }
    return rates;
}

Schedule local_adiabatic_schedule(const SpectrumTrace &trace, const LocalScheduleOptions &options) {
    std::vector<double> rates = local_adiabatic_rates(trace, options);
    return schedule_from_rates(trace.stage, trace.theta, rates, options.epsilon);
}

Schedule schedule_from_rates(std::size_t stage, std::span<const double> theta, std::span<const double> rates,
                             double epsilon) {
    if (theta.size() < 2 || theta.size() != rates.size()) {
        throw ValidationError("schedule needs matching theta and rate samples");
    }
    Schedule out;
    out.stage = stage;
    out.epsilon = epsilon;
    out.t.push_back(0.0);
    for (std::size_t i = 0; i < theta.size(); ++i) {
        if (!(rates[i] > 0.0) || !std::isfinite(rates[i])) {
            throw NumericalError("non-positive schedule rate at theta = " + std::to_string(theta[i]));
        }
        if (i > 0) {
            double dtheta = std::abs(theta[i] - theta[i - 1]);
            out.t.push_back(out.t.back() + 0.5 * dtheta * (1.0 / rates[i - 1] + 1.0 / rates[i]));
        }
    }
    out.theta.assign(theta.begin(), theta.end());
    out.rate.assign(rates.begin(), rates.end());
    out.total_time = out.t.back();
    return out;
}

}  // namespace adiarot
