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

#ifndef ADIAROT_EVOLVE_HPP
#define ADIAROT_EVOLVE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "adiarot/schedule.hpp"
#include "adiarot/tdham.hpp"

namespace adiarot {

/// exp(-i h dt) psi. Dense operators are exponentiated through their
/// eigendecomposition, sparse ones by a Lanczos exponential.
StateVector step(const OperatorMatrix &h, double dt, const StateVector &psi);

/// |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);

/// Weight of `psi` in the lowest (possibly degenerate) eigenspace of `h`.
double ground_space_overlap(const OperatorMatrix &h, const StateVector &psi);

struct OverlapSample {
    double t = 0.0;  ///< cumulative time since the start of the protocol
    double theta = 0.0;
    std::size_t stage = 0;
    double ground_overlap = 0.0;
    double norm = 1.0;
    /// Index into the stage's schedule when the sample sits on a schedule
    /// point, otherwise npos.
    std::size_t schedule_index = static_cast<std::size_t>(-1);
};

struct EvolutionReport {
    StateVector final_state;
    double target_fidelity = 0.0;
    std::vector<OverlapSample> overlap_trace;
    double norm_drift = 0.0;
    double total_time = 0.0;
    /// Ground-space overlap at the end of each stage.
    std::vector<double> per_stage_fidelity;
    std::size_t steps = 0;

    double min_ground_overlap() const;
};

struct PropagateOptions {
    /// Cap on the theta change of one propagation step.
    double max_dtheta = 1e-3;
    /// Cap on the duration of one propagation step.
    double max_dt = 0.5;
    std::size_t min_overlap_points = 64;
    /// Allowed norm drift per unit of evolution time.
    double norm_drift_per_time = 1e-9;
};

/// Runs every stage in order under its schedule, holding H at the midpoint
/// theta of each step. Throws ValidationError on a schedule/stage mismatch
/// or unnormalized input and NumericalError when the norm drifts beyond
/// options.norm_drift_per_time * max(1, T).
EvolutionReport propagate(const StagedHamiltonian &h, std::span<const Schedule> schedules, const StateVector &psi0,
                          const StateVector &target, const PropagateOptions &options = {});

}  // namespace adiarot

#endif
