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

#include "adiarot/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adiarot/errors.hpp"
#include "adiarot/krylov.hpp"
#include "adiarot/spectra.hpp"

namespace adiarot {

StateVector step(const OperatorMatrix &h, double dt, const StateVector &psi) {
    if (!(dt > 0.0)) {
        throw ValidationError("step needs a positive time step");
    }
    if (static_cast<std::size_t>(psi.size()) != h.dimension()) {
        throw ValidationError("step: state dimension does not match the Hamiltonian");
    }
    StateVector out;
    if (h.is_sparse()) {
        out = krylov_expm(h, dt, psi);
    } else {
        Eigenpairs eig = dense_eigenpairs(h.dense());
        StateVector coeffs = eig.vectors.adjoint() * psi;
        for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
            coeffs(i) *= std::exp(cplx(0.0, -eig.values(i) * dt));
        }
        out = eig.vectors * coeffs;
    }
    if (!out.allFinite()) {
        throw NumericalError("non-finite amplitudes after a propagation step");
    }
    return out;
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(a.dot(b));
}

double ground_space_overlap(const OperatorMatrix &h, const StateVector &psi) {
    std::size_t k = h.dimension() <= kDensePartialLimit ? h.dimension() : std::min<std::size_t>(h.dimension(), 8);
    Eigenpairs eig = low_spectrum(h, k);
    Eigen::Index cluster = 1;
    while (cluster < eig.values.size() && eig.values(cluster) - eig.values(0) <= kDegeneracyTolerance) {
        ++cluster;
    }
    return (eig.vectors.leftCols(cluster).adjoint() * psi).squaredNorm();
}

double EvolutionReport::min_ground_overlap() const {
    double best = 1.0;
    for (const auto &s : overlap_trace) {
        best = std::min(best, s.ground_overlap);
    }
    return best;
}

EvolutionReport propagate(const StagedHamiltonian &h, std::span<const Schedule> schedules, const StateVector &psi0,
                          const StateVector &target, const PropagateOptions &options) {
    if (schedules.size() != h.stage_count()) {
        throw ValidationError("propagate: " + std::to_string(schedules.size()) + " schedules for " +
                              std::to_string(h.stage_count()) + " stages");
    }
    const auto dim = static_cast<Eigen::Index>(h.dimension());
    if (psi0.size() != dim || target.size() != dim) {
        throw ValidationError("propagate: state dimension does not match the Hamiltonian");
    }
    if (std::abs(psi0.norm() - 1.0) > 1e-9 || std::abs(target.norm() - 1.0) > 1e-9) {
        throw ValidationError("propagate: initial and target states must be normalized");
    }
    for (std::size_t s = 0; s < schedules.size(); ++s) {
        const Schedule &sch = schedules[s];
        const Stage &st = h.stage(s);
        if (sch.stage != s || sch.size() < 2 || std::abs(sch.theta.front() - st.theta_start) > 1e-9 ||
            std::abs(sch.theta.back() - st.theta_end) > 1e-9) {
            throw ValidationError("propagate: schedule " + std::to_string(s) + " does not cover stage " +
                                  std::to_string(s));
        }
    }

    EvolutionReport report;
    StateVector psi = psi0;
    double clock = 0.0;

    auto record = [&](std::size_t stage, double theta, std::size_t index) {
        OverlapSample sample;
        sample.t = clock;
        sample.theta = theta;
        sample.stage = stage;
        sample.norm = psi.norm();
        sample.ground_overlap = ground_space_overlap(h.evaluate(stage, theta), psi / sample.norm);
        sample.schedule_index = index;
        report.overlap_trace.push_back(sample);
    };

    for (std::size_t s = 0; s < schedules.size(); ++s) {
        const Schedule &sch = schedules[s];
        const std::size_t segments = sch.size() - 1;
        // With a coarse schedule every sub-step is recorded so that each stage
        // still gets min_overlap_points samples.
        const bool dense_records = sch.size() < options.min_overlap_points;
        const std::size_t min_sub =
            dense_records ? (options.min_overlap_points + segments - 1) / segments : 1;

        record(s, sch.theta.front(), 0);
        for (std::size_t i = 0; i < segments; ++i) {
            double dtheta = sch.theta[i + 1] - sch.theta[i];
            double dt_seg = sch.t[i + 1] - sch.t[i];
            auto n_sub = static_cast<std::size_t>(std::max(
                {std::ceil(std::abs(dtheta) / options.max_dtheta), std::ceil(dt_seg / options.max_dt), 1.0}));
            n_sub = std::max(n_sub, min_sub);
            double dt = dt_seg / static_cast<double>(n_sub);
            for (std::size_t j = 0; j < n_sub; ++j) {
                double mid = sch.theta[i] + dtheta * (static_cast<double>(j) + 0.5) / static_cast<double>(n_sub);
                if (dt > 0.0) {
                    psi = step(h.evaluate(s, mid), dt, psi);
                }
                clock += dt;
                ++report.steps;
                report.norm_drift = std::max(report.norm_drift, std::abs(psi.norm() - 1.0));
                if (dense_records && j + 1 < n_sub) {
                    double theta = sch.theta[i] + dtheta * static_cast<double>(j + 1) / static_cast<double>(n_sub);
                    record(s, theta, static_cast<std::size_t>(-1));
                }
            }
            record(s, sch.theta[i + 1], i + 1);
        }
        report.per_stage_fidelity.push_back(report.overlap_trace.back().ground_overlap);
    }

    report.total_time = clock;
    report.final_state = psi;
    report.target_fidelity = std::clamp(fidelity(target, psi / psi.norm()), 0.0, 1.0);
    double allowed = options.norm_drift_per_time * std::max(1.0, clock);
    if (report.norm_drift > allowed) {
        throw NumericalError("norm drift " + std::to_string(report.norm_drift) + " exceeds " + std::to_string(allowed));
    }
    return report;
}

}  // namespace adiarot
