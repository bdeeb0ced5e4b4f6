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

#include "adiarot/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "adiarot/errors.hpp"
#include "adiarot/parallel.hpp"

namespace adiarot {

namespace {

constexpr double kHermitianInputTolerance = 1e-10;
constexpr std::size_t kKrylovDefaultLevels = 16;

struct PointResult {
    std::vector<double> levels;
    std::vector<double> couplings;
};

// [begin, end) ranges of sorted levels that lie within the degeneracy tolerance.
std::vector<std::pair<std::size_t, std::size_t>> clusters(const RealVector &values) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const auto n = static_cast<std::size_t>(values.size());
    std::size_t begin = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i == n || values(static_cast<Eigen::Index>(i)) - values(static_cast<Eigen::Index>(i - 1)) > kDegeneracyTolerance) {
            out.emplace_back(begin, i);
            begin = i;
        }
    }
    return out;
}

std::size_t resolve_level_count(const StagedHamiltonian &h, std::size_t k) {
    if (k != 0) {
        return k;
    }
    return h.dimension() <= kDensePartialLimit ? h.dimension() : std::min(h.dimension(), kKrylovDefaultLevels);
}

PointResult analyze_point(const StagedHamiltonian &h, std::size_t stage, double theta, std::size_t k) {
    Eigenpairs eig = low_spectrum(h.evaluate(stage, theta), k);
    auto groups = clusters(eig.values);
    const auto [g_begin, g_end] = groups.front();

    StateVector ground = eig.vectors.col(0);
    if (g_end - g_begin > 1) {
        // Degenerate ground space: follow the branch coming from the stage
        // interior by projecting a nearby nondegenerate ground state.
        const Stage &st = h.stage(stage);
        double span = st.theta_end - st.theta_start;
        double toward_interior = (std::abs(theta - st.theta_start) < std::abs(theta - st.theta_end)) ? 1.0 : -1.0;
        double nearby = theta + toward_interior * std::abs(span) * 1e-4 * (span > 0 ? 1.0 : -1.0);
        Eigenpairs ref = low_spectrum(h.evaluate(stage, nearby), std::min<std::size_t>(2, h.dimension()));
        bool ref_unique = ref.values.size() < 2 || ref.values(1) - ref.values(0) > kDegeneracyTolerance;
        if (ref_unique) {
            auto cols = static_cast<Eigen::Index>(g_end - g_begin);
            Matrix g_space = eig.vectors.leftCols(cols);
            StateVector projected = g_space * (g_space.adjoint() * ref.vectors.col(0));
            if (projected.norm() > 1e-6) {
                ground = projected / projected.norm();
            }
        }
    }

    StateVector w = h.derivative(stage, theta).apply(ground);
    PointResult out;
    out.levels.assign(eig.values.data(), eig.values.data() + eig.values.size());
    out.couplings.assign(out.levels.size(), 0.0);
    for (const auto &[begin, end] : groups) {
        auto cols = static_cast<Eigen::Index>(end - begin);
        Matrix space = eig.vectors.middleCols(static_cast<Eigen::Index>(begin), cols);
        StateVector projected = space * (space.adjoint() * w);
        if (begin == 0) {
            projected -= ground * ground.dot(w);
        }
        double c = projected.norm();
        for (std::size_t i = std::max<std::size_t>(begin, 1); i < end; ++i) {
            out.couplings[i] = c;
        }
    }
    return out;
}

}  // namespace

bool dense_solve(std::size_t dimension, std::size_t k) {
    if (dimension <= kDensePartialLimit) {
        return true;
    }
    return dimension <= kDenseDiagonalizationLimit && 4 * k > dimension;
}

Eigenpairs low_spectrum(const OperatorMatrix &h, std::size_t k) {
    if (k < 1 || k > h.dimension()) {
        throw ValidationError("requested " + std::to_string(k) + " levels of a " + std::to_string(h.dimension()) +
                              "-dimensional operator");
    }
    double defect = h.hermiticity_defect();
    if (defect > kHermitianInputTolerance) {
        throw ValidationError("low_spectrum: operator is not Hermitian (defect " + std::to_string(defect) + ")");
    }
    if (dense_solve(h.dimension(), k)) {
        Eigenpairs full = dense_eigenpairs(h.to_dense());
        auto kk = static_cast<Eigen::Index>(k);
        return {full.values.head(kk), full.vectors.leftCols(kk)};
    }
    return krylov_lowest(h, k);
}

double SpectrumTrace::min_gap() const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < size(); ++i) {
        if (level_count() > 1) {
            best = std::min(best, gap(i, 1));
        }
    }
    return best;
}

bool SpectrumTrace::near_crossing(std::size_t i, std::size_t k) const {
    const auto &lv = levels[i];
    bool below = k > 1 && lv[k] - lv[k - 1] <= kDegeneracyTolerance;
    bool above = k + 1 < lv.size() && lv[k + 1] - lv[k] <= kDegeneracyTolerance;
    return below || above;
}

SpectrumTrace gap_trace(const StagedHamiltonian &h, std::size_t stage, std::size_t grid_points, std::size_t k) {
    if (grid_points < 2) {
        throw ValidationError("gap_trace needs at least two grid points");
    }
    const Stage &st = h.stage(stage);
    std::size_t levels = resolve_level_count(h, k);

    SpectrumTrace trace;
    trace.stage = stage;
    trace.theta.resize(grid_points);
    for (std::size_t i = 0; i < grid_points; ++i) {
        double f = static_cast<double>(i) / static_cast<double>(grid_points - 1);
        trace.theta[i] = st.theta_start + (st.theta_end - st.theta_start) * f;
    }
    trace.theta.back() = st.theta_end;

    std::vector<PointResult> results(grid_points);
    parallel_for(grid_points, [&](std::size_t i) { results[i] = analyze_point(h, stage, trace.theta[i], levels); });

    trace.levels.reserve(grid_points);
    trace.couplings.reserve(grid_points);
    for (auto &r : results) {
        trace.levels.push_back(std::move(r.levels));
        trace.couplings.push_back(std::move(r.couplings));
    }
    return trace;
}

MonotoneReport check_monotone_gap(const SpectrumTrace &trace) {
    if (trace.size() < 3) {
        throw ValidationError("monotonicity check needs at least three grid points");
    }
    constexpr double kFlat = 1e-9;
    MonotoneReport report;
    for (std::size_t k = 1; k < trace.level_count(); ++k) {
        double up = 0.0;
        double down = 0.0;
        std::vector<double> diffs;
        for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
            if (trace.near_crossing(i, k) || trace.near_crossing(i + 1, k)) {
                ++report.suspended;
                continue;
            }
            double d = trace.gap(i + 1, k) - trace.gap(i, k);
            if (std::abs(d) <= kFlat) {
                continue;
            }
            diffs.push_back(d);
            (d > 0 ? up : down) += std::abs(d);
        }
        int dir = up > down ? 1 : (down > up ? -1 : 0);
        report.direction.push_back(dir);
        if (dir == 0 && up > 0.0) {
            // Rises and falls by the same amount: no trend to be monotone in.
            report.is_monotone = false;
            for (double d : diffs) {
                report.worst_violation = std::max(report.worst_violation, std::abs(d));
            }
        }
        for (double d : diffs) {
            if ((dir > 0 && d < 0) || (dir < 0 && d > 0)) {
                report.is_monotone = false;
                report.worst_violation = std::max(report.worst_violation, std::abs(d));
            }
        }
    }
    return report;
}

bool BoundReport::holds() const {
    constexpr double tol = 1e-9;
    return std::all_of(levels.begin(), levels.end(),
                       [](const LevelBound &b) { return b.lhs <= b.coarse_rhs + tol && b.lhs <= b.rhs + tol; });
}

std::size_t BoundReport::variant_violations() const {
    return static_cast<std::size_t>(
        std::count_if(levels.begin(), levels.end(), [](const LevelBound &b) { return b.lhs > b.rhs_variant + 1e-9; }));
}

BoundReport bound_report(const StagedHamiltonian &h, std::size_t stage, double theta, const RotatedGroundSpec &spec_in) {
    RotatedGroundSpec spec = spec_in;
    spec.theta = theta;
    spec.validate();
    if (h.dimension() > kDenseDiagonalizationLimit) {
        throw ValidationError("bound not applicable: dimension exceeds the dense limit");
    }
    if (static_cast<std::size_t>(spec.gamma_m.size()) != h.dimension()) {
        throw ValidationError("bound not applicable: spec dimension does not match the Hamiltonian");
    }
    const Stage &st = h.stage(stage);
    const double strength = st.drive_strength;
    const StateVector &gamma_j = spec.gammas[spec.j];

    auto drive = [&](double th) -> Matrix {
        StateVector q = std::cos(th) * spec.gamma_m - std::sin(th) * gamma_j;
        return strength * q * q.adjoint();
    };
    Matrix h_theta = h.evaluate(stage, theta).to_dense();
    Matrix h0 = h_theta - drive(theta);
    Matrix h0_ref = h.evaluate(stage, st.theta_start).to_dense() - drive(st.theta_start);
    Matrix h0_mid = h.evaluate(stage, 0.5 * (st.theta_start + st.theta_end)).to_dense() -
                    drive(0.5 * (st.theta_start + st.theta_end));
    constexpr double tol = 1e-10;
    if ((h0 - h0_ref).cwiseAbs().maxCoeff() > tol || (h0 - h0_mid).cwiseAbs().maxCoeff() > tol) {
        throw ValidationError("bound not applicable: stage is not H0 plus a single rotated driving block");
    }
    StateVector psi_a = spec.psi_a();
    if ((h0 * psi_a).norm() > 1e-9 || (h0 * spec.gamma_m).norm() > 1e-9) {
        throw ValidationError("bound not applicable: H0 does not annihilate the two reference states");
    }

    Eigenpairs h0_eig = dense_eigenpairs(h0);
    if (h0_eig.values.size() < 3 || std::abs(h0_eig.values(0)) > 1e-9 || std::abs(h0_eig.values(1)) > 1e-9) {
        throw ValidationError("bound not applicable: H0 lacks two zero-energy ground states");
    }

    BoundReport report;
    report.theta = theta;
    report.strength = strength;
    report.g1_h0 = h0_eig.values(2);
    report.a_j = spec.amplitudes[spec.j];
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double aj2 = report.a_j * report.a_j;
    const double norm_factor = c * c + aj2 * s * s;
    report.A = strength * aj2 / norm_factor;
    const double variant_A = aj2 / (strength * norm_factor);

    StateVector zero = rotated_ground_state(spec);
    cplx m_overlap = spec.gamma_m.dot(zero);
    cplx a_overlap = psi_a.dot(zero);
    report.r = std::abs(m_overlap) == 0.0 ? std::numeric_limits<double>::infinity() : std::real(a_overlap / m_overlap);
    const double inv_r2 = std::isinf(report.r) ? 0.0 : 1.0 / (report.r * report.r);
    const double r2 = report.r * report.r;

    Eigenpairs eig = dense_eigenpairs(h_theta);
    if (std::abs(eig.values(0)) > 1e-9) {
        throw ValidationError("bound not applicable: ground energy is not zero");
    }
    StateVector w = h.derivative(stage, theta).apply(zero);
    const double g1 = report.g1_h0;
    for (Eigen::Index k = 1; k < eig.values.size(); ++k) {
        LevelBound b;
        b.level = static_cast<std::size_t>(k);
        StateVector vk = eig.vectors.col(k);
        b.lhs = std::norm(vk.dot(w));
        b.g_k = eig.values(k) - eig.values(0);
        b.c_mk = std::abs(spec.gamma_m.dot(vk));
        const double cmk2 = b.c_mk * b.c_mk;
        b.coarse_rhs = report.A * b.g_k;
        b.rhs = report.A * ((1.0 + inv_r2) * cmk2 * g1 - g1 + b.g_k);
        double variant_overlap = cmk2 == 0.0 ? 0.0 : (1.0 + r2) * cmk2 * g1;
        b.rhs_variant = variant_A * (variant_overlap - g1 + b.g_k);
        report.levels.push_back(b);
    }
    return report;
}

}  // namespace adiarot
