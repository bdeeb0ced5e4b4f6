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

#ifndef ADIAROT_SPECTRA_HPP
#define ADIAROT_SPECTRA_HPP

#include <cstddef>
#include <vector>

#include "adiarot/krylov.hpp"
#include "adiarot/linalg.hpp"
#include "adiarot/tdham.hpp"

namespace adiarot {

/// Operators up to this dimension may be diagonalized densely; larger ones
/// always go through the block Krylov solver.
inline constexpr std::size_t kDenseDiagonalizationLimit = 4096;
/// Above this dimension a dense solve is used only when more than a quarter
/// of the spectrum is requested.
inline constexpr std::size_t kDensePartialLimit = 512;

/// Whether low_spectrum(h, k) takes the dense path.
bool dense_solve(std::size_t dimension, std::size_t k);
/// Sorted levels closer than this are treated as one degenerate cluster.
inline constexpr double kDegeneracyTolerance = 1e-8;

/// k lowest eigenpairs, ascending. Throws ValidationError for a non-Hermitian
/// input (defect > 1e-10) or k outside [1, dimension].
Eigenpairs low_spectrum(const OperatorMatrix &h, std::size_t k);

/// Levels and ground couplings sampled along one stage's theta range.
struct SpectrumTrace {
    std::size_t stage = 0;
    std::vector<double> theta;
    /// levels[i][k]: k-th lowest eigenvalue at theta[i].
    std::vector<std::vector<double>> levels;
    /// couplings[i][k]: |<k| dH/dtheta |0>| at theta[i]; entry 0 is zero.
    /// Levels inside a degenerate cluster share the norm of the projection
    /// onto the whole cluster.
    std::vector<std::vector<double>> couplings;

    std::size_t size() const { return theta.size(); }
    std::size_t level_count() const { return levels.empty() ? 0 : levels.front().size(); }
    double gap(std::size_t i, std::size_t k) const { return levels[i][k] - levels[i][0]; }
    /// Smallest g_1 over the trace.
    double min_gap() const;
    /// Whether level k sits within kDegeneracyTolerance of a neighbor at point i.
    bool near_crossing(std::size_t i, std::size_t k) const;
};

/// Samples `grid_points` uniformly spaced theta values from the stage's
/// theta_start to theta_end (time order). `k == 0` tracks every level.
SpectrumTrace gap_trace(const StagedHamiltonian &h, std::size_t stage, std::size_t grid_points, std::size_t k = 0);

struct MonotoneReport {
    bool is_monotone = true;
    /// Largest finite difference whose sign disagrees with the level's trend.
    double worst_violation = 0.0;
    /// Per excited level: +1 increasing along the grid, -1 decreasing, 0 flat.
    std::vector<int> direction;
    /// Differences skipped because a level crossing was flagged at an endpoint.
    std::size_t suspended = 0;
};

/// Checks that every tracked gap g_k moves in one direction across the grid.
/// Differences below 1e-9 are treated as flat; differences touching a
/// flagged level crossing are skipped.
MonotoneReport check_monotone_gap(const SpectrumTrace &trace);

struct LevelBound {
    std::size_t level = 0;
    double lhs = 0.0;         ///< |<k|dH/dtheta|0>|^2
    double coarse_rhs = 0.0;  ///< A g_k
    double rhs = 0.0;         ///< A [(1 + 1/r^2) c_mk^2 g1 - g1 + g_k]
    double rhs_variant = 0.0;  ///< a_j^2/(K(..)) [(1 + r^2) c_mk^2 g1 - g1 + g_k]
    double c_mk = 0.0;
    double g_k = 0.0;
};

/// Coupling bounds for a stage of the form H0 + K U|gamma_m><gamma_m|U^dagger.
struct BoundReport {
    double theta = 0.0;
    double strength = 1.0;
    double a_j = 0.0;
    /// K a_j^2 / (cos^2 + a_j^2 sin^2).
    double A = 0.0;
    /// sum_i a_i <gamma_i|0> / <gamma_m|0>; infinite at theta = 0.
    double r = 0.0;
    /// First excited energy of H0 above its two zero-energy ground states.
    double g1_h0 = 0.0;
    std::vector<LevelBound> levels;

    /// lhs <= coarse_rhs + 1e-9 and lhs <= rhs + 1e-9 on every level.
    bool holds() const;
    /// Levels where the variant with (1 + r^2) and A/K^2 is exceeded.
    std::size_t variant_violations() const;
};

/// Throws ValidationError ("bound not applicable") when the stage is not a
/// theta-independent H0 plus the single driving block described by `spec`.
BoundReport bound_report(const StagedHamiltonian &h, std::size_t stage, double theta, const RotatedGroundSpec &spec);

}  // namespace adiarot

#endif
