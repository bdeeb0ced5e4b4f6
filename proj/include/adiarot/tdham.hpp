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

#ifndef ADIAROT_TDHAM_HPP
#define ADIAROT_TDHAM_HPP

#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "adiarot/linalg.hpp"
#include "adiarot/opalg.hpp"

namespace adiarot {

inline constexpr double kPi = std::numbers::pi;

/// prefactor * f(theta) with f drawn from a fixed set of trigonometric forms.
/// The set is closed under d/dtheta, so dH/dtheta is exact.
struct ThetaCoefficient {
    enum class Kind { Constant, Sin2, Cos2, SinCos, Sin2MinusCos2 };
    Kind kind = Kind::Constant;
    double prefactor = 0.0;

    static ThetaCoefficient constant(double c) { return {Kind::Constant, c}; }
    static ThetaCoefficient sin2(double p = 1.0) { return {Kind::Sin2, p}; }
    static ThetaCoefficient cos2(double p = 1.0) { return {Kind::Cos2, p}; }
    static ThetaCoefficient sin_cos(double p = 1.0) { return {Kind::SinCos, p}; }
    static ThetaCoefficient sin2_minus_cos2(double p = 1.0) { return {Kind::Sin2MinusCos2, p}; }

    double value(double theta) const;
    ThetaCoefficient derivative() const;
    std::string str() const;
};

struct StagedTerm {
    ThetaCoefficient coefficient;
    MultiSiteOperator op;
};

/// One rotation step. Its active terms sweep theta from theta_start to
/// theta_end; before the stage they sit at theta_start, afterwards they are
/// frozen at theta_end.
struct Stage {
    std::vector<StagedTerm> active;
    double theta_start = 0.0;
    double theta_end = kPi / 4;
    /// Driving strength K of the rotated rank-one block, where one exists.
    double drive_strength = 1.0;
    std::string label;
};

/// H(stage, theta) = constant terms + frozen earlier stages + pending later
/// stages + this stage's active terms at theta. Immutable once built; the
/// background of every stage is assembled up front.
class StagedHamiltonian {
   public:
    StagedHamiltonian(HilbertLayout layout, std::vector<MultiSiteOperator> constant_terms, std::vector<Stage> stages);

    const HilbertLayout &layout() const { return layout_; }
    std::size_t dimension() const { return layout_.total_dimension(); }
    std::size_t stage_count() const { return stages_.size(); }
    const Stage &stage(std::size_t s) const;
    const std::vector<Stage> &stages() const { return stages_; }
    const std::vector<MultiSiteOperator> &constant_terms() const { return constant_terms_; }

    OperatorMatrix evaluate(std::size_t stage, double theta) const;
    OperatorMatrix derivative(std::size_t stage, double theta) const;
    /// Everything except the active terms of `stage`.
    const OperatorMatrix &background(std::size_t stage) const;

    /// max |H_s(theta_end) - H_{s+1}(theta_start)| over all stage boundaries.
    double continuity_defect() const;

   private:
    void check(std::size_t stage, double theta) const;

    struct ActiveMatrix {
        ThetaCoefficient coefficient;
        OperatorMatrix matrix;
    };

    HilbertLayout layout_;
    std::vector<MultiSiteOperator> constant_terms_;
    std::vector<Stage> stages_;
    std::vector<OperatorMatrix> backgrounds_;
    std::vector<std::vector<ActiveMatrix>> active_;
};

/// K * [[cos^2, -sin cos], [-sin cos, sin^2]] in the ordered basis (gamma_m, gamma_j).
RealMatrix driving_block(double strength, double theta);

/// Staged terms realizing driving_block on two levels of one abstract site.
std::vector<StagedTerm> driving_terms(double strength, SiteId site, std::size_t level_m, std::size_t level_j);

/// Describes the zero-energy state a_j tan(theta)|gamma_m> + sum_i a_i |gamma_i>
/// (normalized). `j` is a zero-based index into `gammas`.
struct RotatedGroundSpec {
    std::vector<StateVector> gammas;
    StateVector gamma_m;
    std::vector<double> amplitudes;
    std::size_t j = 0;
    double theta = 0.0;

    /// Spec whose gammas and gamma_m are computational basis states.
    static RotatedGroundSpec on_basis(std::size_t dimension, const std::vector<std::size_t> &gamma_indices,
                                      std::size_t m_index, std::vector<double> amplitudes, std::size_t j, double theta);

    /// sum_i a_i |gamma_i>.
    StateVector psi_a() const;
    /// Throws ValidationError when the amplitudes are not normalized, j is
    /// out of range, or the basis is not orthonormal.
    void validate() const;
};

StateVector rotated_ground_state(const RotatedGroundSpec &spec);

}  // namespace adiarot

#endif
