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

#include "adiarot/tdham.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "adiarot/errors.hpp"

namespace adiarot {

namespace {

constexpr double kThetaSlack = 1e-12;

std::vector<MultiSiteOperator> frozen_at(const std::vector<StagedTerm> &terms, double theta) {
    std::vector<MultiSiteOperator> out;
    out.reserve(terms.size());
    for (const auto &t : terms) {
        out.push_back(t.op.scaled(t.coefficient.value(theta)));
    }
    return out;
}

}  // namespace

double ThetaCoefficient::value(double theta) const {
    double s = std::sin(theta);
    double c = std::cos(theta);
    switch (kind) {
        case Kind::Constant:
            return prefactor;
        case Kind::Sin2:
            return prefactor * s * s;
        case Kind::Cos2:
            return prefactor * c * c;
        case Kind::SinCos:
            return prefactor * s * c;
        case Kind::Sin2MinusCos2:
            return prefactor * (s * s - c * c);
    }
    return 0.0;
}

ThetaCoefficient ThetaCoefficient::derivative() const {
    switch (kind) {
        case Kind::Constant:
            return constant(0.0);
        case Kind::Sin2:
            return sin_cos(2.0 * prefactor);
        case Kind::Cos2:
            return sin_cos(-2.0 * prefactor);
        case Kind::SinCos:
            return sin2_minus_cos2(-prefactor);
        case Kind::Sin2MinusCos2:
            return sin_cos(4.0 * prefactor);
    }
    return constant(0.0);
}

std::string ThetaCoefficient::str() const {
    std::ostringstream out;
    out << prefactor;
    switch (kind) {
        case Kind::Constant:
            break;
        case Kind::Sin2:
            out << "*sin^2";
            break;
        case Kind::Cos2:
            out << "*cos^2";
            break;
        case Kind::SinCos:
            out << "*sin*cos";
            break;
        case Kind::Sin2MinusCos2:
            out << "*(sin^2-cos^2)";
            break;
    }
    return out.str();
}

StagedHamiltonian::StagedHamiltonian(HilbertLayout layout, std::vector<MultiSiteOperator> constant_terms,
                                     std::vector<Stage> stages)
    : layout_(std::move(layout)), constant_terms_(std::move(constant_terms)), stages_(std::move(stages)) {
    if (stages_.empty()) {
        throw ValidationError("a staged Hamiltonian needs at least one stage");
    }
    for (const auto &st : stages_) {
        if (!(st.drive_strength > 0.0)) {
            throw ValidationError("stage '" + st.label + "' has non-positive drive strength");
        }
        if (st.active.empty()) {
            throw ValidationError("stage '" + st.label + "' has no active terms");
        }
        if (st.theta_start == st.theta_end) {
            throw ValidationError("stage '" + st.label + "' has an empty theta range");
        }
    }

    const std::size_t n = stages_.size();
    std::vector<OperatorMatrix> frozen_end(n);
    std::vector<OperatorMatrix> pending_start(n);
    active_.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
        frozen_end[s] = assemble(frozen_at(stages_[s].active, stages_[s].theta_end), layout_);
        pending_start[s] = assemble(frozen_at(stages_[s].active, stages_[s].theta_start), layout_);
        for (const auto &t : stages_[s].active) {
            active_[s].push_back({t.coefficient, assemble(t.op, layout_)});
        }
    }

    // background_s = constants + sum_{s'<s} frozen + sum_{s'>s} pending
    OperatorMatrix constants = assemble(constant_terms_, layout_);
    std::vector<OperatorMatrix> suffix(n + 1, OperatorMatrix::zero(dimension()));
    for (std::size_t s = n; s-- > 0;) {
        suffix[s] = suffix[s + 1] + pending_start[s];
    }
    OperatorMatrix prefix = constants;
    backgrounds_.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        backgrounds_.push_back(prefix + suffix[s + 1]);
        prefix.add_scaled(frozen_end[s], 1.0);
    }
}

const Stage &StagedHamiltonian::stage(std::size_t s) const {
    if (s >= stages_.size()) {
        throw ValidationError("stage index " + std::to_string(s) + " out of range");
    }
    return stages_[s];
}

const OperatorMatrix &StagedHamiltonian::background(std::size_t s) const {
    stage(s);
    return backgrounds_[s];
}

void StagedHamiltonian::check(std::size_t s, double theta) const {
    const Stage &st = stage(s);
    double lo = std::min(st.theta_start, st.theta_end) - kThetaSlack;
    double hi = std::max(st.theta_start, st.theta_end) + kThetaSlack;
    if (!(theta >= lo && theta <= hi)) {
        throw ValidationError("theta " + std::to_string(theta) + " outside the range of stage " + std::to_string(s));
    }
}

OperatorMatrix StagedHamiltonian::evaluate(std::size_t s, double theta) const {
    check(s, theta);
    OperatorMatrix h = backgrounds_[s];
    for (const auto &a : active_[s]) {
        h.add_scaled(a.matrix, a.coefficient.value(theta));
    }
    return h;
}

OperatorMatrix StagedHamiltonian::derivative(std::size_t s, double theta) const {
    check(s, theta);
    OperatorMatrix d = OperatorMatrix::zero(dimension());
    for (const auto &a : active_[s]) {
        d.add_scaled(a.matrix, a.coefficient.derivative().value(theta));
    }
    return d;
}

double StagedHamiltonian::continuity_defect() const {
    double worst = 0.0;
    for (std::size_t s = 0; s + 1 < stages_.size(); ++s) {
        OperatorMatrix diff = evaluate(s, stages_[s].theta_end) - evaluate(s + 1, stages_[s + 1].theta_start);
        worst = std::max(worst, diff.max_abs_entry());
    }
    return worst;
}

RealMatrix driving_block(double strength, double theta) {
    if (!(strength > 0.0)) {
        throw ValidationError("driving strength must be positive");
    }
    double s = std::sin(theta);
    double c = std::cos(theta);
    RealMatrix block(2, 2);
    block << c * c, -s * c, -s * c, s * s;
    return strength * block;
}

std::vector<StagedTerm> driving_terms(double strength, SiteId site, std::size_t level_m, std::size_t level_j) {
    if (!(strength > 0.0)) {
        throw ValidationError("driving strength must be positive");
    }
    return {
        {ThetaCoefficient::cos2(strength), {1.0, {{site, SiteOperator::projector(level_m)}}}},
        {ThetaCoefficient::sin2(strength), {1.0, {{site, SiteOperator::projector(level_j)}}}},
        {ThetaCoefficient::sin_cos(-strength), {1.0, {{site, SiteOperator::transition(level_m, level_j)}}}},
    };
}

RotatedGroundSpec RotatedGroundSpec::on_basis(std::size_t dimension, const std::vector<std::size_t> &gamma_indices,
                                              std::size_t m_index, std::vector<double> amplitudes, std::size_t j,
                                              double theta) {
    RotatedGroundSpec spec;
    for (std::size_t idx : gamma_indices) {
        spec.gammas.push_back(basis_state(dimension, idx));
    }
    spec.gamma_m = basis_state(dimension, m_index);
    spec.amplitudes = std::move(amplitudes);
    spec.j = j;
    spec.theta = theta;
    return spec;
}

StateVector RotatedGroundSpec::psi_a() const {
    StateVector out = StateVector::Zero(gamma_m.size());
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        out += amplitudes[i] * gammas[i];
    }
    return out;
}

void RotatedGroundSpec::validate() const {
    if (gammas.empty() || gammas.size() != amplitudes.size()) {
        throw ValidationError("rotated ground spec needs one amplitude per basis state");
    }
    if (j >= gammas.size()) {
        throw ValidationError("rotated component index out of range");
    }
    double norm2 = 0.0;
    for (double a : amplitudes) {
        norm2 += a * a;
    }
    if (std::abs(norm2 - 1.0) > 1e-12) {
        throw ValidationError("amplitudes are not normalized");
    }
    constexpr double tol = 1e-10;
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        if (gammas[i].size() != gamma_m.size()) {
            throw ValidationError("basis vectors have mismatched dimensions");
        }
        if (std::abs(gammas[i].norm() - 1.0) > tol || std::abs(gamma_m.dot(gammas[i])) > tol) {
            throw ValidationError("basis is not orthonormal");
        }
        for (std::size_t k = 0; k < i; ++k) {
            if (std::abs(gammas[k].dot(gammas[i])) > tol) {
                throw ValidationError("basis is not orthonormal");
            }
        }
    }
    if (std::abs(gamma_m.norm() - 1.0) > tol) {
        throw ValidationError("gamma_m is not normalized");
    }
}

StateVector rotated_ground_state(const RotatedGroundSpec &spec) {
    spec.validate();
    if (!(spec.theta >= -kThetaSlack && spec.theta <= kPi / 2 + kThetaSlack)) {
        throw ValidationError("theta must lie in [0, pi/2]");
    }
    if (std::abs(spec.theta - kPi / 2) <= kThetaSlack) {
        return spec.gamma_m;
    }
    // Multiplied through by cos(theta) so no tangent is evaluated.
    double s = std::sin(spec.theta);
    double c = std::cos(spec.theta);
    double aj = spec.amplitudes[spec.j];
    StateVector out = (aj * s) * spec.gamma_m + c * spec.psi_a();
    return out / std::sqrt(c * c + aj * aj * s * s);
}

}  // namespace adiarot
