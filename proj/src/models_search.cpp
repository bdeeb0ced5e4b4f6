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

#include <cmath>
#include <string>

#include "adiarot/errors.hpp"
#include "adiarot/models.hpp"

namespace adiarot {

namespace {

void check_overlap(double a0) {
    if (!(a0 > 0.0 && a0 < 1.0)) {
        throw ValidationError("search overlap a0 must lie in (0, 1)");
    }
}

MultiSiteOperator level_op(double coefficient, SiteOperator op) {
    return MultiSiteOperator(coefficient, {{0, op}});
}

Stage search_stage(std::vector<StagedTerm> active) {
    Stage stage;
    stage.theta_start = kPi / 2;
    stage.theta_end = 0.0;
    stage.label = "search";
    stage.active = std::move(active);
    return stage;
}

}  // namespace

SearchModel SearchModel::from_database_size(double n) {
    if (!(n > 1.0)) {
        throw ValidationError("search needs N > 1");
    }
    return {1.0 / std::sqrt(n)};
}

double SearchModel::b0() const {
    return std::sqrt(1.0 - a0 * a0);
}

double SearchModel::database_size() const {
    return 1.0 / (a0 * a0);
}

double SearchModel::first_gap(double theta) const {
    return 1.0 - std::sin(theta) * b0();
}

double SearchModel::second_gap(double theta) const {
    return 1.0 + std::sin(theta) * b0();
}

double SearchModel::first_coupling(double theta) const {
    double s = std::sin(theta);
    double c = std::cos(theta);
    return a0 / std::sqrt(c * c + s * s * a0 * a0) * std::sqrt(first_gap(theta) / 2.0);
}

ModelInstance build_search(double a0) {
    check_overlap(a0);
    const double b = std::sqrt(1.0 - a0 * a0);
    const std::size_t m = kSearchMarked;
    const std::size_t p = kSearchComplement;
    const std::size_t i = kSearchInitial;
    std::vector<MultiSiteOperator> constants{level_op(1.0, SiteOperator::projector(p))};
    std::vector<StagedTerm> active{
        {ThetaCoefficient::sin2(a0 * a0), level_op(1.0, SiteOperator::projector(m))},
        {ThetaCoefficient::sin2(b * b), level_op(1.0, SiteOperator::projector(p))},
        {ThetaCoefficient::sin2(a0 * b), level_op(1.0, SiteOperator::transition(m, p))},
        {ThetaCoefficient::cos2(1.0), level_op(1.0, SiteOperator::projector(i))},
        {ThetaCoefficient::sin_cos(-a0), level_op(1.0, SiteOperator::transition(m, i))},
        {ThetaCoefficient::sin_cos(-b), level_op(1.0, SiteOperator::transition(p, i))},
    };
    return {"search", StagedHamiltonian(HilbertLayout::levels(3), std::move(constants), {search_stage(std::move(active))}),
            basis_state(3, i), basis_state(3, m)};
}

ModelInstance build_search_full(std::size_t n, std::size_t marked) {
    if (n < 2 || marked >= n) {
        throw ValidationError("full search needs N >= 2 and a marked item below N");
    }
    if (n > 256) {
        throw ValidationError("full search embedding is limited to N <= 256");
    }
    const std::size_t init = n;
    const double inv_n = 1.0 / static_cast<double>(n);
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<MultiSiteOperator> constants;
    for (std::size_t k = 0; k < n; ++k) {
        if (k != marked) {
            constants.push_back(level_op(1.0, SiteOperator::projector(k)));
        }
    }
    std::vector<StagedTerm> active;
    for (std::size_t j = 0; j < n; ++j) {
        active.push_back({ThetaCoefficient::sin2(inv_n), level_op(1.0, SiteOperator::projector(j))});
        for (std::size_t k = j + 1; k < n; ++k) {
            active.push_back({ThetaCoefficient::sin2(inv_n), level_op(1.0, SiteOperator::transition(j, k))});
        }
        active.push_back({ThetaCoefficient::sin_cos(-inv_sqrt_n), level_op(1.0, SiteOperator::transition(j, init))});
    }
    active.push_back({ThetaCoefficient::cos2(1.0), level_op(1.0, SiteOperator::projector(init))});
    return {"search-full",
            StagedHamiltonian(HilbertLayout::levels(n + 1), std::move(constants), {search_stage(std::move(active))}),
            basis_state(n + 1, init), basis_state(n + 1, marked)};
}

RotatedGroundSpec search_spec(double a0, double theta) {
    check_overlap(a0);
    const double b = std::sqrt(1.0 - a0 * a0);
    StateVector psi0 = StateVector::Zero(3);
    psi0(kSearchMarked) = a0;
    psi0(kSearchComplement) = b;
    StateVector chi = StateVector::Zero(3);
    chi(kSearchMarked) = b;
    chi(kSearchComplement) = -a0;
    RotatedGroundSpec spec;
    // |m> = a0 |psi0> + b |chi>, and the rotation acts on {|i>, |psi0>}.
    spec.gammas = {psi0, chi};
    spec.gamma_m = basis_state(3, kSearchInitial);
    spec.amplitudes = {a0, b};
    spec.j = 0;
    spec.theta = theta;
    spec.validate();
    return spec;
}

}  // namespace adiarot
