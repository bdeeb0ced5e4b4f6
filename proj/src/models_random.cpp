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

#include "adiarot/errors.hpp"
#include "adiarot/models.hpp"

namespace adiarot {

DrivenInstance random_driven_instance(std::mt19937_64 &rng, std::size_t dimension, double strength) {
    if (dimension < 3 || dimension > 12) {
        throw ValidationError("random instance dimension must lie in [3, 12]");
    }
    if (!(strength > 0.0)) {
        throw ValidationError("driving strength must be positive");
    }
    const std::size_t n = dimension - 1;
    const std::size_t m = n;
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> level(0.2, 3.0);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);

    std::vector<double> amps(n);
    double norm2 = 0.0;
    for (double &a : amps) {
        a = normal(rng);
        norm2 += a * a;
    }
    for (double &a : amps) {
        a /= std::sqrt(norm2);
    }
    const std::size_t j = pick(rng);

    // Orthonormal basis whose first two columns are psi_a and gamma_m.
    RealMatrix seed = RealMatrix::Zero(static_cast<Eigen::Index>(dimension), static_cast<Eigen::Index>(dimension));
    for (std::size_t i = 0; i < n; ++i) {
        seed(static_cast<Eigen::Index>(i), 0) = amps[i];
    }
    seed(static_cast<Eigen::Index>(m), 1) = 1.0;
    for (Eigen::Index c = 2; c < seed.cols(); ++c) {
        for (Eigen::Index r = 0; r < seed.rows(); ++r) {
            seed(r, c) = normal(rng);
        }
    }
    Eigen::HouseholderQR<RealMatrix> qr(seed);
    RealMatrix q = qr.householderQ();
    RealVector energies = RealVector::Zero(static_cast<Eigen::Index>(dimension));
    for (Eigen::Index c = 2; c < energies.size(); ++c) {
        energies(c) = level(rng);
    }
    RealMatrix h0 = q * energies.asDiagonal() * q.transpose();

    std::vector<MultiSiteOperator> constants;
    for (std::size_t a = 0; a < dimension; ++a) {
        auto ia = static_cast<Eigen::Index>(a);
        constants.emplace_back(h0(ia, ia), std::map<SiteId, SiteOperator>{{0, SiteOperator::projector(a)}});
        for (std::size_t b = a + 1; b < dimension; ++b) {
            constants.emplace_back(h0(ia, static_cast<Eigen::Index>(b)),
                                   std::map<SiteId, SiteOperator>{{0, SiteOperator::transition(a, b)}});
        }
    }
    Stage stage;
    stage.theta_start = 0.0;
    stage.theta_end = kPi / 2;
    stage.drive_strength = strength;
    stage.label = "drive";
    stage.active = driving_terms(strength, 0, m, j);

    std::vector<std::size_t> gammas(n);
    for (std::size_t i = 0; i < n; ++i) {
        gammas[i] = i;
    }
    RotatedGroundSpec spec = RotatedGroundSpec::on_basis(dimension, gammas, m, amps, j, 0.0);
    StateVector psi_a = spec.psi_a();
    StateVector end = basis_state(dimension, m);
    return {ModelInstance{"random", StagedHamiltonian(HilbertLayout::levels(dimension), std::move(constants), {stage}),
                          psi_a, end},
            std::move(spec), strength};
}

}  // namespace adiarot
