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

ClusterGrid::ClusterGrid(std::size_t lx, std::size_t ly) : lx_(lx), ly_(ly) {
    if (lx == 0 || ly == 0) {
        throw ValidationError("cluster grid needs positive dimensions");
    }
    if (site_count() > kMaxModelSpins) {
        throw ValidationError(std::to_string(site_count()) + " sites exceed the limit of " +
                              std::to_string(kMaxModelSpins));
    }
}

SiteId ClusterGrid::site(std::size_t x, std::size_t y) const {
    return static_cast<SiteId>(y * lx_ + x);
}

std::vector<SiteId> ClusterGrid::neighbors(SiteId s) const {
    auto x = static_cast<std::size_t>(s) % lx_;
    auto y = static_cast<std::size_t>(s) / lx_;
    std::vector<SiteId> out;
    if (x > 0) out.push_back(site(x - 1, y));
    if (x + 1 < lx_) out.push_back(site(x + 1, y));
    if (y > 0) out.push_back(site(x, y - 1));
    if (y + 1 < ly_) out.push_back(site(x, y + 1));
    return out;
}

std::vector<std::pair<SiteId, SiteId>> ClusterGrid::edges() const {
    std::vector<std::pair<SiteId, SiteId>> out;
    for (std::size_t y = 0; y < ly_; ++y) {
        for (std::size_t x = 0; x < lx_; ++x) {
            if (x + 1 < lx_) out.emplace_back(site(x, y), site(x + 1, y));
            if (y + 1 < ly_) out.emplace_back(site(x, y), site(x, y + 1));
        }
    }
    return out;
}

MultiSiteOperator ClusterGrid::stabilizer(SiteId s) const {
    std::vector<std::pair<SiteId, SiteOperator>> factors{{s, SiteOperator::x()}};
    for (SiteId n : neighbors(s)) {
        factors.emplace_back(n, SiteOperator::z());
    }
    return MultiSiteOperator::pauli_product(1.0, std::move(factors));
}

std::vector<MultiSiteOperator> ClusterGrid::stabilizers() const {
    std::vector<MultiSiteOperator> out;
    for (std::size_t s = 0; s < site_count(); ++s) {
        out.push_back(stabilizer(static_cast<SiteId>(s)));
    }
    return out;
}

bool ClusterGrid::odd(SiteId s) const {
    auto x = static_cast<std::size_t>(s) % lx_;
    auto y = static_cast<std::size_t>(s) / lx_;
    return (x + y) % 2 == 1;
}

ModelInstance build_cluster(std::size_t lx, std::size_t ly) {
    ClusterGrid grid(lx, ly);
    const std::size_t n = grid.site_count();
    if (n < 2) {
        throw ValidationError("cluster protocol needs at least two sites");
    }
    std::vector<Stage> stages(2);
    stages[0].label = "odd";
    stages[1].label = "even";
    for (std::size_t s = 0; s < n; ++s) {
        auto id = static_cast<SiteId>(s);
        Stage &stage = stages[grid.odd(id) ? 0 : 1];
        stage.drive_strength = 2.0;
        stage.active.push_back({ThetaCoefficient::constant(1.0), MultiSiteOperator::constant(1.0)});
        stage.active.push_back(
            {ThetaCoefficient::sin2_minus_cos2(1.0), MultiSiteOperator::pauli_product(1.0, {{id, SiteOperator::z()}})});
        stage.active.push_back({ThetaCoefficient::sin_cos(-2.0), grid.stabilizer(id)});
    }
    const std::size_t dim = std::size_t{1} << n;
    return {"cluster", StagedHamiltonian(HilbertLayout::qubits(n), {}, std::move(stages)), basis_state(dim, 0),
            cluster_target(lx, ly)};
}

StateVector cluster_target(std::size_t lx, std::size_t ly) {
    ClusterGrid grid(lx, ly);
    const std::size_t n = grid.site_count();
    const std::size_t dim = std::size_t{1} << n;
    const auto edges = grid.edges();
    const double amp = std::pow(2.0, -0.5 * static_cast<double>(n));
    StateVector out(static_cast<Eigen::Index>(dim));
    for (std::size_t idx = 0; idx < dim; ++idx) {
        auto bit = [&](SiteId s) { return (idx >> (n - 1 - static_cast<std::size_t>(s))) & 1U; };
        std::size_t r = 0;
        for (const auto &[a, b] : edges) {
            r += bit(a) & bit(b);
        }
        out(static_cast<Eigen::Index>(idx)) = (r % 2 == 0) ? amp : -amp;
    }
    return out;
}

}  // namespace adiarot
