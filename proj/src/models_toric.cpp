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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <unordered_set>

#include "adiarot/errors.hpp"
#include "adiarot/models.hpp"

namespace adiarot {

namespace {

std::uint64_t bit_of(std::size_t spins, SiteId site) {
    return std::uint64_t{1} << (spins - 1 - static_cast<std::size_t>(site));
}

std::uint64_t mask_of(std::size_t spins, std::span<const SiteId> sites) {
    std::uint64_t m = 0;
    for (SiteId s : sites) {
        m ^= bit_of(spins, s);
    }
    return m;
}

void check_spins(std::size_t spins) {
    if (spins > kMaxModelSpins) {
        throw ValidationError(std::to_string(spins) + " spins exceed the limit of " + std::to_string(kMaxModelSpins));
    }
}

}  // namespace

PlaquetteProtocol build_plaquette_protocol(std::size_t spins, const std::vector<PlaquetteStage> &plan,
                                           std::vector<MultiSiteOperator> constant_terms,
                                           const std::vector<int> &reference_bits) {
    check_spins(spins);
    if (!reference_bits.empty() && reference_bits.size() != spins) {
        throw ValidationError("reference configuration has the wrong length");
    }
    std::set<SiteId> touched;
    std::vector<Stage> stages;
    std::vector<std::vector<std::vector<SiteId>>> fresh_sets;

    for (const PlaquetteStage &ps : plan) {
        Stage stage;
        stage.drive_strength = 2.0;
        stage.label = ps.label;
        std::vector<std::vector<SiteId>> fresh_here;
        for (const auto &plaq : ps.plaquettes) {
            for (SiteId l : plaq) {
                if (l < 0 || static_cast<std::size_t>(l) >= spins) {
                    throw ValidationError("plaquette link " + std::to_string(l) + " out of range");
                }
            }
            std::vector<SiteId> fresh;
            for (SiteId l : plaq) {
                if (!touched.contains(l)) {
                    fresh.push_back(l);
                }
            }
            if (fresh.empty()) {
                throw ValidationError("plaquette in stage '" + ps.label + "' has no fresh links");
            }
            fresh_here.push_back(std::move(fresh));
        }
        // Parallel plaquettes must not act on each other's fresh links.
        for (std::size_t p = 0; p < ps.plaquettes.size(); ++p) {
            for (std::size_t q = 0; q < ps.plaquettes.size(); ++q) {
                if (p == q) {
                    continue;
                }
                for (SiteId l : fresh_here[p]) {
                    if (std::ranges::find(ps.plaquettes[q], l) != ps.plaquettes[q].end()) {
                        throw ValidationError("parallel plaquettes in stage '" + ps.label + "' share fresh link " +
                                              std::to_string(l));
                    }
                }
            }
        }
        for (std::size_t p = 0; p < ps.plaquettes.size(); ++p) {
            const auto &fresh = fresh_here[p];
            double f = static_cast<double>(fresh.size());
            stage.active.push_back({ThetaCoefficient::constant(1.0), MultiSiteOperator::constant(1.0)});
            for (SiteId l : fresh) {
                double sigma = (!reference_bits.empty() && reference_bits[static_cast<std::size_t>(l)]) ? -1.0 : 1.0;
                stage.active.push_back({ThetaCoefficient::sin2_minus_cos2(sigma / f),
                                        MultiSiteOperator::pauli_product(1.0, {{l, SiteOperator::z()}})});
            }
            stage.active.push_back({ThetaCoefficient::sin_cos(-2.0),
                                    MultiSiteOperator::pauli_string(1.0, SiteOperator::x(), ps.plaquettes[p])});
        }
        for (const auto &plaq : ps.plaquettes) {
            touched.insert(plaq.begin(), plaq.end());
        }
        stages.push_back(std::move(stage));
        fresh_sets.push_back(std::move(fresh_here));
    }
    return {StagedHamiltonian(HilbertLayout::qubits(spins), std::move(constant_terms), std::move(stages)),
            std::move(fresh_sets)};
}

ToricSector parse_toric_sector(std::string_view text) {
    if (text == "none" || text.empty()) {
        return ToricSector::None;
    }
    if (text == "h") {
        return ToricSector::H;
    }
    if (text == "v") {
        return ToricSector::V;
    }
    if (text == "hv") {
        return ToricSector::HV;
    }
    throw ValidationError("unknown toric sector '" + std::string(text) + "' (expected none, h, v or hv)");
}

std::string to_string(ToricSector sector) {
    switch (sector) {
        case ToricSector::H:
            return "h";
        case ToricSector::V:
            return "v";
        case ToricSector::HV:
            return "hv";
        default:
            return "none";
    }
}

ToricLattice::ToricLattice(std::size_t lx, std::size_t ly) : lx_(lx), ly_(ly) {
    if (lx < 2 || ly < 2) {
        throw ValidationError("torus needs at least 2 x 2 plaquettes");
    }
}

SiteId ToricLattice::h(std::size_t x, std::size_t y) const {
    return static_cast<SiteId>((y % ly_) * lx_ + (x % lx_));
}

SiteId ToricLattice::v(std::size_t x, std::size_t y) const {
    return static_cast<SiteId>(lx_ * ly_ + (y % ly_) * lx_ + (x % lx_));
}

std::array<SiteId, 4> ToricLattice::plaquette(std::size_t x, std::size_t y) const {
    return {h(x, y), h(x, y + 1), v(x, y), v(x + 1, y)};
}

std::array<SiteId, 4> ToricLattice::star(std::size_t x, std::size_t y) const {
    return {h(x, y), h(x + lx_ - 1, y), v(x, y), v(x, y + ly_ - 1)};
}

std::vector<std::array<SiteId, 4>> ToricLattice::plaquettes() const {
    std::vector<std::array<SiteId, 4>> out;
    for (std::size_t y = 0; y < ly_; ++y) {
        for (std::size_t x = 0; x < lx_; ++x) {
            out.push_back(plaquette(x, y));
        }
    }
    return out;
}

std::vector<std::array<SiteId, 4>> ToricLattice::stars() const {
    std::vector<std::array<SiteId, 4>> out;
    for (std::size_t y = 0; y < ly_; ++y) {
        for (std::size_t x = 0; x < lx_; ++x) {
            out.push_back(star(x, y));
        }
    }
    return out;
}

std::vector<SiteId> ToricLattice::sector_loop(ToricSector sector) const {
    std::vector<SiteId> out;
    if (sector == ToricSector::H || sector == ToricSector::HV) {
        for (std::size_t x = 0; x < lx_; ++x) {
            out.push_back(h(x, 0));
        }
    }
    if (sector == ToricSector::V || sector == ToricSector::HV) {
        for (std::size_t y = 0; y < ly_; ++y) {
            out.push_back(v(0, y));
        }
    }
    return out;
}

ToricPlan toric_plan(const ToricLattice &lattice) {
    const std::size_t lx = lattice.lx();
    const std::size_t ly = lattice.ly();
    // Row ly - 1 borders row 0, so with odd ly it cannot join the first pass.
    std::vector<std::size_t> first_rows;
    std::vector<std::size_t> second_rows;
    std::vector<std::size_t> last_row;
    for (std::size_t y = 0; y < ly; ++y) {
        if (ly % 2 == 1 && y == ly - 1) {
            last_row.push_back(y);
        } else if (y % 2 == 0) {
            first_rows.push_back(y);
        } else {
            second_rows.push_back(y);
        }
    }

    std::vector<std::vector<std::array<SiteId, 4>>> candidates;
    std::vector<std::string> labels;
    for (std::size_t parity = 0; parity < 2; ++parity) {
        std::vector<std::array<SiteId, 4>> group;
        for (std::size_t y : first_rows) {
            for (std::size_t x = parity; x + 1 < lx; x += 2) {
                group.push_back(lattice.plaquette(x, y));
            }
        }
        candidates.push_back(std::move(group));
        labels.push_back(parity == 0 ? "rows-even-x" : "rows-odd-x");
    }
    for (const auto *rows : {&second_rows, &last_row}) {
        for (std::size_t x = 0; x + 1 < lx; ++x) {
            std::vector<std::array<SiteId, 4>> group;
            for (std::size_t y : *rows) {
                group.push_back(lattice.plaquette(x, y));
            }
            candidates.push_back(std::move(group));
            labels.push_back((rows == &last_row ? "last-row-x" : "sweep-x") + std::to_string(x));
        }
    }
    for (std::size_t y = 0; y < ly; ++y) {
        candidates.push_back({lattice.plaquette(lx - 1, y)});
        labels.push_back("column-y" + std::to_string(y));
    }

    ToricPlan plan;
    std::unordered_set<SiteId> touched;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        PlaquetteStage stage;
        stage.label = labels[c];
        for (const auto &plaq : candidates[c]) {
            bool has_fresh = std::ranges::any_of(plaq, [&](SiteId l) { return !touched.contains(l); });
            if (has_fresh) {
                stage.plaquettes.emplace_back(plaq.begin(), plaq.end());
            } else {
                plan.skipped.push_back(plaq);
            }
        }
        for (const auto &plaq : stage.plaquettes) {
            touched.insert(plaq.begin(), plaq.end());
        }
        if (!stage.plaquettes.empty()) {
            plan.stages.push_back(std::move(stage));
        }
    }
    return plan;
}

ToricModel build_toric(std::size_t lx, std::size_t ly, ToricSector sector) {
    ToricLattice lattice(lx, ly);
    const std::size_t n = lattice.spin_count();
    check_spins(n);
    ToricPlan plan = toric_plan(lattice);

    std::vector<MultiSiteOperator> stars;
    for (const auto &st : lattice.stars()) {
        stars.push_back(MultiSiteOperator::constant(1.0));
        stars.push_back(MultiSiteOperator::pauli_string(-1.0, SiteOperator::z(), st));
    }
    std::vector<int> reference(n, 0);
    for (SiteId l : lattice.sector_loop(sector)) {
        reference[static_cast<std::size_t>(l)] ^= 1;
    }
    PlaquetteProtocol protocol = build_plaquette_protocol(n, plan.stages, std::move(stars), reference);

    std::uint64_t start = mask_of(n, lattice.sector_loop(sector));
    return {ModelInstance{"toric", std::move(protocol.hamiltonian), basis_state(std::size_t{1} << n, start),
                          toric_target(lx, ly, sector)},
            std::move(plan)};
}

StateVector toric_target(std::size_t lx, std::size_t ly, ToricSector sector) {
    ToricLattice lattice(lx, ly);
    const std::size_t n = lattice.spin_count();
    check_spins(n);
    std::vector<std::uint64_t> generators;
    for (const auto &p : lattice.plaquettes()) {
        generators.push_back(mask_of(n, p));
    }
    // Closure of the flip group acting on the reference configuration.
    std::set<std::uint64_t> orbit{mask_of(n, lattice.sector_loop(sector))};
    std::vector<std::uint64_t> frontier(orbit.begin(), orbit.end());
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t s : frontier) {
            for (std::uint64_t g : generators) {
                if (orbit.insert(s ^ g).second) {
                    next.push_back(s ^ g);
                }
            }
        }
        frontier = std::move(next);
    }
    StateVector out = StateVector::Zero(static_cast<Eigen::Index>(std::size_t{1} << n));
    double amp = 1.0 / std::sqrt(static_cast<double>(orbit.size()));
    for (std::uint64_t s : orbit) {
        out(static_cast<Eigen::Index>(s)) = amp;
    }
    return out;
}

}  // namespace adiarot
