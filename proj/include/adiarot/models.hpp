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

#ifndef ADIAROT_MODELS_HPP
#define ADIAROT_MODELS_HPP

#include <array>
#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "adiarot/tdham.hpp"

namespace adiarot {

/// Largest number of spins a lattice builder accepts.
inline constexpr std::size_t kMaxModelSpins = 16;

/// A staged protocol with its start state and the state it should reach.
struct ModelInstance {
    std::string name;
    StagedHamiltonian hamiltonian;
    StateVector initial_state;
    StateVector target;
};

// ---------------------------------------------------------------------------
// Plaquette protocols

/// Plaquettes rotated in parallel during one stage.
struct PlaquetteStage {
    std::vector<std::vector<SiteId>> plaquettes;
    std::string label;
};

struct PlaquetteProtocol {
    StagedHamiltonian hamiltonian;
    /// fresh[s][p]: links of plaquette p in stage s not touched by any
    /// earlier stage.
    std::vector<std::vector<std::vector<SiteId>>> fresh;
};

/// Stages each plaquette P as
///   1 + (sin^2 - cos^2) sum_{l fresh} sigma_l Z_l / |fresh| - 2 sin cos X_P,
/// theta 0 -> pi/4, which rotates the reference configuration into an equal
/// superposition with its X_P image. sigma_l = -1 marks links whose reference
/// value is 1. Throws ValidationError for a plaquette without fresh links or
/// when plaquettes of one stage overlap on a fresh link.
PlaquetteProtocol build_plaquette_protocol(std::size_t spins, const std::vector<PlaquetteStage> &plan,
                                           std::vector<MultiSiteOperator> constant_terms,
                                           const std::vector<int> &reference_bits = {});

// ---------------------------------------------------------------------------
// Toric code

enum class ToricSector { None, H, V, HV };

ToricSector parse_toric_sector(std::string_view text);
std::string to_string(ToricSector sector);

/// Links of an Lx x Ly torus. h(x, y) is the link leaving vertex (x, y) in
/// +x, v(x, y) the one leaving it in +y. Plaquette (x, y) has corners
/// (x, y) and (x+1, y+1).
class ToricLattice {
   public:
    ToricLattice(std::size_t lx, std::size_t ly);

    std::size_t lx() const { return lx_; }
    std::size_t ly() const { return ly_; }
    std::size_t spin_count() const { return 2 * lx_ * ly_; }

    SiteId h(std::size_t x, std::size_t y) const;
    SiteId v(std::size_t x, std::size_t y) const;
    std::array<SiteId, 4> plaquette(std::size_t x, std::size_t y) const;
    std::array<SiteId, 4> star(std::size_t x, std::size_t y) const;
    std::vector<std::array<SiteId, 4>> plaquettes() const;
    std::vector<std::array<SiteId, 4>> stars() const;
    /// Links flipped in the reference configuration of a sector.
    std::vector<SiteId> sector_loop(ToricSector sector) const;

   private:
    std::size_t lx_;
    std::size_t ly_;
};

struct ToricPlan {
    std::vector<PlaquetteStage> stages;
    /// Plaquettes left out because they would add no fresh link.
    std::vector<std::array<SiteId, 4>> skipped;
};

/// Alternate rows in two parallel steps, the remaining rows swept column by
/// column, then the last column one plaquette at a time.
ToricPlan toric_plan(const ToricLattice &lattice);

struct ToricModel {
    ModelInstance model;
    ToricPlan plan;
};

ToricModel build_toric(std::size_t lx, std::size_t ly, ToricSector sector = ToricSector::None);

/// Uniform superposition over the plaquette-flip orbit of the sector's
/// reference configuration.
StateVector toric_target(std::size_t lx, std::size_t ly, ToricSector sector = ToricSector::None);

// ---------------------------------------------------------------------------
// Cluster state

class ClusterGrid {
   public:
    ClusterGrid(std::size_t lx, std::size_t ly);

    std::size_t lx() const { return lx_; }
    std::size_t ly() const { return ly_; }
    std::size_t site_count() const { return lx_ * ly_; }
    SiteId site(std::size_t x, std::size_t y) const;
    std::vector<SiteId> neighbors(SiteId s) const;
    std::vector<std::pair<SiteId, SiteId>> edges() const;
    /// X on s, Z on every neighbor of s.
    MultiSiteOperator stabilizer(SiteId s) const;
    std::vector<MultiSiteOperator> stabilizers() const;
    bool odd(SiteId s) const;

   private:
    std::size_t lx_;
    std::size_t ly_;
};

/// Two stages: odd sites (x + y odd) in parallel, then even sites.
ModelInstance build_cluster(std::size_t lx, std::size_t ly);

/// 2^{-n/2} (-1)^{#edges with both ends 1} on every configuration.
StateVector cluster_target(std::size_t lx, std::size_t ly);

// ---------------------------------------------------------------------------
// History state

enum class HistoryPath { Linear, Stepwise, SingleRotation };

HistoryPath parse_history_path(std::string_view text);
std::string to_string(HistoryPath path);

/// sum_{t=1..L} |t><t|.
std::vector<MultiSiteOperator> history_initial_terms(std::size_t steps);
/// (1/2) sum_{t<L} (|t> - |t+1>)(<t| - <t+1|).
std::vector<MultiSiteOperator> history_final_terms(std::size_t steps);

/// Linear: cos^2 H_i + sin^2 H_f for theta 0 -> pi/2, so sin^2(theta) is the
/// interpolation parameter. Stepwise: L stages, stage t rotating |t+1><t+1|
/// into the t-th hopping term, theta 0 -> pi/4. Single rotation: one stage,
/// theta pi/2 -> pi/4, rotating |1><1| into the first hopping term with the
/// rest of H_f held fixed.
ModelInstance build_history(std::size_t steps, HistoryPath path);

/// Uniform superposition over the L + 1 clock states.
StateVector history_target(std::size_t steps);

/// Decomposition of stepwise stage t at `theta` for bound_report.
RotatedGroundSpec history_stage_spec(std::size_t steps, std::size_t stage, double theta);

// ---------------------------------------------------------------------------
// Search

/// Levels of the effective search space.
inline constexpr std::size_t kSearchMarked = 0;
inline constexpr std::size_t kSearchComplement = 1;
inline constexpr std::size_t kSearchInitial = 2;

struct SearchModel {
    double a0 = 0.5;

    static SearchModel from_database_size(double n);
    double b0() const;
    /// 1/a0^2.
    double database_size() const;
    /// 1 - sin(theta) sqrt(1 - a0^2).
    double first_gap(double theta) const;
    double second_gap(double theta) const;
    /// |<1|dH/dtheta|0>| of the effective model.
    double first_coupling(double theta) const;
};

/// Three-level model on {|m>, |psi0_perp>, |i>}, theta pi/2 -> 0, from |i>
/// to |m>.
ModelInstance build_search(double a0);

/// Same Hamiltonian on N computational states plus |i> (level N).
ModelInstance build_search_full(std::size_t n, std::size_t marked);

/// Decomposition of the search Hamiltonian at `theta` for bound_report.
RotatedGroundSpec search_spec(double a0, double theta);

// ---------------------------------------------------------------------------
// Random driven instances

/// A theta-independent H0 >= 0 whose null space is span{psi_a, gamma_m},
/// plus one driving block of strength K on {gamma_m, gamma_j}.
struct DrivenInstance {
    ModelInstance model;
    /// Decomposition at theta = 0; set .theta before use.
    RotatedGroundSpec spec;
    double strength = 1.0;
};

/// dimension in [3, 12]. gamma_i are the first dimension - 1 basis states,
/// gamma_m the last. H0's nonzero levels are drawn from [0.2, 3).
DrivenInstance random_driven_instance(std::mt19937_64 &rng, std::size_t dimension, double strength);

}  // namespace adiarot

#endif
