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

#include <gtest/gtest.h>

#include <random>

#include "../oracles.hpp"
#include "adiarot/errors.hpp"
#include "adiarot/models.hpp"

using namespace adiarot;

namespace {

std::vector<Schedule> local_schedules(const StagedHamiltonian &h, double eps, std::size_t grid = 401) {
    std::vector<Schedule> out;
    for (std::size_t s = 0; s < h.stage_count(); ++s) out.push_back(local_adiabatic_schedule(gap_trace(h, s, grid), {eps}));
    return out;
}

EvolutionReport run(const ModelInstance &m, double eps) {
    auto sched = local_schedules(m.hamiltonian, eps);
    return propagate(m.hamiltonian, sched, m.initial_state, m.target);
}

std::uint64_t mask(int n, std::initializer_list<int> sites) {
    std::uint64_t m = 0;
    for (int s : sites) m |= std::uint64_t{1} << (n - 1 - s);
    return m;
}

}  // namespace

TEST(step, examples) {
    StateVector psi = StateVector::Random(4).normalized();
    ASSERT_LT((step(OperatorMatrix(Matrix(Matrix::Zero(4, 4))), 0.7, psi) - psi).norm(), 1e-14);

    Matrix z(2, 2);
    z << 1, 0, 0, -1;
    StateVector plus = StateVector::Constant(2, 1 / std::sqrt(2.0));
    StateVector out = step(OperatorMatrix(z), kPi, plus);
    ASSERT_LT((out + plus).norm(), 1e-14);
    out = step(OperatorMatrix(z), kPi / 2, plus);
    ASSERT_NEAR(std::abs(out(0) - cplx(0, -1) / std::sqrt(2.0)), 0.0, 1e-14);
    ASSERT_NEAR(std::abs(out(1) - cplx(0, 1) / std::sqrt(2.0)), 0.0, 1e-14);

    OperatorMatrix block{Matrix(driving_block(2.0, 0.37).cast<cplx>())};
    StateVector v = StateVector::Random(2).normalized();
    for (double dt : {0.01, 1.0, 37.0}) ASSERT_NEAR(step(block, dt, v).norm(), 1.0, 1e-12);
}

TEST(step, errors) {
    OperatorMatrix id(Matrix(Matrix::Identity(2, 2)));
    StateVector v = basis_state(2, 0);
    ASSERT_THROW(step(id, 0.0, v), ValidationError);
    ASSERT_THROW(step(id, -1.0, v), ValidationError);
    ASSERT_THROW(step(id, 1.0, basis_state(3, 0)), ValidationError);
}

TEST(step, sparse_dense_and_oracle_agree) {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> nd;
    const int n = 7;
    std::vector<MultiSiteOperator> terms;
    oracle::Mat ref = oracle::Mat::Zero(1 << n, 1 << n);
    for (int q = 0; q < n; ++q) {
        double a = nd(rng), b = nd(rng);
        terms.push_back(MultiSiteOperator::pauli_product(a, {{q, SiteOperator::x()}}));
        terms.push_back(MultiSiteOperator::pauli_product(b, {{q, SiteOperator::z()}, {(q + 1) % n, SiteOperator::z()}}));
        ref += oracle::pauli_string(n, {{q, 'X'}}, a) + oracle::pauli_string(n, {{q, 'Z'}, {(q + 1) % n, 'Z'}}, b);
    }
    OperatorMatrix sparse = assemble(terms, HilbertLayout::qubits(n));
    ASSERT_TRUE(sparse.is_sparse());
    OperatorMatrix dense(sparse.to_dense());
    StateVector psi = StateVector::Random(1 << n).normalized();
    for (double dt : {0.01, 0.3}) {
        StateVector want = oracle::evolve_exact(ref, dt, psi);
        ASSERT_LT((step(sparse, dt, psi) - want).norm(), 1e-10);
        ASSERT_LT((step(dense, dt, psi) - want).norm(), 1e-10);
    }
}

TEST(fidelity_and_overlap, examples) {
    StateVector a = basis_state(2, 0);
    StateVector b = StateVector::Constant(2, cplx(0, 1) / std::sqrt(2.0));
    ASSERT_NEAR(fidelity(a, b), 0.5, 1e-15);
    ASSERT_NEAR(fidelity(b, b), 1.0, 1e-15);
    // Fourfold degenerate torus ground space: every sector target lies inside it.
    ToricModel t = build_toric(2, 2);
    OperatorMatrix end = t.model.hamiltonian.evaluate(t.model.hamiltonian.stage_count() - 1, kPi / 4);
    for (auto sector : {ToricSector::None, ToricSector::H, ToricSector::V, ToricSector::HV}) {
        ASSERT_NEAR(ground_space_overlap(end, toric_target(2, 2, sector)), 1.0, 1e-10);
    }
    ASSERT_NEAR(ground_space_overlap(end, basis_state(256, 0)), 1.0 / 8, 1e-10);
}

TEST(propagate, errors) {
    ModelInstance m = build_history(3, HistoryPath::Stepwise);
    auto sched = local_schedules(m.hamiltonian, 0.1, 51);
    std::vector<Schedule> two(sched.begin(), sched.begin() + 2);
    ASSERT_THROW(propagate(m.hamiltonian, two, m.initial_state, m.target), ValidationError);
    auto swapped = sched;
    std::swap(swapped[0], swapped[1]);
    ASSERT_THROW(propagate(m.hamiltonian, swapped, m.initial_state, m.target), ValidationError);
    auto short_range = sched;
    short_range[1] = linear_schedule(0.0, 0.5, 1.0, 1);
    ASSERT_THROW(propagate(m.hamiltonian, short_range, m.initial_state, m.target), ValidationError);
    ASSERT_THROW(propagate(m.hamiltonian, sched, 2.0 * m.initial_state, m.target), ValidationError);
    ASSERT_THROW(propagate(m.hamiltonian, sched, m.initial_state, basis_state(5, 0)), ValidationError);
}

TEST(propagate, report_fields) {
    ModelInstance m = build_history(4, HistoryPath::Stepwise);
    auto sched = local_schedules(m.hamiltonian, 0.05, 21);
    EvolutionReport r = propagate(m.hamiltonian, sched, m.initial_state, m.target);
    double total = 0;
    for (const auto &s : sched) total += s.total_time;
    ASSERT_NEAR(r.total_time, total, 1e-9);
    ASSERT_EQ(r.per_stage_fidelity.size(), 4u);
    ASSERT_GE(r.target_fidelity, 0.0);
    ASSERT_LE(r.target_fidelity, 1.0 + 1e-12);
    ASSERT_LE(r.norm_drift, 1e-9 * std::max(1.0, r.total_time));
    for (std::size_t s = 0; s < 4; ++s) {
        std::size_t count = 0;
        for (const auto &o : r.overlap_trace) count += o.stage == s;
        ASSERT_GE(count, 64u);
    }
    for (std::size_t i = 1; i < r.overlap_trace.size(); ++i) ASSERT_GE(r.overlap_trace[i].t, r.overlap_trace[i - 1].t);
    // Theta steps respect the cap.
    ASSERT_GE(r.steps, static_cast<std::size_t>(4 * (kPi / 4) / 1e-3));
    ASSERT_NEAR(r.final_state.norm(), 1.0, 1e-9);
}

TEST(propagate, single_plaquette) {
    PlaquetteProtocol p = build_plaquette_protocol(4, {{{{0, 1, 2, 3}}, "p"}}, {});
    StateVector cat = StateVector::Zero(16);
    cat(0) = cat(15) = 1 / std::sqrt(2.0);
    auto go = [&](double eps) {
        auto sched = local_schedules(p.hamiltonian, eps, 101);
        return propagate(p.hamiltonian, sched, basis_state(16, 0), cat);
    };
    EvolutionReport slow = go(0.005);
    ASSERT_GE(slow.target_fidelity, 0.999);
    ASSERT_GE(slow.min_ground_overlap(), slow.target_fidelity - 0.01);
    // Constant gap 2 and coupling 2 give rate w = 2 eps over T = pi/(8 eps);
    // first-order leakage (2w/g)^2 sin^2(gT/2).
    for (double eps : {0.05, 0.04, 0.03}) {
        double w = 2 * eps, big_t = kPi / (8 * eps);
        double predicted = std::pow(w, 2) * std::pow(std::sin(big_t), 2);
        double got = 1 - go(eps).target_fidelity;
        ASSERT_NEAR(got, predicted, 0.15 * predicted + 2e-4) << "eps " << eps;
    }
}

TEST(propagate, second_plaquette_shares_one_link) {
    const int n = 7;
    PlaquetteProtocol p = build_plaquette_protocol(n, {{{{0, 1, 2, 3}}, "first"}, {{{3, 4, 5, 6}}, "second"}}, {});
    ASSERT_EQ(p.fresh[1][0], (std::vector<SiteId>{4, 5, 6}));
    StateVector want = oracle::subset_closure_state(n, {mask(n, {0, 1, 2, 3}), mask(n, {3, 4, 5, 6})}, 0);
    for (std::uint64_t idx : {0u, 0b0001111u, 0b1111000u, 0b1110111u}) ASSERT_NEAR(std::abs(want(idx)), 0.5, 1e-15);
    auto sched = local_schedules(p.hamiltonian, 0.005, 101);
    EvolutionReport r = propagate(p.hamiltonian, sched, basis_state(1 << n, 0), want);
    ASSERT_GE(r.target_fidelity, 0.999);
    ASSERT_GE(r.per_stage_fidelity[0], 0.999);
}

TEST(propagate, full_search_matches_effective_model) {
    const std::size_t n = 8;
    ModelInstance eff = build_search(1 / std::sqrt(8.0));
    ModelInstance full = build_search_full(n, 5);
    auto sched = local_schedules(eff.hamiltonian, 0.05);
    EvolutionReport a = propagate(eff.hamiltonian, sched, eff.initial_state, eff.target);
    EvolutionReport b = propagate(full.hamiltonian, sched, full.initial_state, full.target);
    ASSERT_NEAR(a.target_fidelity, b.target_fidelity, 1e-10);
    // Same low spectrum as well.
    auto ta = gap_trace(eff.hamiltonian, 0, 41);
    auto tb = gap_trace(full.hamiltonian, 0, 41, 3);
    for (std::size_t i = 0; i < 41; ++i) ASSERT_NEAR(ta.gap(i, 1), tb.gap(i, 1), 1e-10);
}

TEST(propagate, search_infidelity_shrinks_with_epsilon) {
    ModelInstance m = build_search(1 / 8.0);
    double prev = 1.0;
    for (double eps : {0.2, 0.1, 0.05, 0.025}) {
        EvolutionReport r = run(m, eps);
        double inf = 1 - r.target_fidelity;
        ASSERT_LE(inf, 1.1 * prev) << "eps " << eps;
        if (eps <= 0.05) {
            ASSERT_GE(r.min_ground_overlap(), r.target_fidelity - 0.01);
        }
        prev = inf;
    }
    ASSERT_LT(prev, 1e-3);
}

TEST(propagate, history_paths_reach_the_clock_superposition) {
    for (auto path : {HistoryPath::Stepwise, HistoryPath::SingleRotation, HistoryPath::Linear}) {
        EvolutionReport r = run(build_history(4, path), 0.01);
        ASSERT_GE(r.target_fidelity, 0.99) << to_string(path);
    }
}
