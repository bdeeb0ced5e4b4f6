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

#include <gtest/gtest.h>

#include <random>

#include "../oracles.hpp"
#include "adiarot/errors.hpp"
#include "adiarot/krylov.hpp"
#include "adiarot/models.hpp"

using namespace adiarot;

TEST(low_spectrum, examples) {
    OperatorMatrix block{Matrix(driving_block(2.0, 0.3).cast<cplx>())};
    Eigenpairs e = low_spectrum(block, 2);
    ASSERT_NEAR(e.values(0), 0.0, 1e-14);
    ASSERT_NEAR(e.values(1), 2.0, 1e-14);

    OperatorMatrix hf = assemble(history_final_terms(2), HilbertLayout::levels(3));
    Eigenpairs f = low_spectrum(hf, 3);
    ASSERT_NEAR(f.values(0), 0.0, 1e-14);
    ASSERT_NEAR(f.values(1), 0.5, 1e-14);
    ASSERT_NEAR(f.values(2), 1.5, 1e-14);
}

TEST(low_spectrum, errors) {
    Matrix m(2, 2);
    m << 1, 0.5, 0, 1;
    ASSERT_THROW(low_spectrum(OperatorMatrix(m), 1), ValidationError);
    OperatorMatrix ok(Matrix(Matrix::Identity(3, 3)));
    ASSERT_THROW(low_spectrum(ok, 0), ValidationError);
    ASSERT_THROW(low_spectrum(ok, 4), ValidationError);
}

TEST(low_spectrum, krylov_agrees_with_dense_on_a_transverse_field_chain) {
    const int n = 9;
    std::vector<MultiSiteOperator> terms;
    for (int q = 0; q < n; ++q) {
        terms.push_back(MultiSiteOperator::pauli_product(-1.6, {{q, SiteOperator::x()}}));
        terms.push_back(MultiSiteOperator::pauli_product(-1.0, {{q, SiteOperator::z()}, {(q + 1) % n, SiteOperator::z()}}));
    }
    OperatorMatrix h = assemble(terms, HilbertLayout::qubits(n));
    ASSERT_TRUE(h.is_sparse());
    Eigenpairs k = krylov_lowest(h, 6);
    Eigen::VectorXd exact = oracle::eigenvalues(h.to_dense());
    for (int i = 0; i < 6; ++i) {
        ASSERT_NEAR(k.values(i), exact(i), 1e-9);
        double residual = (h.apply(k.vectors.col(i)) - k.values(i) * k.vectors.col(i)).norm();
        ASSERT_LT(residual, 1e-9);
    }
}

TEST(gap_trace, search_endpoints) {
    ModelInstance m = build_search(0.5);
    SpectrumTrace t = gap_trace(m.hamiltonian, 0, 401);
    ASSERT_DOUBLE_EQ(t.theta.front(), kPi / 2);
    ASSERT_DOUBLE_EQ(t.theta.back(), 0.0);
    ASSERT_NEAR(t.gap(0, 1), 1 - std::sqrt(3.0) / 2, 1e-12);
    ASSERT_NEAR(t.gap(400, 1), 1.0, 1e-12);
    for (std::size_t i = 0; i < t.size(); ++i) {
        ASSERT_NEAR(t.levels[i][0], 0.0, 1e-9);
        ASSERT_EQ(t.couplings[i][0], 0.0);
        for (std::size_t k = 1; k < t.level_count(); ++k) ASSERT_LE(t.levels[i][k - 1], t.levels[i][k]);
    }
}

TEST(gap_trace, stepwise_history_final_gap) {
    ModelInstance m = build_history(6, HistoryPath::Stepwise);
    SpectrumTrace last = gap_trace(m.hamiltonian, 5, 401);
    Eigen::VectorXd exact = oracle::hopping_chain(6).selfadjointView<Eigen::Lower>().eigenvalues();
    ASSERT_NEAR(last.gap(400, 1), exact(1), 1e-12);
    ASSERT_NEAR(last.gap(400, 1), 1 - std::cos(kPi / 7), 1e-12);
}

TEST(gap_trace, couplings_match_a_finite_difference_oracle) {
    ModelInstance m = build_search(0.3);
    SpectrumTrace t = gap_trace(m.hamiltonian, 0, 9);
    for (std::size_t i = 1; i + 1 < t.size(); ++i) {
        double th = t.theta[i];
        const double h = 1e-5;
        oracle::Mat d = (m.hamiltonian.evaluate(0, th + h).to_dense() - m.hamiltonian.evaluate(0, th - h).to_dense()) / (2 * h);
        Eigen::SelfAdjointEigenSolver<oracle::Mat> es(m.hamiltonian.evaluate(0, th).to_dense());
        for (int k = 1; k < 3; ++k) {
            double c = std::abs(es.eigenvectors().col(k).dot(d * es.eigenvectors().col(0)));
            ASSERT_NEAR(t.couplings[i][static_cast<std::size_t>(k)], c, 1e-8);
        }
    }
}

TEST(gap_trace, degenerate_ground_space_couplings_are_projected) {
    // The last toric stage ends on the fourfold degenerate torus ground space.
    ToricModel t = build_toric(2, 2);
    const std::size_t last = t.model.hamiltonian.stage_count() - 1;
    SpectrumTrace trace = gap_trace(t.model.hamiltonian, last, 5);
    const auto &end = trace.levels.back();
    ASSERT_NEAR(end[3] - end[0], 0.0, 1e-9);
    ASSERT_GT(end[4] - end[0], 1.0);
    for (std::size_t i = 0; i < trace.size(); ++i) {
        for (std::size_t k = 1; k < trace.level_count(); ++k) {
            ASSERT_TRUE(std::isfinite(trace.couplings[i][k]));
        }
    }
}

TEST(check_monotone_gap, search_trace_is_nondecreasing_in_time) {
    ModelInstance m = build_search(0.1);
    SpectrumTrace t = gap_trace(m.hamiltonian, 0, 401);
    MonotoneReport r = check_monotone_gap(t);
    ASSERT_TRUE(r.is_monotone);
    ASSERT_EQ(r.direction.front(), 1);
}

TEST(check_monotone_gap, constant_trace_and_short_trace) {
    SpectrumTrace flat;
    flat.theta = {0.0, 0.1, 0.2, 0.3};
    flat.levels = {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
    flat.couplings = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    ASSERT_TRUE(check_monotone_gap(flat).is_monotone);
    SpectrumTrace kink = flat;
    kink.levels[2][1] = 0.5;
    MonotoneReport r = check_monotone_gap(kink);
    ASSERT_FALSE(r.is_monotone);
    ASSERT_NEAR(r.worst_violation, 0.5, 1e-15);
    flat.theta.resize(2);
    flat.levels.resize(2);
    flat.couplings.resize(2);
    ASSERT_THROW(check_monotone_gap(flat), ValidationError);
}

TEST(check_monotone_gap, random_driven_instances) {
    std::mt19937_64 rng(2024);
    std::size_t suspended = 0;
    for (int n = 0; n < 60; ++n) {
        DrivenInstance inst = random_driven_instance(rng, 3 + n % 10, 0.5 + 0.05 * n);
        SpectrumTrace t = gap_trace(inst.model.hamiltonian, 0, 97);
        MonotoneReport r = check_monotone_gap(t);
        ASSERT_TRUE(r.is_monotone) << "instance " << n << " worst " << r.worst_violation;
        suspended += r.suspended;
    }
    ASSERT_LT(suspended, 60u * 96u);
}

TEST(bound_report, search_quarter_pi) {
    BoundReport b = bound_report(build_search(0.5).hamiltonian, 0, kPi / 4, search_spec(0.5, kPi / 4));
    ASSERT_TRUE(b.holds());
    // First excited level: exact coupling from the closed form.
    SearchModel sm{0.5};
    ASSERT_NEAR(b.levels[0].lhs, std::pow(sm.first_coupling(kPi / 4), 2), 1e-12);
    ASSERT_NEAR(b.levels[0].g_k, sm.first_gap(kPi / 4), 1e-12);
    ASSERT_NEAR(b.g1_h0, 1.0, 1e-12);
}

TEST(bound_report, theta_zero_endpoint) {
    BoundReport b = bound_report(build_search(0.4).hamiltonian, 0, 0.0, search_spec(0.4, 0.0));
    ASSERT_TRUE(b.holds());
    ASSERT_TRUE(std::isinf(b.r));
    for (const auto &l : b.levels) {
        ASSERT_TRUE(std::isfinite(l.rhs));
        if (l.c_mk == 0.0) {
            ASSERT_LE(l.lhs, l.rhs + 1e-12);
        }
    }
}

TEST(bound_report, random_instances_total_coupling_closed_form) {
    std::mt19937_64 rng(77);
    std::size_t variant_failures = 0;
    for (int n = 0; n < 200; ++n) {
        double k = 0.5 + 2.5 * static_cast<double>(rng() % 1000) / 1000.0;
        DrivenInstance inst = random_driven_instance(rng, 3 + n % 10, k);
        for (int q = 0; q < 16; ++q) {
            RotatedGroundSpec spec = inst.spec;
            spec.theta = kPi / 2 * (q + 0.5) / 16.0;
            BoundReport b = bound_report(inst.model.hamiltonian, 0, spec.theta, spec);
            ASSERT_TRUE(b.holds()) << "instance " << n << " theta " << spec.theta;
            double aj = spec.amplitudes[spec.j];
            double s = std::sin(spec.theta), c = std::cos(spec.theta);
            double total = 0.0;
            for (const auto &l : b.levels) total += l.lhs;
            ASSERT_NEAR(total, k * k * aj * aj / (c * c + aj * aj * s * s), 1e-9);
            variant_failures += b.variant_violations();
        }
    }
    // The refinement with (1 + r^2) and A/K^2 is not a bound.
    ASSERT_GT(variant_failures, 0u);
}

TEST(bound_report, history_stage) {
    ModelInstance m = build_history(6, HistoryPath::Stepwise);
    for (std::size_t s = 0; s < 6; ++s) {
        for (double th : {0.1, 0.4, kPi / 4}) {
            BoundReport b = bound_report(m.hamiltonian, s, th, history_stage_spec(6, s, th));
            ASSERT_TRUE(b.holds());
        }
    }
}

TEST(bound_report, not_applicable_to_parallel_blocks) {
    ModelInstance c = build_cluster(2, 2);
    auto spec = RotatedGroundSpec::on_basis(16, {0}, 1, {1.0}, 0, 0.3);
    ASSERT_THROW(bound_report(c.hamiltonian, 0, 0.3, spec), ValidationError);
}
