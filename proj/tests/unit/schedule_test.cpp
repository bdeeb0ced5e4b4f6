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


#include "adiarot/schedule.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "adiarot/errors.hpp"
#include "adiarot/models.hpp"

using namespace adiarot;

namespace {

// Simpson's rule on a fine grid.
template <class F>
double simpson(F f, double a, double b, int n = 20000) {
    double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0;
}

// dt/dtheta for the three-level search model from its closed-form spectrum.
double search_inverse_rate(double a, double theta) {
    double b = std::sqrt(1 - a * a);
    double s = std::sin(theta), c = std::cos(theta);
    double g1 = 1 - b * s, g2 = 1 + b * s;
    double total = a * a / (c * c + a * a * s * s);
    double c1sq = total * g1 / 2;
    double c2sq = std::max(total - c1sq, 0.0);
    double r1 = g1 * g1 / std::sqrt(c1sq);
    double r2 = c2sq > 0 ? g2 * g2 / std::sqrt(c2sq) : INFINITY;
    return 1.0 / std::min(r1, r2);
}

}  // namespace

TEST(linear_schedule, examples) {
    Schedule s = linear_schedule(0.0, kPi / 4, 1.0);
    ASSERT_NEAR(s.theta_at(0.5), kPi / 8, 1e-15);
    ASSERT_EQ(s.theta_at(0.0), 0.0);
    ASSERT_EQ(s.theta_at(1.0), kPi / 4);
    ASSERT_EQ(s.theta_at(-3.0), 0.0);
    ASSERT_EQ(s.theta_at(7.0), kPi / 4);
    Schedule down = linear_schedule(kPi / 2, 0.0, 4.0, 2, 5);
    ASSERT_EQ(down.stage, 2u);
    ASSERT_EQ(down.size(), 5u);
    ASSERT_NEAR(down.theta_at(1.0), 3 * kPi / 8, 1e-15);
    for (double r : down.rate) ASSERT_NEAR(r, kPi / 8, 1e-15);
}

TEST(linear_schedule, errors) {
    ASSERT_THROW(linear_schedule(0, 1, 0.0), ValidationError);
    ASSERT_THROW(linear_schedule(0, 1, -1.0), ValidationError);
    ASSERT_THROW(linear_schedule(0, 1, 1.0, 0, 1), ValidationError);
    ASSERT_THROW(Schedule{}.theta_at(0.0), ValidationError);
}

TEST(local_schedule, time_is_strictly_increasing_and_theta_monotone) {
    ModelInstance m = build_history(5, HistoryPath::Stepwise);
    for (std::size_t st = 0; st < 5; ++st) {
        Schedule s = local_adiabatic_schedule(gap_trace(m.hamiltonian, st, 201));
        ASSERT_EQ(s.stage, st);
        ASSERT_EQ(s.t.front(), 0.0);
        for (std::size_t i = 1; i < s.size(); ++i) {
            ASSERT_GT(s.t[i], s.t[i - 1]);
            ASSERT_GT(s.theta[i], s.theta[i - 1]);
        }
        ASSERT_DOUBLE_EQ(s.total_time, s.t.back());
    }
}

TEST(local_schedule, total_time_scales_as_inverse_epsilon) {
    SpectrumTrace t = gap_trace(build_search(0.2).hamiltonian, 0, 401);
    double t1 = local_adiabatic_schedule(t, {0.05}).total_time;
    double t2 = local_adiabatic_schedule(t, {0.025}).total_time;
    ASSERT_NEAR(t2 / t1, 2.0, 1e-12);
}

TEST(local_schedule, search_time_matches_closed_form_quadrature) {
    for (double n : {4.0, 16.0, 64.0}) {
        double a = 1 / std::sqrt(n);
        double expect = simpson([&](double th) { return search_inverse_rate(a, th); }, 0.0, kPi / 2);
        Schedule s = local_adiabatic_schedule(gap_trace(build_search(a).hamiltonian, 0, 4001), {1.0});
        ASSERT_NEAR(s.total_time / expect, 1.0, 2e-3) << "N = " << n;
    }
    double a = 0.5;
    double t4 = simpson([&](double th) { return search_inverse_rate(a, th); }, 0.0, kPi / 2);
    ASSERT_NEAR(t4, 6.476, 2e-3);
}

TEST(local_schedule, constant_gap_stage_takes_pi_over_8_epsilon) {
    const double eps = 0.02;
    PlaquetteProtocol p = build_plaquette_protocol(4, {{{{0, 1, 2, 3}}, "p"}}, {});
    Schedule one = local_adiabatic_schedule(gap_trace(p.hamiltonian, 0, 101), {eps});
    ASSERT_NEAR(one.total_time, kPi / (8 * eps), 1e-9);
    // n blocks rotating together share one degenerate excited level whose
    // coupling is the norm over the whole level, 2 sqrt(n).
    for (auto [lx, ly] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
        ModelInstance c = build_cluster(lx, ly);
        ClusterGrid grid(lx, ly);
        for (std::size_t st = 0; st < 2; ++st) {
            double blocks = 0;
            for (std::size_t q = 0; q < grid.site_count(); ++q) blocks += grid.odd(static_cast<SiteId>(q)) == (st == 0);
            Schedule s = local_adiabatic_schedule(gap_trace(c.hamiltonian, st, 33), {eps});
            ASSERT_NEAR(s.total_time, std::sqrt(blocks) * kPi / (8 * eps), 1e-6) << lx << "x" << ly << " stage " << st;
        }
    }
}

TEST(local_schedule, vanishing_gap_rules) {
    SpectrumTrace t;
    t.theta = {0.0, 0.5, 1.0};
    t.levels = {{0, 1, 1}, {0, 0, 2}, {0, 1e-4, 3}};
    t.couplings = {{0, 0.5, 0.5}, {0, 0.0, 0.5}, {0, 0.0, 0.5}};
    // Level 1 closes at theta = 0.5 but is uncoupled there: skipped, and a
    // tiny uncoupled gap does not slow the schedule either.
    auto rates = local_adiabatic_rates(t, {0.1});
    ASSERT_NEAR(rates[0], 0.1 * 1 / 0.5, 1e-12);
    ASSERT_NEAR(rates[1], 0.1 * 4 / 0.5, 1e-12);
    ASSERT_NEAR(rates[2], 0.1 * 9 / 0.5, 1e-12);
    t.couplings[1][1] = 0.3;
    ASSERT_THROW(local_adiabatic_rates(t, {0.1}), NumericalError);
    t.couplings[1][1] = 0.0;
    t.couplings[1][2] = 0.0;
    ASSERT_NEAR(local_adiabatic_rates(t, {0.1, 1e-6})[1], 0.1 * 4 / 1e-6, 1e-3);
    t.levels[1][2] = 0.0;
    ASSERT_THROW(local_adiabatic_rates(t, {0.1}), NumericalError);
}

TEST(local_schedule, errors) {
    SpectrumTrace t = gap_trace(build_search(0.5).hamiltonian, 0, 11);
    ASSERT_THROW(local_adiabatic_rates(t, {0.0}), ValidationError);
    ASSERT_THROW(local_adiabatic_rates(t, {-1.0}), ValidationError);
    ASSERT_THROW(local_adiabatic_rates(t, {0.1, 0.0}), ValidationError);
    std::vector<double> th{0.0, 1.0}, bad{1.0, 0.0}, shortr{1.0};
    ASSERT_THROW(schedule_from_rates(0, th, bad, 0.1), NumericalError);
    ASSERT_THROW(schedule_from_rates(0, th, shortr, 0.1), ValidationError);
    std::vector<double> ok{2.0, 2.0};
    Schedule s = schedule_from_rates(3, th, ok, 0.1);
    ASSERT_NEAR(s.total_time, 0.5, 1e-15);
    ASSERT_EQ(s.epsilon, 0.1);
}
