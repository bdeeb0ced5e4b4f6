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


#include "adiarot/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <span>
#include <sstream>

#include "adiarot/models.hpp"
#include "adiarot/spectra.hpp"

namespace adiarot {

namespace {

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::vector<ModelInstance> reference_models() {
    std::vector<ModelInstance> out;
    out.push_back(build_toric(2, 2).model);
    out.push_back(build_cluster(2, 2));
    out.push_back(build_cluster(2, 3));
    out.push_back(build_history(4, HistoryPath::Stepwise));
    out.push_back(build_history(4, HistoryPath::SingleRotation));
    out.push_back(build_search(0.3));
    // Plain interpolation is frustrated in between: keep it last so the
    // zero-energy suite can leave it out.
    out.push_back(build_history(4, HistoryPath::Linear));
    return out;
}

PropertyResult plaquette_block() {
    PropertyResult r{"plaquette-block-spectrum", 0, 0, {}};
    std::vector<SiteId> plaq{0, 1, 2, 3};
    PlaquetteProtocol p = build_plaquette_protocol(4, {{{plaq}, "single"}}, {});
    double worst = 0.0;
    for (std::size_t i = 0; i < 401; ++i) {
        double theta = kPi / 4 * static_cast<double>(i) / 400.0;
        Matrix h = p.hamiltonian.evaluate(0, theta).to_dense();
        Matrix block(2, 2);
        block << h(0, 0), h(0, 15), h(15, 0), h(15, 15);
        Eigenpairs e = dense_eigenpairs(block);
        worst = std::max({worst, std::abs(e.values(0)), std::abs(e.values(1) - 2.0)});
        ++r.checks;
        if (std::abs(e.values(0)) > 1e-10 || std::abs(e.values(1) - 2.0) > 1e-10) ++r.failures;
    }
    r.detail = "max deviation " + sci(worst);
    return r;
}

PropertyResult zero_ground_energy(std::span<const ModelInstance> models) {
    PropertyResult r{"zero-ground-energy", 0, 0, {}};
    double worst = 0.0;
    for (const auto &m : models) {
        const auto &h = m.hamiltonian;
        for (std::size_t s = 0; s < h.stage_count(); ++s) {
            const Stage &st = h.stage(s);
            for (std::size_t i = 0; i < 64; ++i) {
                double theta = st.theta_start + (st.theta_end - st.theta_start) * static_cast<double>(i) / 63.0;
                OperatorMatrix hm = h.evaluate(s, theta);
                Eigenpairs e = low_spectrum(hm, 1);
                double residual = hm.apply(e.vectors.col(0)).norm();
                double dev = std::max(std::abs(e.values(0)), residual);
                worst = std::max(worst, dev);
                ++r.checks;
                if (dev > 1e-9) ++r.failures;
            }
        }
    }
    r.detail = "max |E0|, |H v0| " + sci(worst);
    return r;
}

PropertyResult derivative_matches(const std::vector<ModelInstance> &models, std::mt19937_64 &rng) {
    PropertyResult r{"derivative-finite-difference", 0, 0, {}};
    std::uniform_int_distribution<std::size_t> pick_model(0, models.size() - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    constexpr double kStep = 1e-4;
    double worst = 0.0;
    for (int n = 0; n < 50; ++n) {
        const auto &h = models[pick_model(rng)].hamiltonian;
        std::uniform_int_distribution<std::size_t> pick_stage(0, h.stage_count() - 1);
        std::size_t s = pick_stage(rng);
        const Stage &st = h.stage(s);
        double lo = std::min(st.theta_start, st.theta_end) + kStep;
        double hi = std::max(st.theta_start, st.theta_end) - kStep;
        double theta = lo + (hi - lo) * unit(rng);
        Matrix fd = (h.evaluate(s, theta + kStep).to_dense() - h.evaluate(s, theta - kStep).to_dense()) / (2 * kStep);
        double dev = (fd - h.derivative(s, theta).to_dense()).cwiseAbs().maxCoeff();
        worst = std::max(worst, dev);
        ++r.checks;
        if (dev > 1e-6) ++r.failures;
    }
    r.detail = "max elementwise deviation " + sci(worst);
    return r;
}

PropertyResult continuity(const std::vector<ModelInstance> &models) {
    PropertyResult r{"stage-continuity", 0, 0, {}};
    double worst = 0.0;
    for (const auto &m : models) {
        double d = m.hamiltonian.continuity_defect();
        worst = std::max(worst, d);
        ++r.checks;
        if (d > 1e-12) ++r.failures;
    }
    r.detail = "max defect " + sci(worst);
    return r;
}

PropertyResult random_instances(std::mt19937_64 &rng, PropertyResult &bounds) {
    PropertyResult mono{"gap-monotone-random", 0, 0, {}};
    bounds = {"coupling-bounds-random", 0, 0, {}};
    std::uniform_int_distribution<std::size_t> dim(3, 12);
    std::uniform_real_distribution<double> strength(0.5, 3.0);
    std::size_t variant = 0;
    std::size_t levels = 0;
    for (int n = 0; n < 200; ++n) {
        DrivenInstance inst = random_driven_instance(rng, dim(rng), strength(rng));
        SpectrumTrace trace = gap_trace(inst.model.hamiltonian, 0, 65);
        MonotoneReport rep = check_monotone_gap(trace);
        ++mono.checks;
        if (!rep.is_monotone) ++mono.failures;
        for (int q = 0; q < 16; ++q) {
            RotatedGroundSpec spec = inst.spec;
            spec.theta = kPi / 2 * (static_cast<double>(q) + 0.5) / 16.0;
            BoundReport b = bound_report(inst.model.hamiltonian, 0, spec.theta, spec);
            ++bounds.checks;
            if (!b.holds()) ++bounds.failures;
            variant += b.variant_violations();
            levels += b.levels.size();
        }
    }
    bounds.detail = "the (1 + r^2) variant fails on " + std::to_string(variant) + " of " + std::to_string(levels) + " levels";
    return mono;
}

}  // namespace

std::vector<PropertyResult> run_property_suites(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ModelInstance> models = reference_models();
    std::vector<PropertyResult> out;
    out.push_back(plaquette_block());
    out.push_back(zero_ground_energy(std::span<const ModelInstance>(models).first(models.size() - 1)));
    out.push_back(derivative_matches(models, rng));
    out.push_back(continuity(models));
    PropertyResult bounds;
    out.push_back(random_instances(rng, bounds));
    out.push_back(bounds);
    return out;
}

int verify_command(std::uint64_t seed, std::string *report) {
    std::vector<PropertyResult> results = run_property_suites(seed);
    std::ostringstream out;
    bool ok = true;
    for (const auto &r : results) {
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << " checks=" << r.checks << " failures=" << r.failures;
        if (!r.detail.empty()) out << " (" << r.detail << ")";
        out << '\n';
        ok = ok && r.passed();
    }
    if (report) *report = out.str();
    return ok ? 0 : 3;
}

}  // namespace adiarot
