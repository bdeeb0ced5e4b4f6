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
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "adiarot/errors.hpp"
#include "adiarot/evolve.hpp"
#include "adiarot/experiment.hpp"
#include "adiarot/fit.hpp"
#include "adiarot/models.hpp"
#include "adiarot/parallel.hpp"
#include "adiarot/schedule.hpp"
#include "adiarot/spectra.hpp"

namespace adiarot {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ModelInstance build_model(const ExperimentConfig &c) {
    switch (c.model) {
        case ModelKind::Toric:
            return build_toric(c.lx, c.ly, parse_toric_sector(c.sector)).model;
        case ModelKind::Cluster:
            return build_cluster(c.lx, c.ly);
        case ModelKind::History:
            return build_history(c.steps, parse_history_path(c.path));
        default:
            return build_search(c.search_overlap());
    }
}

struct GapPoint {
    double gap1 = kNaN;
    double gap2 = kNaN;
    double coupling1 = kNaN;
};

// Gaps above the ground cluster at trace point i.
GapPoint gaps_at(const SpectrumTrace &trace, std::size_t i) {
    GapPoint out;
    const auto &levels = trace.levels[i];
    std::size_t k = 1;
    while (k < levels.size() && levels[k] - levels[0] <= kDegeneracyTolerance) {
        ++k;
    }
    if (k < levels.size()) {
        out.gap1 = levels[k] - levels[0];
        out.coupling1 = trace.couplings[i][k];
    }
    if (k + 1 < levels.size()) {
        out.gap2 = levels[k + 1] - levels[0];
    }
    return out;
}

Curve gap_curve(const std::string &label, const SpectrumTrace &trace, const std::vector<double> &x) {
    Curve c;
    c.label = label;
    c.x = x;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        c.y.push_back(gaps_at(trace, i).gap1);
    }
    return c;
}

// The linear-interpolation comparator on its own parameter s = sin^2(theta).
Curve linear_history_curve(std::size_t steps, std::size_t grid) {
    ModelInstance m = build_history(steps, HistoryPath::Linear);
    SpectrumTrace trace = gap_trace(m.hamiltonian, 0, grid);
    std::vector<double> s;
    for (double th : trace.theta) {
        s.push_back(std::sin(th) * std::sin(th));
    }
    return gap_curve("linear", trace, s);
}

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Files written by the current command, removed again if it fails.
class Outputs {
   public:
    void write(const std::string &path, const std::string &content) {
        written_.push_back(path);
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ValidationError("cannot write " + path);
        }
        out << content;
        out.close();
        if (!out) {
            throw ValidationError("failed while writing " + path);
        }
    }
    void discard() {
        std::error_code ec;
        for (const auto &p : written_) std::filesystem::remove(p, ec);
    }

   private:
    std::vector<std::string> written_;
};

template <typename F>
int guarded(F &&body) {
    Outputs out;
    try {
        body(out);
        return 0;
    } catch (const ValidationError &e) {
        out.discard();
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        out.discard();
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace

RunResult run_experiment(const ExperimentConfig &config) {
    config.validate();
    ModelInstance model = build_model(config);
    const StagedHamiltonian &h = model.hamiltonian;

    std::vector<SpectrumTrace> traces;
    std::vector<Schedule> schedules;
    for (std::size_t s = 0; s < h.stage_count(); ++s) {
        traces.push_back(gap_trace(h, s, config.grid));
        if (config.schedule == ScheduleKind::Local) {
            schedules.push_back(local_adiabatic_schedule(traces.back(), {config.epsilon}));
        } else {
            const Stage &st = h.stage(s);
            double per_stage = *config.time / static_cast<double>(h.stage_count());
            schedules.push_back(linear_schedule(st.theta_start, st.theta_end, per_stage, s, config.grid));
        }
    }
    EvolutionReport report = propagate(h, schedules, model.initial_state, model.target);

    std::map<std::pair<std::size_t, std::size_t>, const OverlapSample *> on_grid;
    for (const auto &sample : report.overlap_trace) {
        if (sample.schedule_index != static_cast<std::size_t>(-1)) {
            on_grid[{sample.stage, sample.schedule_index}] = &sample;
        }
    }

    RunResult result;
    result.epsilon = config.schedule == ScheduleKind::Local ? config.epsilon : 0.0;
    result.total_time = report.total_time;
    result.final_fidelity = report.target_fidelity;
    result.norm_drift = report.norm_drift;
    result.min_gap = std::numeric_limits<double>::infinity();
    double offset = 0.0;
    for (std::size_t s = 0; s < traces.size(); ++s) {
        for (std::size_t i = 0; i < traces[s].size(); ++i) {
            const OverlapSample *sample = on_grid.at({s, i});
            GapPoint g = gaps_at(traces[s], i);
            result.rows.push_back({offset + schedules[s].t[i], traces[s].theta[i], s, g.gap1, g.gap2, g.coupling1,
                                   sample->ground_overlap, sample->norm});
            if (std::isfinite(g.gap1)) {
                result.min_gap = std::min(result.min_gap, g.gap1);
            }
        }
        offset += schedules[s].total_time;
    }

    Curve own;
    own.label = to_string(config.model);
    if (config.model == ModelKind::History) own.label = config.path;
    for (const auto &row : result.rows) {
        own.x.push_back(result.total_time > 0.0 ? row.t / result.total_time : 0.0);
        own.y.push_back(row.gap1);
    }
    result.curves.push_back(std::move(own));
    if (config.model == ModelKind::History && parse_history_path(config.path) != HistoryPath::Linear) {
        result.curves.push_back(linear_history_curve(config.steps, config.grid));
    } else if (config.model == ModelKind::History) {
        // A linear run is drawn on s; compare against an evenly timed stepwise protocol.
        ModelInstance step = build_history(config.steps, HistoryPath::Stepwise);
        const double stages = static_cast<double>(step.hamiltonian.stage_count());
        Curve lin = linear_history_curve(config.steps, config.grid);
        Curve sw;
        sw.label = "stepwise";
        for (std::size_t s = 0; s < step.hamiltonian.stage_count(); ++s) {
            SpectrumTrace tr = gap_trace(step.hamiltonian, s, config.grid);
            for (std::size_t i = 0; i < tr.size(); ++i) {
                sw.x.push_back((static_cast<double>(s) + static_cast<double>(i) / static_cast<double>(tr.size() - 1)) /
                               stages);
                sw.y.push_back(gaps_at(tr, i).gap1);
            }
        }
        lin.label = "linear";
        result.curves = {std::move(sw), std::move(lin)};
    }
    if (!std::isfinite(result.min_gap)) result.min_gap = kNaN;
    return result;
}

std::string trace_csv(const std::vector<TraceRow> &rows) {
    std::ostringstream out;
    out << "t,theta,stage,gap1,gap2,coupling1,ground_overlap,norm\n";
    for (const auto &r : rows) {
        out << fmt(r.t) << ',' << fmt(r.theta) << ',' << r.stage << ',' << fmt(r.gap1) << ',' << fmt(r.gap2) << ','
            << fmt(r.coupling1) << ',' << fmt(r.ground_overlap) << ',' << fmt(r.norm) << '\n';
    }
    return out.str();
}

int run_command(const ExperimentConfig &config, std::string *summary) {
    return guarded([&](Outputs &files) {
        RunResult r = run_experiment(config);
        if (!config.csv_path.empty()) {
            files.write(config.csv_path, trace_csv(r.rows));
        }
        if (!config.svg_path.empty()) {
            double reference = config.model == ModelKind::History ? r.rows.back().gap1 : kNaN;
            files.write(config.svg_path,
                       line_chart(r.curves, {"Gap along the protocol", "normalized time", "gap"}, reference));
        }
        if (summary) {
            std::ostringstream out;
            out << "model=" << to_string(config.model) << " min_gap=" << fmt(r.min_gap)
                << " final_gap=" << fmt(r.rows.back().gap1) << " total_time=" << fmt(r.total_time)
                << " final_fidelity=" << fmt(r.final_fidelity) << " norm_drift=" << fmt(r.norm_drift);
            *summary = out.str();
        }
    });
}

namespace {

ExperimentConfig with_param(ExperimentConfig c, const std::string &param, double value) {
    auto as_count = [&](const char *name) {
        if (!(value >= 0.0) || std::floor(value) != value) {
            throw ValidationError(std::string(name) + " must be a non-negative integer");
        }
        return static_cast<std::size_t>(value);
    };
    if (param == "L") {
        c.steps = as_count("L");
    } else if (param == "lx") {
        c.lx = as_count("lx");
    } else if (param == "ly") {
        c.ly = as_count("ly");
    } else if (param == "N") {
        c.database_size = value;
        c.a0.reset();
    } else if (param == "a0") {
        c.a0 = value;
        c.database_size.reset();
    } else if (param == "epsilon") {
        c.epsilon = value;
    } else {
        throw ValidationError("cannot sweep over '" + param + "' (expected L, lx, ly, N, a0 or epsilon)");
    }
    return c;
}

double exponent_or_nan(const std::vector<double> &x, const std::vector<double> &y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0) || !std::isfinite(y[i])) return kNaN;
    }
    return fit_power_law(x, y).exponent;
}

}  // namespace

SweepResult sweep(const ExperimentConfig &base, const std::string &param, const std::vector<double> &values) {
    if (values.empty()) {
        throw ValidationError("sweep needs at least one value");
    }
    std::vector<ExperimentConfig> configs;
    for (double v : values) {
        configs.push_back(with_param(base, param, v));
        configs.back().validate();
    }
    SweepResult result;
    result.param = param;
    result.points.resize(values.size());
    parallel_for(values.size(), [&](std::size_t i) {
        result.points[i] = {values[i], run_experiment(configs[i])};
    });
    if (values.size() >= 2) {
        std::vector<double> x, gap, time;
        for (const auto &p : result.points) {
            x.push_back(p.param);
            gap.push_back(p.result.min_gap);
            time.push_back(p.result.total_time);
        }
        result.gap_exponent = exponent_or_nan(x, gap);
        result.time_exponent = exponent_or_nan(x, time);
    } else {
        result.gap_exponent = kNaN;
        result.time_exponent = kNaN;
    }
    return result;
}

std::string sweep_csv(const SweepResult &result) {
    std::ostringstream out;
    out << "param,min_gap,total_time,final_fidelity,epsilon\n";
    for (const auto &p : result.points) {
        out << fmt(p.param) << ',' << fmt(p.result.min_gap) << ',' << fmt(p.result.total_time) << ','
            << fmt(p.result.final_fidelity) << ',' << fmt(p.result.epsilon) << '\n';
    }
    return out.str();
}

int sweep_command(const ExperimentConfig &base, const std::string &param, const std::vector<double> &values,
                  std::string *summary) {
    return guarded([&](Outputs &files) {
        if (values.size() < 3) {
            throw ValidationError("sweep needs at least 3 points");
        }
        SweepResult r = sweep(base, param, values);
        if (!base.csv_path.empty()) {
            files.write(base.csv_path, sweep_csv(r));
        }
        if (!base.svg_path.empty()) {
            Curve c{"min gap", {}, {}};
            for (const auto &p : r.points) {
                c.x.push_back(std::log10(p.param));
                c.y.push_back(std::log10(p.result.min_gap));
            }
            files.write(base.svg_path, line_chart({c}, {"Minimum gap", "log10 " + param, "log10 min gap"}, kNaN));
        }
        if (summary) {
            *summary = "param=" + param + " points=" + std::to_string(r.points.size()) +
                       " gap_exponent=" + fmt(r.gap_exponent) + " time_exponent=" + fmt(r.time_exponent);
        }
    });
}

}  // namespace adiarot
