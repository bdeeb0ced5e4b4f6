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


#ifndef ADIAROT_EXPERIMENT_HPP
#define ADIAROT_EXPERIMENT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adiarot/svg.hpp"
#include "json.hpp"

namespace adiarot {

enum class ModelKind { Toric, Cluster, History, Search };
enum class ScheduleKind { Linear, Local };

ModelKind parse_model_kind(const std::string &text);
std::string to_string(ModelKind kind);
ScheduleKind parse_schedule_kind(const std::string &text);
std::string to_string(ScheduleKind kind);

struct ExperimentConfig {
    ModelKind model = ModelKind::History;
    std::size_t lx = 2;
    std::size_t ly = 2;
    std::size_t steps = 6;  ///< history L
    std::string path = "stepwise";
    /// Search overlap; when unset it comes from `database_size`, else 0.5.
    std::optional<double> a0;
    std::optional<double> database_size;
    std::string sector = "none";
    ScheduleKind schedule = ScheduleKind::Local;
    double epsilon = 0.05;
    /// Total protocol time of a linear schedule, split evenly over stages.
    std::optional<double> time;
    std::size_t grid = 401;
    std::uint64_t seed = 1;
    std::string csv_path;
    std::string svg_path;

    /// Throws ValidationError on missing or out-of-range parameters.
    void validate() const;
    double search_overlap() const;
};

/// Reads the nested document layout:
///   {"model": "...", "size": {"lx", "ly", "L", "a0", "N"}, "path", "sector",
///    "schedule": {"kind", "epsilon", "time"}, "grid", "seed",
///    "output": {"csv", "svg"}}
/// Keys absent from `doc` keep the values already in `base`.
ExperimentConfig merge_config(ExperimentConfig base, const nlohmann::json &doc);
ExperimentConfig load_config(const std::string &path, ExperimentConfig base = {});

struct TraceRow {
    double t = 0.0;
    double theta = 0.0;
    std::size_t stage = 0;
    /// Gaps above the (possibly degenerate) ground space: gap1 to the first
    /// level outside it, gap2 to the level after that.
    double gap1 = 0.0;
    double gap2 = 0.0;
    double coupling1 = 0.0;
    double ground_overlap = 0.0;
    double norm = 1.0;
};

struct RunResult {
    std::vector<TraceRow> rows;
    double min_gap = 0.0;
    double total_time = 0.0;
    double final_fidelity = 0.0;
    double epsilon = 0.0;
    double norm_drift = 0.0;
    /// Gap against normalized time, the run's own curve first.
    std::vector<Curve> curves;
};

/// Builds the model, traces each stage, builds schedules, propagates.
RunResult run_experiment(const ExperimentConfig &config);

std::string trace_csv(const std::vector<TraceRow> &rows);

/// Runs and writes the configured artifacts. Returns the process exit code:
/// 0 success, 2 invalid configuration, 3 numerical failure. Output files are
/// removed when the run fails.
int run_command(const ExperimentConfig &config, std::string *summary = nullptr);

struct SweepPoint {
    double param = 0.0;
    RunResult result;
};

struct SweepResult {
    std::string param;
    std::vector<SweepPoint> points;
    double gap_exponent = 0.0;
    double time_exponent = 0.0;
};

/// Points run on the worker pool; results keep input order.
SweepResult sweep(const ExperimentConfig &base, const std::string &param, const std::vector<double> &values);

std::string sweep_csv(const SweepResult &result);

int sweep_command(const ExperimentConfig &base, const std::string &param, const std::vector<double> &values,
                  std::string *summary = nullptr);

}  // namespace adiarot

#endif
