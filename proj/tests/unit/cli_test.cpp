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


#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "adiarot/errors.hpp"
#include "adiarot/experiment.hpp"
#include "adiarot/verify.hpp"

using namespace adiarot;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string &name) {
    fs::path dir = fs::temp_directory_path() / "adiarot_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cli(const std::string &args) {
    std::string cmd = std::string(ADIAROT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string l; std::getline(ss, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST(config, merge_nested_document) {
    auto doc = nlohmann::json::parse(R"({
        "model": "toric", "size": {"lx": 2, "ly": 3}, "sector": "hv",
        "schedule": {"kind": "local", "epsilon": 0.01}, "grid": 51, "seed": 9,
        "output": {"csv": "a.csv", "svg": "a.svg"}})");
    ExperimentConfig c = merge_config({}, doc);
    ASSERT_EQ(c.model, ModelKind::Toric);
    ASSERT_EQ(c.lx, 2u);
    ASSERT_EQ(c.ly, 3u);
    ASSERT_EQ(c.sector, "hv");
    ASSERT_EQ(c.epsilon, 0.01);
    ASSERT_EQ(c.grid, 51u);
    ASSERT_EQ(c.seed, 9u);
    ASSERT_EQ(c.csv_path, "a.csv");
    ASSERT_EQ(c.svg_path, "a.svg");
    // Absent keys keep the base.
    ExperimentConfig base;
    base.steps = 9;
    ExperimentConfig d = merge_config(base, nlohmann::json::parse(R"({"model": "history", "path": "linear"})"));
    ASSERT_EQ(d.steps, 9u);
    ASSERT_EQ(d.path, "linear");
    ExperimentConfig s = merge_config({}, nlohmann::json::parse(R"({"model": "search", "size": {"N": 64}})"));
    ASSERT_NEAR(s.search_overlap(), 0.125, 1e-15);
    ASSERT_THROW(merge_config({}, nlohmann::json::parse(R"([1, 2])")), ValidationError);
    ASSERT_THROW(merge_config({}, nlohmann::json::parse(R"({"model": "ising"})")), ValidationError);
    ASSERT_THROW(merge_config({}, nlohmann::json::parse(R"({"grid": "many"})")), ValidationError);
}

TEST(config, validation) {
    ExperimentConfig c;
    ASSERT_NO_THROW(c.validate());
    c.epsilon = 0;
    ASSERT_THROW(c.validate(), ValidationError);
    c = {};
    c.schedule = ScheduleKind::Linear;
    ASSERT_THROW(c.validate(), ValidationError);
    c.time = 10.0;
    ASSERT_NO_THROW(c.validate());
    c = {};
    c.time = 10.0;
    ASSERT_THROW(c.validate(), ValidationError);
    c = {};
    c.model = ModelKind::Toric;
    c.lx = c.ly = 3;
    ASSERT_THROW(c.validate(), ValidationError);
    c = {};
    c.model = ModelKind::Search;
    c.a0 = 0.5;
    c.database_size = 16;
    ASSERT_THROW(c.validate(), ValidationError);
    c = {};
    c.grid = 2;
    ASSERT_THROW(c.validate(), ValidationError);
    ASSERT_THROW(load_config(scratch("missing.json").string()), ValidationError);
}

TEST(run, history_final_row_carries_the_minimum_gap) {
    ExperimentConfig c;
    c.csv_path = scratch("hist.csv").string();
    ASSERT_EQ(run_command(c), 0);
    auto rows = lines(slurp(c.csv_path));
    ASSERT_EQ(rows.front(), "t,theta,stage,gap1,gap2,coupling1,ground_overlap,norm");
    double min_gap = 1e9, last_gap = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::stringstream ss(rows[i]);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        ASSERT_EQ(cells.size(), 8u);
        last_gap = std::stod(cells[3]);
        min_gap = std::min(min_gap, last_gap);
    }
    ASSERT_NEAR(last_gap, 1 - std::cos(M_PI / 7), 1e-9);
    ASSERT_NEAR(min_gap, last_gap, 1e-12);
    ASSERT_EQ(slurp(c.csv_path).back(), '\n');
}

TEST(run, csv_is_deterministic_and_independent_of_the_plot) {
    ExperimentConfig c;
    c.steps = 4;
    c.grid = 61;
    c.csv_path = scratch("a.csv").string();
    ASSERT_EQ(run_command(c), 0);
    std::string first = slurp(c.csv_path);
    c.svg_path = scratch("a.svg").string();
    ASSERT_EQ(run_command(c), 0);
    ASSERT_EQ(slurp(c.csv_path), first);
    std::string svg = slurp(c.svg_path);
    ASSERT_NE(svg.find("<svg"), std::string::npos);
    ASSERT_NE(svg.find("stepwise"), std::string::npos);
    ASSERT_NE(svg.find("linear"), std::string::npos);
}

TEST(run, search_summary) {
    ExperimentConfig c;
    c.model = ModelKind::Search;
    c.a0 = 0.125;
    std::string summary;
    ASSERT_EQ(run_command(c, &summary), 0);
    RunResult r = run_experiment(c);
    ASSERT_GE(r.final_fidelity, 0.99);
    ASSERT_NE(summary.find("final_fidelity="), std::string::npos);
    ASSERT_LE(r.norm_drift, 1e-9 * std::max(1.0, r.total_time));
}

TEST(run, linear_schedule_time_is_split_over_stages) {
    ExperimentConfig c;
    c.steps = 3;
    c.schedule = ScheduleKind::Linear;
    c.time = 30.0;
    RunResult r = run_experiment(c);
    ASSERT_NEAR(r.total_time, 30.0, 1e-9);
    ASSERT_EQ(r.epsilon, 0.0);
}

TEST(sweep, points_and_csv) {
    ExperimentConfig c;
    c.grid = 101;
    SweepResult one = sweep(c, "L", {5});
    RunResult direct = [&] {
        ExperimentConfig d = c;
        d.steps = 5;
        return run_experiment(d);
    }();
    ASSERT_EQ(one.points.size(), 1u);
    ASSERT_EQ(one.points[0].result.min_gap, direct.min_gap);
    ASSERT_EQ(one.points[0].result.final_fidelity, direct.final_fidelity);

    SweepResult r = sweep(c, "L", {4, 6, 8});
    auto rows = lines(sweep_csv(r));
    ASSERT_EQ(rows.size(), 4u);
    ASSERT_EQ(rows[0], "param,min_gap,total_time,final_fidelity,epsilon");
    ASSERT_EQ(rows[1].substr(0, 2), "4,");
    ASSERT_LT(r.gap_exponent, -1.0);
    ASSERT_THROW(sweep(c, "colour", {1, 2, 3}), ValidationError);
    ASSERT_EQ(sweep_command(c, "L", {4, 6}), 2);
}

TEST(cli, exit_codes_and_partial_outputs) {
    fs::path csv = scratch("cli.csv");
    fs::remove(csv);
    ASSERT_EQ(cli("history --L 3 --grid 41 --out " + csv.string()), 0);
    ASSERT_TRUE(fs::exists(csv));
    ASSERT_EQ(cli("history --L 0"), 2);
    ASSERT_EQ(cli("history --epsilon -1"), 2);
    ASSERT_EQ(cli("toric --lx 3 --ly 3"), 2);
    ASSERT_EQ(cli("history --bogus 1"), 2);
    ASSERT_EQ(cli("search --a0 0.5 --N 16"), 2);
    ASSERT_EQ(cli("history --config " + scratch("nope.json").string()), 2);
    // CSV written, plot path unwritable: the CSV is removed again.
    fs::path keep = scratch("partial.csv");
    fs::remove(keep);
    ASSERT_EQ(cli("history --L 3 --grid 41 --out " + keep.string() + " --plot /nonexistent/dir/p.svg"), 2);
    ASSERT_FALSE(fs::exists(keep));
    // A pre-existing file is left alone when the run fails before writing.
    std::ofstream(keep) << "mine";
    ASSERT_EQ(cli("history --L 0 --out " + keep.string()), 2);
    ASSERT_EQ(slurp(keep), "mine");
    ASSERT_EQ(cli("sweep --model history --param L --values 4,6"), 2);
}

TEST(cli, config_file_with_flag_override) {
    fs::path cfg = scratch("cfg.json");
    fs::path csv = scratch("cfg.csv");
    std::ofstream(cfg) << R"({"model": "history", "size": {"L": 3}, "grid": 21, "output": {"csv": ")" << csv.string()
                       << R"("}})";
    fs::remove(csv);
    ASSERT_EQ(cli("history --config " + cfg.string() + " --grid 31"), 0);
    ASSERT_EQ(lines(slurp(csv)).size() > 1, true);
    ExperimentConfig c = load_config(cfg.string());
    ASSERT_EQ(c.grid, 21u);
    ASSERT_EQ(c.steps, 3u);
}

TEST(verify, suites_pass) {
    std::string report;
    ASSERT_EQ(verify_command(3, &report), 0) << report;
    auto suites = run_property_suites(3);
    ASSERT_EQ(suites.size(), 6u);
    for (const auto &s : suites) {
        ASSERT_TRUE(s.passed()) << s.name << ": " << s.detail;
        ASSERT_GT(s.checks, 0u);
    }
}
