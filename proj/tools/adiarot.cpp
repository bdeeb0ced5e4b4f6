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


// Command-line runner for the adiabatic rotation protocols.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "adiarot/errors.hpp"
#include "adiarot/experiment.hpp"
#include "adiarot/verify.hpp"

namespace {

using adiarot::ExperimentConfig;

struct Flags {
    std::string config, out, plot, schedule, sector, path, model;
    double epsilon = 0, time = 0, a0 = 0, n = 0;
    std::size_t grid = 0, lx = 0, ly = 0, steps = 0;
    std::uint64_t seed = 0;
    std::vector<CLI::Option *> opts;
    CLI::Option *o_config{}, *o_out{}, *o_plot{}, *o_schedule{}, *o_sector{}, *o_path{}, *o_model{}, *o_epsilon{},
        *o_time{}, *o_a0{}, *o_n{}, *o_grid{}, *o_lx{}, *o_ly{}, *o_steps{}, *o_seed{};
};

enum Sizes { kLattice = 1, kHistory = 2, kSearch = 4, kSector = 8, kAll = 15 };

void add_flags(CLI::App *app, Flags &f, int sizes) {
    f.o_config = app->add_option("--config", f.config, "JSON config file; flags override its values");
    f.o_out = app->add_option("--out", f.out, "CSV output path");
    f.o_plot = app->add_option("--plot", f.plot, "SVG output path");
    f.o_epsilon = app->add_option("--epsilon", f.epsilon, "local schedule rate prefactor (default 0.05)");
    f.o_grid = app->add_option("--grid", f.grid, "theta grid points per stage (default 401)");
    f.o_seed = app->add_option("--seed", f.seed, "seed for randomized suites");
    f.o_schedule = app->add_option("--schedule", f.schedule, "linear or local (default local)");
    f.o_time = app->add_option("--time", f.time, "total time of a linear schedule");
    if (sizes & kLattice) {
        f.o_lx = app->add_option("--lx", f.lx, "lattice width (default 2)");
        f.o_ly = app->add_option("--ly", f.ly, "lattice height (default 2)");
    }
    if (sizes & kSector) {
        f.o_sector = app->add_option("--sector", f.sector, "toric sector: none, h, v or hv");
    }
    if (sizes & kHistory) {
        f.o_steps = app->add_option("--L", f.steps, "history length (default 6)");
        f.o_path = app->add_option("--path", f.path, "linear, stepwise or single_rotation");
    }
    if (sizes & kSearch) {
        f.o_a0 = app->add_option("--a0", f.a0, "search overlap <psi0|m>");
        f.o_n = app->add_option("--N", f.n, "database size, a0 = 1/sqrt(N)");
    }
}

bool given(const CLI::Option *o) {
    return o != nullptr && o->count() > 0;
}

ExperimentConfig resolve(const Flags &f, ExperimentConfig base) {
    if (given(f.o_config)) base = adiarot::load_config(f.config, base);
    if (given(f.o_model)) base.model = adiarot::parse_model_kind(f.model);
    if (given(f.o_out)) base.csv_path = f.out;
    if (given(f.o_plot)) base.svg_path = f.plot;
    if (given(f.o_epsilon)) base.epsilon = f.epsilon;
    if (given(f.o_grid)) base.grid = f.grid;
    if (given(f.o_seed)) base.seed = f.seed;
    if (given(f.o_schedule)) base.schedule = adiarot::parse_schedule_kind(f.schedule);
    if (given(f.o_time)) base.time = f.time;
    if (given(f.o_lx)) base.lx = f.lx;
    if (given(f.o_ly)) base.ly = f.ly;
    if (given(f.o_sector)) base.sector = f.sector;
    if (given(f.o_steps)) base.steps = f.steps;
    if (given(f.o_path)) base.path = f.path;
    if (given(f.o_a0)) {
        base.a0 = f.a0;
        if (!given(f.o_n)) base.database_size.reset();
    }
    if (given(f.o_n)) {
        base.database_size = f.n;
        if (!given(f.o_a0)) base.a0.reset();
    }
    return base;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Adiabatic rotation state preparation and search"};
    app.require_subcommand(1);

    struct Sub {
        const char *name;
        const char *help;
        adiarot::ModelKind model;
        int sizes;
    };
    const Sub runs[] = {
        {"toric", "prepare the toric code ground state", adiarot::ModelKind::Toric, kLattice | kSector},
        {"cluster", "prepare the cluster state", adiarot::ModelKind::Cluster, kLattice},
        {"history", "prepare the history state", adiarot::ModelKind::History, kHistory},
        {"search", "adiabatic search on the three-level model", adiarot::ModelKind::Search, kSearch},
    };
    std::vector<Flags> flags(std::size(runs) + 1);
    std::vector<CLI::App *> subs;
    for (std::size_t i = 0; i < std::size(runs); ++i) {
        CLI::App *sub = app.add_subcommand(runs[i].name, runs[i].help);
        add_flags(sub, flags[i], runs[i].sizes);
        subs.push_back(sub);
    }

    Flags &sf = flags.back();
    std::string param;
    std::vector<double> values;
    CLI::App *sweep = app.add_subcommand("sweep", "run a model over a list of parameter values");
    add_flags(sweep, sf, kAll);
    sf.o_model = sweep->add_option("--model", sf.model, "toric, cluster, history or search");
    sweep->add_option("--param", param, "L, lx, ly, N, a0 or epsilon")->required();
    sweep->add_option("--values", values, "comma separated values")->required()->delimiter(',');

    std::uint64_t verify_seed = 1;
    CLI::App *verify = app.add_subcommand("verify", "run the property suites");
    verify->add_option("--seed", verify_seed, "seed for the random instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    std::string summary;
    try {
        for (std::size_t i = 0; i < subs.size(); ++i) {
            if (subs[i]->parsed()) {
                ExperimentConfig base;
                base.model = runs[i].model;
                ExperimentConfig config = resolve(flags[i], base);
                config.model = runs[i].model;
                int code = adiarot::run_command(config, &summary);
                if (code == 0) std::cout << summary << '\n';
                return code;
            }
        }
        if (sweep->parsed()) {
            ExperimentConfig config = resolve(sf, {});
            int code = adiarot::sweep_command(config, param, values, &summary);
            if (code == 0) std::cout << summary << '\n';
            return code;
        }
        if (verify->parsed()) {
            int code = adiarot::verify_command(verify_seed, &summary);
            std::cout << summary;
            return code;
        }
    } catch (const adiarot::ValidationError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
