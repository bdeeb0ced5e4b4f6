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
#include <fstream>

#include "adiarot/errors.hpp"
#include "adiarot/experiment.hpp"
#include "adiarot/models.hpp"

namespace adiarot {

ModelKind parse_model_kind(const std::string &text) {
    if (text == "toric") return ModelKind::Toric;
    if (text == "cluster") return ModelKind::Cluster;
    if (text == "history") return ModelKind::History;
    if (text == "search") return ModelKind::Search;
    throw ValidationError("unknown model '" + text + "'");
}

std::string to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::Toric: return "toric";
        case ModelKind::Cluster: return "cluster";
        case ModelKind::History: return "history";
        default: return "search";
    }
}

ScheduleKind parse_schedule_kind(const std::string &text) {
    if (text == "linear") return ScheduleKind::Linear;
    if (text == "local") return ScheduleKind::Local;
    throw ValidationError("unknown schedule '" + text + "' (expected linear or local)");
}

std::string to_string(ScheduleKind kind) {
    return kind == ScheduleKind::Linear ? "linear" : "local";
}

double ExperimentConfig::search_overlap() const {
    if (a0) return *a0;
    if (database_size) return SearchModel::from_database_size(*database_size).a0;
    return 0.5;
}

void ExperimentConfig::validate() const {
    switch (model) {
        case ModelKind::Toric:
            if (lx < 2 || ly < 2) throw ValidationError("toric needs lx, ly >= 2");
            if (2 * lx * ly > kMaxModelSpins) throw ValidationError("toric lattice exceeds the spin limit");
            parse_toric_sector(sector);
            break;
        case ModelKind::Cluster:
            if (lx * ly < 2) throw ValidationError("cluster needs at least two sites");
            if (lx * ly > kMaxModelSpins) throw ValidationError("cluster grid exceeds the spin limit");
            break;
        case ModelKind::History:
            if (steps < 1) throw ValidationError("history needs L >= 1");
            parse_history_path(path);
            break;
        case ModelKind::Search: {
            if (database_size && !(*database_size > 1.0)) throw ValidationError("search needs N > 1");
            if (a0 && database_size && std::abs(*a0 - 1.0 / std::sqrt(*database_size)) > 1e-12) {
                throw ValidationError("a0 and N disagree");
            }
            double a = search_overlap();
            if (!(a > 0.0 && a < 1.0)) throw ValidationError("search overlap a0 must lie in (0, 1)");
            break;
        }
    }
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw ValidationError("epsilon must be positive");
    if (grid < 3) throw ValidationError("grid needs at least 3 points");
    if (schedule == ScheduleKind::Linear) {
        if (!time || !(*time > 0.0)) throw ValidationError("a linear schedule needs --time > 0");
    } else if (time) {
        throw ValidationError("--time only applies to linear schedules");
    }
}

namespace {

template <typename T>
void take(const nlohmann::json &doc, const char *key, T &into) {
    if (doc.contains(key) && !doc.at(key).is_null()) {
        into = doc.at(key).get<T>();
    }
}

template <typename T>
void take(const nlohmann::json &doc, const char *key, std::optional<T> &into) {
    if (doc.contains(key) && !doc.at(key).is_null()) {
        into = doc.at(key).get<T>();
    }
}

}  // namespace

ExperimentConfig merge_config(ExperimentConfig base, const nlohmann::json &doc) {
    if (!doc.is_object()) {
        throw ValidationError("config must be an object");
    }
    try {
        if (doc.contains("model")) base.model = parse_model_kind(doc.at("model").get<std::string>());
        if (doc.contains("size")) {
            const auto &size = doc.at("size");
            take(size, "lx", base.lx);
            take(size, "ly", base.ly);
            take(size, "L", base.steps);
            take(size, "a0", base.a0);
            take(size, "N", base.database_size);
        }
        take(doc, "path", base.path);
        take(doc, "sector", base.sector);
        if (doc.contains("schedule")) {
            const auto &sch = doc.at("schedule");
            if (sch.contains("kind")) base.schedule = parse_schedule_kind(sch.at("kind").get<std::string>());
            take(sch, "epsilon", base.epsilon);
            take(sch, "time", base.time);
        }
        take(doc, "grid", base.grid);
        take(doc, "seed", base.seed);
        if (doc.contains("output")) {
            take(doc.at("output"), "csv", base.csv_path);
            take(doc.at("output"), "svg", base.svg_path);
        }
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("config: ") + e.what());
    }
    return base;
}

ExperimentConfig load_config(const std::string &path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot read config file " + path);
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError("config " + path + ": " + e.what());
    }
    return merge_config(std::move(base), doc);
}

}  // namespace adiarot
