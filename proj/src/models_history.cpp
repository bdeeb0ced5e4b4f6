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
#include <string>

#include "adiarot/errors.hpp"
#include "adiarot/models.hpp"

namespace adiarot {

namespace {

MultiSiteOperator level_op(double coefficient, SiteOperator op) {
    return MultiSiteOperator(coefficient, {{0, op}});
}

std::vector<MultiSiteOperator> hopping(std::size_t t) {
    return {level_op(0.5, SiteOperator::projector(t)), level_op(0.5, SiteOperator::projector(t + 1)),
            level_op(-0.5, SiteOperator::transition(t, t + 1))};
}

void check_steps(std::size_t steps) {
    if (steps < 1) {
        throw ValidationError("history needs L >= 1");
    }
}

}  // namespace

HistoryPath parse_history_path(std::string_view text) {
    if (text == "linear") {
        return HistoryPath::Linear;
    }
    if (text == "stepwise") {
        return HistoryPath::Stepwise;
    }
    if (text == "single_rotation" || text == "single-rotation") {
        return HistoryPath::SingleRotation;
    }
    throw ValidationError("unknown history path '" + std::string(text) +
                          "' (expected linear, stepwise or single_rotation)");
}

std::string to_string(HistoryPath path) {
    switch (path) {
        case HistoryPath::Linear:
            return "linear";
        case HistoryPath::Stepwise:
            return "stepwise";
        default:
            return "single_rotation";
    }
}

std::vector<MultiSiteOperator> history_initial_terms(std::size_t steps) {
    std::vector<MultiSiteOperator> out;
    for (std::size_t t = 1; t <= steps; ++t) {
        out.push_back(level_op(1.0, SiteOperator::projector(t)));
    }
    return out;
}

std::vector<MultiSiteOperator> history_final_terms(std::size_t steps) {
    std::vector<MultiSiteOperator> out;
    for (std::size_t t = 0; t < steps; ++t) {
        auto h = hopping(t);
        out.insert(out.end(), h.begin(), h.end());
    }
    return out;
}

ModelInstance build_history(std::size_t steps, HistoryPath path) {
    check_steps(steps);
    const std::size_t dim = steps + 1;
    HilbertLayout layout = HilbertLayout::levels(dim);
    std::vector<MultiSiteOperator> constants;
    std::vector<Stage> stages;

    switch (path) {
        case HistoryPath::Linear: {
            Stage stage;
            stage.theta_start = 0.0;
            stage.theta_end = kPi / 2;
            stage.label = "linear";
            for (const auto &term : history_initial_terms(steps)) {
                stage.active.push_back({ThetaCoefficient::cos2(term.coefficient), term.scaled(1.0 / term.coefficient)});
            }
            for (const auto &term : history_final_terms(steps)) {
                stage.active.push_back({ThetaCoefficient::sin2(term.coefficient), term.scaled(1.0 / term.coefficient)});
            }
            stages.push_back(std::move(stage));
            break;
        }
        case HistoryPath::Stepwise:
            for (std::size_t t = 0; t < steps; ++t) {
                Stage stage;
                stage.label = "step" + std::to_string(t);
                // gamma_m = |t+1>, gamma_j = |t>.
                stage.active = driving_terms(1.0, 0, t + 1, t);
                stages.push_back(std::move(stage));
            }
            break;
        case HistoryPath::SingleRotation: {
            Stage stage;
            stage.theta_start = kPi / 2;
            stage.theta_end = kPi / 4;
            stage.label = "rotation";
            stage.active = driving_terms(1.0, 0, 0, 1);
            for (std::size_t t = 1; t < steps; ++t) {
                auto h = hopping(t);
                constants.insert(constants.end(), h.begin(), h.end());
            }
            stages.push_back(std::move(stage));
            break;
        }
    }
    return {"history", StagedHamiltonian(std::move(layout), std::move(constants), std::move(stages)),
            basis_state(dim, 0), history_target(steps)};
}

StateVector history_target(std::size_t steps) {
    check_steps(steps);
    const auto dim = static_cast<Eigen::Index>(steps + 1);
    return StateVector::Constant(dim, cplx(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
}

RotatedGroundSpec history_stage_spec(std::size_t steps, std::size_t stage, double theta) {
    check_steps(steps);
    if (stage >= steps) {
        throw ValidationError("history stage out of range");
    }
    std::vector<std::size_t> gammas;
    for (std::size_t t = 0; t <= stage; ++t) {
        gammas.push_back(t);
    }
    std::vector<double> amps(gammas.size(), 1.0 / std::sqrt(static_cast<double>(gammas.size())));
    return RotatedGroundSpec::on_basis(steps + 1, gammas, stage + 1, std::move(amps), stage, theta);
}

}  // namespace adiarot
