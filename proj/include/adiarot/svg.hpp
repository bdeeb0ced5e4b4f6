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


#ifndef ADIAROT_SVG_HPP
#define ADIAROT_SVG_HPP

#include <string>
#include <vector>

namespace adiarot {

struct Curve {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct ChartLabels {
    std::string title;
    std::string x_axis;
    std::string y_axis;
};

/// Self-contained SVG line chart with axes, ticks and a legend. At most two
/// series are drawn; a dashed horizontal reference line is added when
/// `reference` is finite.
std::string line_chart(const std::vector<Curve> &curves, const ChartLabels &labels, double reference);

}  // namespace adiarot

#endif
