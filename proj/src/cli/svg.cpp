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


#include "adiarot/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "adiarot/errors.hpp"

namespace adiarot {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 420;
constexpr double kLeft = 70;
constexpr double kRight = 20;
constexpr double kTop = 40;
constexpr double kBottom = 55;
constexpr const char *kColors[] = {"#1f77b4", "#d62728"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string escape(const std::string &text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string line_chart(const std::vector<Curve> &curves, const ChartLabels &labels, double reference) {
    if (curves.empty()) {
        throw ValidationError("a chart needs at least one curve");
    }
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0;
    double y0 = 0.0, y1 = -std::numeric_limits<double>::infinity();
    const std::size_t shown = std::min<std::size_t>(curves.size(), 2);
    for (std::size_t c = 0; c < shown; ++c) {
        if (curves[c].x.size() != curves[c].y.size()) {
            throw ValidationError("curve '" + curves[c].label + "' has mismatched coordinates");
        }
        for (std::size_t i = 0; i < curves[c].x.size(); ++i) {
            if (!std::isfinite(curves[c].x[i]) || !std::isfinite(curves[c].y[i])) continue;
            x0 = std::min(x0, curves[c].x[i]);
            x1 = std::max(x1, curves[c].x[i]);
            y0 = std::min(y0, curves[c].y[i]);
            y1 = std::max(y1, curves[c].y[i]);
        }
    }
    if (!std::isfinite(x0)) {
        x0 = 0.0;
        x1 = 1.0;
        y1 = 1.0;
    }
    if (x1 <= x0) x1 = x0 + 1.0;
    if (y1 <= y0) y1 = y0 + 1.0;
    y1 += 0.05 * (y1 - y0);

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
    auto sy = [&](double y) { return kTop + ph - (y - y0) / (y1 - y0) * ph; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << num(kWidth / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
        << escape(labels.title) << "</text>\n";

    // Axes and ticks.
    out << "<g stroke=\"black\" stroke-width=\"1\">\n";
    out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop + ph) << "\" x2=\"" << num(kLeft + pw) << "\" y2=\""
        << num(kTop + ph) << "\"/>\n";
    out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft) << "\" y2=\""
        << num(kTop + ph) << "\"/>\n";
    out << "</g>\n";
    for (int i = 0; i <= 5; ++i) {
        double fx = x0 + (x1 - x0) * i / 5.0;
        double fy = y0 + (y1 - y0) * i / 5.0;
        out << "<line x1=\"" << num(sx(fx)) << "\" y1=\"" << num(kTop + ph) << "\" x2=\"" << num(sx(fx)) << "\" y2=\""
            << num(kTop + ph + 5) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << num(sx(fx)) << "\" y=\"" << num(kTop + ph + 18) << "\" text-anchor=\"middle\">"
            << tick_label(fx) << "</text>\n";
        out << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(sy(fy)) << "\" x2=\"" << num(kLeft) << "\" y2=\""
            << num(sy(fy)) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(sy(fy) + 4) << "\" text-anchor=\"end\">"
            << tick_label(fy) << "</text>\n";
    }
    out << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 12) << "\" text-anchor=\"middle\">"
        << escape(labels.x_axis) << "</text>\n";
    out << "<text x=\"16\" y=\"" << num(kTop + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << num(kTop + ph / 2) << ")\">" << escape(labels.y_axis) << "</text>\n";

    if (std::isfinite(reference) && reference >= y0 && reference <= y1) {
        out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(sy(reference)) << "\" x2=\"" << num(kLeft + pw)
            << "\" y2=\"" << num(sy(reference)) << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
    }

    for (std::size_t c = 0; c < shown; ++c) {
        out << "<polyline fill=\"none\" stroke=\"" << kColors[c] << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (std::size_t i = 0; i < curves[c].x.size(); ++i) {
            if (!std::isfinite(curves[c].x[i]) || !std::isfinite(curves[c].y[i])) continue;
            out << (first ? "" : " ") << num(sx(curves[c].x[i])) << ',' << num(sy(curves[c].y[i]));
            first = false;
        }
        out << "\"/>\n";
        double ly = kTop + 14 + 18.0 * static_cast<double>(c);
        double lx = kLeft + pw - 150;
        out << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 24) << "\" y2=\"" << num(ly)
            << "\" stroke=\"" << kColors[c] << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << num(lx + 30) << "\" y=\"" << num(ly + 4) << "\">" << escape(curves[c].label)
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace adiarot
