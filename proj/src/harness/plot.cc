// Copyright 2026 The QAOA Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qaoa/harness/plot.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "qaoa/error.h"

namespace qaoa::harness {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 64.0;
constexpr double kRight = 150.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 70.0;

constexpr const char *kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", x);
    return buf;
}

std::string escape(const std::string &text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '&':
                out += "&amp;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

std::string open_svg(const std::string &title) {
    std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
         "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    s += "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
         "\" fill=\"white\"/>\n";
    if (!title.empty()) {
        s += "<text class=\"title\" x=\"" + num(kWidth / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" +
             escape(title) + "</text>\n";
    }
    return s;
}

std::string axes(const std::string &x_label, const std::string &y_label, double y_lo, double y_hi) {
    const double x0 = kLeft, y0 = kHeight - kBottom, x1 = kWidth - kRight, y1 = kTop;
    std::string s = "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
    s += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x1) + "\" y2=\"" + num(y0) + "\"/>\n";
    s += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x0) + "\" y2=\"" + num(y1) + "\"/>\n";
    s += "</g>\n";
    for (int k = 0; k <= 4; ++k) {
        const double v = y_lo + (y_hi - y_lo) * k / 4.0;
        const double y = y0 - (y0 - y1) * k / 4.0;
        char label[32];
        std::snprintf(label, sizeof(label), "%.3g", v);
        s += "<text class=\"tick\" x=\"" + num(x0 - 6) + "\" y=\"" + num(y + 4) + "\" text-anchor=\"end\">" + label +
             "</text>\n";
    }
    s += "<text class=\"xlabel\" x=\"" + num((x0 + x1) / 2) + "\" y=\"" + num(kHeight - 12) +
         "\" text-anchor=\"middle\">" + escape(x_label) + "</text>\n";
    s += "<text class=\"ylabel\" x=\"16\" y=\"" + num((y0 + y1) / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         num((y0 + y1) / 2) + ")\">" + escape(y_label) + "</text>\n";
    return s;
}

}  // namespace

TraceSeries parse_trace_series(std::string_view name) {
    if (name == "energy") {
        return TraceSeries::kEnergy;
    }
    if (name == "params") {
        return TraceSeries::kParams;
    }
    throw InputError("unknown trace series '" + std::string(name) + "' (expected energy or params)");
}

std::string plot_histogram(const Counts &counts, const std::vector<std::string> &solutions, const std::string &title) {
    if (counts.total() == 0) {
        throw InputError("cannot plot an empty histogram");
    }
    const auto &entries = counts.entries();
    double p_max = 0.0;
    for (const auto &[bits, n] : entries) {
        p_max = std::max(p_max, static_cast<double>(n) / static_cast<double>(counts.total()));
    }
    const double y_hi = std::min(1.0, std::ceil(p_max * 10.0) / 10.0);
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const double slot = plot_w / static_cast<double>(entries.size());
    const double bar_w = std::max(1.0, slot * 0.8);

    std::string s = open_svg(title);
    s += axes("bitstring", "probability", 0.0, y_hi);
    std::size_t i = 0;
    for (const auto &[bits, n] : entries) {
        const double prob = static_cast<double>(n) / static_cast<double>(counts.total());
        const double h = plot_h * prob / y_hi;
        const double x = kLeft + slot * static_cast<double>(i) + (slot - bar_w) / 2;
        const double y = kHeight - kBottom - h;
        const bool solution = std::find(solutions.begin(), solutions.end(), bits) != solutions.end();
        s += "<rect class=\"bar" + std::string(solution ? " solution" : "") + "\" data-bitstring=\"" + bits +
             "\" x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(bar_w) + "\" height=\"" + num(h) +
             "\" fill=\"" + (solution ? "#d62728" : "#1f77b4") + "\"><title>" + bits + ": " + num(prob) +
             "</title></rect>\n";
        if (entries.size() <= 64) {
            const double cx = x + bar_w / 2;
            const double cy = kHeight - kBottom + 8;
            s += "<text class=\"bitstring\" x=\"" + num(cx) + "\" y=\"" + num(cy) +
                 "\" text-anchor=\"end\" font-size=\"9\" transform=\"rotate(-60 " + num(cx) + " " + num(cy) + ")\">" +
                 bits + "</text>\n";
        }
        ++i;
    }
    s += "</svg>\n";
    return s;
}

std::string plot_trace(const OptimizationTrace &trace, TraceSeries series, const std::string &title) {
    if (trace.records.empty()) {
        throw InputError("cannot plot an empty trace");
    }
    const std::size_t n_params = trace.records.front().theta.size();
    std::vector<std::string> names;
    std::vector<std::vector<double>> ys;
    if (series == TraceSeries::kEnergy) {
        names.push_back("energy");
        ys.emplace_back();
        for (const auto &r : trace.records) {
            ys.back().push_back(r.energy);
        }
    } else {
        if (n_params == 0) {
            throw InputError("trace has no parameters to plot");
        }
        const std::size_t p = n_params / 2;
        for (std::size_t k = 0; k < n_params; ++k) {
            names.push_back((k < p ? "beta_" : "gamma_") + std::to_string(k % p + 1));
            ys.emplace_back();
            for (const auto &r : trace.records) {
                if (r.theta.size() != n_params) {
                    throw InputError("trace rows have different parameter counts");
                }
                ys.back().push_back(r.theta[k]);
            }
        }
    }
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto &y : ys) {
        for (double v : y) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (hi - lo < 1e-12) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const std::size_t n = trace.records.size();
    auto px = [&](std::size_t i) {
        return kLeft + (n > 1 ? plot_w * static_cast<double>(i) / static_cast<double>(n - 1) : plot_w / 2);
    };
    auto py = [&](double v) { return kHeight - kBottom - plot_h * (v - lo) / (hi - lo); };

    std::string s = open_svg(title.empty() ? (series == TraceSeries::kEnergy ? "Energy progression"
                                                                             : "Parameter progression")
                                           : title);
    s += axes("evaluation", series == TraceSeries::kEnergy ? "energy" : "angle (rad)", lo, hi);
    for (std::size_t k = 0; k < ys.size(); ++k) {
        const char *color = kPalette[k % std::size(kPalette)];
        std::string points;
        for (std::size_t i = 0; i < ys[k].size(); ++i) {
            if (i > 0) {
                points += ' ';
            }
            points += num(px(i)) + "," + num(py(ys[k][i]));
        }
        s += "<polyline class=\"series\" data-series=\"" + names[k] + "\" fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
        const double ly = kTop + 16.0 * static_cast<double>(k);
        s += "<text class=\"legend\" x=\"" + num(kWidth - kRight + 12) + "\" y=\"" + num(ly + 4) + "\" fill=\"" + color +
             "\">" + names[k] + "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace qaoa::harness
