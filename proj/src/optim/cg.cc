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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "evaluator.h"

namespace qaoa {

using optim_detail::BudgetExhausted;
using optim_detail::Evaluator;

namespace {

constexpr double kArmijo = 1e-4;
constexpr int kMaxBacktracks = 30;
constexpr int kRefineSteps = 4;
constexpr double kRefineTol = 1e-3;

double dot(const std::vector<double> &a, const std::vector<double> &b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

std::vector<double> along(const std::vector<double> &x, const std::vector<double> &dir, double t) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = x[i] + t * dir[i];
    }
    return out;
}

std::vector<double> central_gradient(Evaluator &eval, const std::vector<double> &x, const CgOptions &opts) {
    std::vector<double> g(x.size());
    std::vector<double> probe = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double h = opts.fd_step ? *opts.fd_step : 1e-6 * std::max(1.0, std::abs(x[i]));
        probe[i] = x[i] + h;
        const double f_plus = eval(probe);
        probe[i] = x[i] - h;
        const double f_minus = eval(probe);
        probe[i] = x[i];
        g[i] = (f_plus - f_minus) / (2.0 * h);
    }
    return g;
}

struct StepResult {
    bool ok = false;
    double alpha = 0.0;
    double f = 0.0;
};

struct Sample {
    double t;
    double f;
};

/// Vertex of the parabola through three samples ordered by t; NaN unless
/// the parabola is convex.
double parabola_vertex(const Sample &a, const Sample &b, const Sample &c) {
    const double left = (b.f - a.f) / (b.t - a.t);
    const double right = (c.f - b.f) / (c.t - b.t);
    const double curvature = (right - left) / (c.t - a.t);
    if (!(curvature > 0.0)) {
        return std::nan("");
    }
    return 0.5 * (a.t + b.t) - left / (2.0 * curvature);
}

/// Sufficient-decrease search along dir from (x, f0) with directional
/// slope < 0. Tries the trial step and the minimizer of the quadratic
/// through (0, f0, slope) and the trial, then backtracks by interpolation.
StepResult armijo_search(Evaluator &eval, const std::vector<double> &x, double f0, const std::vector<double> &dir,
                         double slope, double alpha0, std::vector<Sample> &samples) {
    auto armijo = [&](double a, double fa) { return fa <= f0 + kArmijo * a * slope; };
    auto probe = [&](double a) {
        const double fa = eval(along(x, dir, a));
        samples.push_back({a, fa});
        return fa;
    };
    double a = alpha0;
    double fa = probe(a);
    for (int k = 0; k < kMaxBacktracks; ++k) {
        const double curvature = 2.0 * (fa - f0 - slope * a);
        double a_star = curvature > 0.0 ? -slope * a * a / curvature : -1.0;
        StepResult best;
        if (armijo(a, fa)) {
            best = {true, a, fa};
        }
        // Take the interpolated minimizer when it is a genuinely different
        // step; on a quadratic it is the exact line minimum.
        if (a_star > 0.0 && std::abs(a_star - a) > 1e-10 * a && a_star < 10.0 * a) {
            const double fs = probe(a_star);
            if (armijo(a_star, fs) && (!best.ok || fs < best.f)) {
                best = {true, a_star, fs};
            }
            if (!best.ok) {
                // Both rejected: continue backtracking from the smaller step.
                if (a_star < a) {
                    a = a_star;
                    fa = fs;
                    continue;
                }
            }
        }
        if (best.ok) {
            return best;
        }
        a = (a_star > 0.1 * a && a_star < 0.5 * a) ? a_star : 0.5 * a;
        fa = probe(a);
    }
    return {};
}

/// Armijo step followed by a few parabolic refinements toward the line
/// minimum; conjugacy degrades quickly with loose line searches.
StepResult line_search(Evaluator &eval, const std::vector<double> &x, double f0, const std::vector<double> &dir,
                       double slope, double alpha0) {
    std::vector<Sample> samples{{0.0, f0}};
    StepResult best = armijo_search(eval, x, f0, dir, slope, alpha0, samples);
    if (!best.ok) {
        return best;
    }
    for (int k = 0; k < kRefineSteps; ++k) {
        std::sort(samples.begin(), samples.end(), [](const Sample &l, const Sample &r) { return l.t < r.t; });
        const auto it = std::find_if(samples.begin(), samples.end(), [&](const Sample &s) { return s.t == best.alpha; });
        const auto i = static_cast<std::size_t>(it - samples.begin());
        double t;
        if (i + 1 == samples.size()) {
            // Still descending at the largest step tried: expand.
            t = 2.0 * best.alpha;
        } else {
            t = parabola_vertex(samples[i - 1], samples[i], samples[i + 1]);
            if (!std::isfinite(t) || t <= samples[i - 1].t || t >= samples[i + 1].t) {
                break;
            }
        }
        if (std::abs(t - best.alpha) <= kRefineTol * best.alpha) {
            break;
        }
        const double ft = eval(along(x, dir, t));
        samples.push_back({t, ft});
        const double gain = best.f - ft;
        if (ft < best.f && ft <= f0 + kArmijo * t * slope) {
            best = {true, t, ft};
        }
        if (gain <= kRefineTol * (f0 - best.f)) {
            break;
        }
    }
    return best;
}

}  // namespace

MinimizeResult minimize_cg_fd(const MinimizeProblem &problem, const CgOptions &options) {
    problem.validate();
    Evaluator eval(problem, "cg");
    const std::size_t d = problem.dimension();
    TerminalStatus status = TerminalStatus::kRunning;
    try {
        std::vector<double> x = problem.x0;
        double fx = eval(x);
        std::vector<double> g = central_gradient(eval, x, options);
        std::vector<double> dir(d);
        std::transform(g.begin(), g.end(), dir.begin(), [](double v) { return -v; });
        std::size_t since_reset = 0;
        double prev_alpha = 0.0;
        double prev_slope = 0.0;
        double best_seen = eval.best_value();
        int stale = 0;
        while (true) {
            const double gnorm = std::sqrt(dot(g, g));
            if (gnorm < options.gtol) {
                status = TerminalStatus::kConverged;
                break;
            }
            double slope = dot(g, dir);
            bool steepest = since_reset == 0;
            if (slope >= 0.0) {
                std::transform(g.begin(), g.end(), dir.begin(), [](double v) { return -v; });
                slope = -gnorm * gnorm;
                since_reset = 0;
                steepest = true;
            }
            double alpha0 = prev_alpha > 0.0 ? prev_alpha * prev_slope / slope : std::min(1.0, 1.0 / gnorm);
            alpha0 = std::clamp(alpha0, 1e-12, 1e6);
            StepResult step = line_search(eval, x, fx, dir, slope, alpha0);
            if (!step.ok) {
                if (steepest) {
                    status = TerminalStatus::kStalled;
                    break;
                }
                std::transform(g.begin(), g.end(), dir.begin(), [](double v) { return -v; });
                since_reset = 0;
                prev_alpha = 0.0;
                continue;
            }
            const double f_old = fx;
            x = along(x, dir, step.alpha);
            fx = step.f;
            prev_alpha = step.alpha;
            prev_slope = slope;
            std::vector<double> g_new = central_gradient(eval, x, options);
            if (optim_detail::relative_converged(f_old, fx, problem.ftol)) {
                status = TerminalStatus::kConverged;
                break;
            }
            if (eval.best_value() < best_seen) {
                best_seen = eval.best_value();
                stale = 0;
            } else if (++stale >= options.stall_iterations) {
                status = TerminalStatus::kStalled;
                break;
            }
            // Polak-Ribiere with the non-negativity clamp (PR+).
            const double denom = dot(g, g);
            double beta = 0.0;
            if (denom > 0.0) {
                double num = 0.0;
                for (std::size_t i = 0; i < d; ++i) {
                    num += g_new[i] * (g_new[i] - g[i]);
                }
                beta = std::max(0.0, num / denom);
            }
            if (++since_reset >= d) {
                beta = 0.0;
                since_reset = 0;
            }
            for (std::size_t i = 0; i < d; ++i) {
                dir[i] = -g_new[i] + beta * dir[i];
            }
            g = std::move(g_new);
        }
    } catch (const BudgetExhausted &) {
        status = TerminalStatus::kBudgetExhausted;
    }
    return eval.finish(status);
}

}  // namespace qaoa
