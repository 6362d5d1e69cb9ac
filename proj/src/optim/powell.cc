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

constexpr double kGolden = 1.618033988749895;
constexpr double kGoldenC = 0.3819660112501051;  // 2 - golden ratio
constexpr int kMaxExpansions = 60;

std::vector<double> along(const std::vector<double> &x, const std::vector<double> &dir, double t) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = x[i] + t * dir[i];
    }
    return out;
}

double norm(const std::vector<double> &v) {
    return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

/// Minimizes f(x + t dir) over t, dir unit length. Moves x (and fx) only on
/// strict improvement.
void line_minimize(Evaluator &eval, std::vector<double> &x, double &fx, const std::vector<double> &dir,
                   const PowellOptions &opts, double xtol) {
    auto f = [&](double t) { return eval(along(x, dir, t)); };

    // Bracket: walk downhill with golden expansion until f turns up.
    double a = 0.0, fa = fx;
    double b = opts.initial_step, fb = f(b);
    if (fb > fa) {
        std::swap(a, b);
        std::swap(fa, fb);
    }
    double c = b + kGolden * (b - a);
    double fc = f(c);
    for (int k = 0; k < kMaxExpansions && fb > fc; ++k) {
        a = b;
        fa = fb;
        b = c;
        fb = fc;
        c = b + kGolden * (b - a);
        fc = f(c);
    }

    // Brent refinement on the bracket: golden-section steps, accelerated by
    // parabolic interpolation whenever the parabola is well behaved.
    double lo = std::min(a, c), hi = std::max(a, c);
    double xm = b, fxm = fb;             // best so far
    double w = b, fw = fb, v = b, fv = fb;  // second and third best
    double step = 0.0, prev_step = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double tol1 = opts.line_tol * std::abs(xm) + 0.5 * xtol;
        const double tol2 = 2.0 * tol1;
        if (std::abs(xm - mid) <= tol2 - 0.5 * (hi - lo)) {
            break;
        }
        bool golden = true;
        if (std::abs(prev_step) > tol1) {
            double r = (xm - w) * (fxm - fv);
            double q = (xm - v) * (fxm - fw);
            double p = (xm - v) * q - (xm - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) {
                p = -p;
            }
            q = std::abs(q);
            if (std::abs(p) < std::abs(0.5 * q * prev_step) && p > q * (lo - xm) && p < q * (hi - xm)) {
                prev_step = step;
                step = p / q;
                const double u = xm + step;
                if (u - lo < tol2 || hi - u < tol2) {
                    step = mid >= xm ? tol1 : -tol1;
                }
                golden = false;
            }
        }
        if (golden) {
            prev_step = xm >= mid ? lo - xm : hi - xm;
            step = kGoldenC * prev_step;
        }
        const double u = std::abs(step) >= tol1 ? xm + step : xm + (step >= 0.0 ? tol1 : -tol1);
        const double fu = f(u);
        if (fu <= fxm) {
            (u >= xm ? lo : hi) = xm;
            v = w;
            fv = fw;
            w = xm;
            fw = fxm;
            xm = u;
            fxm = fu;
        } else {
            (u < xm ? lo : hi) = u;
            if (fu <= fw || w == xm) {
                v = w;
                fv = fw;
                w = u;
                fw = fu;
            } else if (fu <= fv || v == xm || v == w) {
                v = u;
                fv = fu;
            }
        }
    }
    const double t_best = xm;
    const double f_best = fxm;
    if (f_best < fx) {
        x = along(x, dir, t_best);
        fx = f_best;
    }
}

}  // namespace

MinimizeResult minimize_powell(const MinimizeProblem &problem, const PowellOptions &options) {
    problem.validate();
    Evaluator eval(problem, "powell");
    const std::size_t d = problem.dimension();
    TerminalStatus status = TerminalStatus::kRunning;
    try {
        std::vector<double> x = problem.x0;
        double fx = eval(x);
        std::vector<std::vector<double>> dirs(d, std::vector<double>(d, 0.0));
        for (std::size_t i = 0; i < d; ++i) {
            dirs[i][i] = 1.0;
        }
        double best_seen = eval.best_value();
        int stale = 0;
        while (status == TerminalStatus::kRunning) {
            const std::vector<double> x_start = x;
            const double f_start = fx;
            std::size_t biggest = 0;
            double biggest_drop = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                const double before = fx;
                line_minimize(eval, x, fx, dirs[i], options, problem.xtol);
                if (before - fx > biggest_drop) {
                    biggest_drop = before - fx;
                    biggest = i;
                }
            }
            std::vector<double> step(d);
            for (std::size_t i = 0; i < d; ++i) {
                step[i] = x[i] - x_start[i];
            }
            const double step_len = norm(step);
            double max_move = 0.0;
            for (double s : step) {
                max_move = std::max(max_move, std::abs(s));
            }
            if (optim_detail::relative_converged(f_start, fx, problem.ftol) || max_move <= problem.xtol) {
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
            // Extrapolate along the net step and decide whether it should
            // replace the direction that contributed the largest decrease.
            std::vector<double> extrapolated(d);
            for (std::size_t i = 0; i < d; ++i) {
                extrapolated[i] = 2.0 * x[i] - x_start[i];
            }
            const double f_ext = eval(extrapolated);
            if (f_ext < f_start) {
                const double t = 2.0 * (f_start - 2.0 * fx + f_ext) * std::pow(f_start - fx - biggest_drop, 2) -
                                 biggest_drop * std::pow(f_start - f_ext, 2);
                if (t < 0.0 && step_len > 0.0) {
                    for (auto &s : step) {
                        s /= step_len;
                    }
                    line_minimize(eval, x, fx, step, options, problem.xtol);
                    dirs[biggest] = dirs.back();
                    dirs.back() = step;
                }
            }
        }
    } catch (const BudgetExhausted &) {
        status = TerminalStatus::kBudgetExhausted;
    }
    return eval.finish(status);
}

}  // namespace qaoa
