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

#ifndef QAOA_OPTIM_H
#define QAOA_OPTIM_H

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qaoa/objective.h"

namespace qaoa {

/// Scalar objective over R^d. May be stochastic.
using ObjectiveFn = std::function<double(std::span<const double>)>;

struct MinimizeProblem {
    ObjectiveFn objective;
    std::vector<double> x0;
    /// 0 selects the default of 500 evaluations per dimension.
    std::size_t max_evals = 0;
    double xtol = 1e-8;
    double ftol = 1e-12;

    std::size_t dimension() const {
        return x0.size();
    }
    std::size_t budget() const {
        return max_evals == 0 ? 500 * x0.size() : max_evals;
    }
    /// Throws ConfigError (empty x0, budget < d, non-positive tolerances).
    void validate() const;
};

struct MinimizeResult {
    std::vector<double> x_best;
    double f_best = 0.0;
    std::size_t evals_used = 0;
    TerminalStatus status = TerminalStatus::kRunning;
    /// Every evaluation in order; f_best is the minimum over it.
    OptimizationTrace trace;
};

struct PowellOptions {
    /// Relative width at which Brent refinement of a bracket stops.
    double line_tol = 1e-6;
    double initial_step = 0.2;
    /// Outer iterations without a new best value before reporting a stall.
    int stall_iterations = 4;
};

struct CgOptions {
    /// Fixed central-difference step. Unset: h_i = 1e-6 * max(1, |x_i|),
    /// suitable for exact objectives. Use kShotNoiseStep under shot noise.
    std::optional<double> fd_step;
    double gtol = 1e-8;
    int stall_iterations = 6;

    static constexpr double kShotNoiseStep = 0.05;
};

struct CobylaOptions {
    double rho_start = 0.5;
    double rho_end = 1e-4;
    /// Optional d+1 starting vertices; x0 is used otherwise. Degenerate
    /// simplices are rebuilt around their best vertex.
    std::vector<std::vector<double>> initial_simplex;
};

struct MethodOptions {
    PowellOptions powell;
    CgOptions cg;
    CobylaOptions cobyla;
};

enum class Method { kPowell, kCg, kCobyla };

/// "powell", "cg", "cobyla"; anything else is a ConfigError.
Method parse_method(std::string_view name);
std::string_view method_name(Method method);

/// Direction-set method: line-minimize along each direction in turn
/// (Brent refinement after golden-ratio bracketing), then swap the direction of largest
/// decrease for the net displacement when that is predicted to help.
MinimizeResult minimize_powell(const MinimizeProblem &problem, const PowellOptions &options = {});

/// Polak-Ribiere+ conjugate gradient on central-difference gradients with
/// an Armijo line search; restarts every d iterations or on non-descent.
MinimizeResult minimize_cg_fd(const MinimizeProblem &problem, const CgOptions &options = {});

/// Linear-interpolation trust-region method on a d+1 point simplex, with a
/// monotonically shrinking radius from rho_start to rho_end.
MinimizeResult minimize_cobyla_like(const MinimizeProblem &problem, const CobylaOptions &options = {});

MinimizeResult minimize(Method method, const MinimizeProblem &problem, const MethodOptions &options = {});
MinimizeResult minimize(std::string_view method, const MinimizeProblem &problem, const MethodOptions &options = {});

struct MultiStartResult {
    std::size_t best_index = 0;
    std::vector<MinimizeResult> runs;

    const MinimizeResult &best() const {
        return runs.at(best_index);
    }
};

/// Runs `method` from each start (x0 of `problem` is ignored) and keeps the
/// lowest f_best; ties go to the earliest start.
MultiStartResult multi_start(Method method, const MinimizeProblem &problem, const std::vector<std::vector<double>> &starts,
                             const MethodOptions &options = {});

/// k flat QAOA vectors with beta ~ U[0, pi), gamma ~ U[0, 2 pi).
std::vector<std::vector<double>> random_qaoa_starts(int depth, int count, std::uint64_t seed);

}  // namespace qaoa

#endif
