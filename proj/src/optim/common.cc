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

#include <cmath>
#include <limits>

#include "evaluator.h"
#include "qaoa/error.h"

namespace qaoa {

void MinimizeProblem::validate() const {
    if (!objective) {
        throw ConfigError("minimize problem has no objective");
    }
    if (x0.empty()) {
        throw ConfigError("minimize problem needs at least one dimension");
    }
    if (budget() < x0.size()) {
        throw ConfigError("evaluation budget " + std::to_string(budget()) + " is smaller than the dimension " +
                          std::to_string(x0.size()));
    }
    if (!(xtol > 0.0) || !(ftol > 0.0)) {
        throw ConfigError("xtol and ftol must be positive");
    }
    for (double v : x0) {
        if (!std::isfinite(v)) {
            throw ConfigError("x0 has a non-finite entry");
        }
    }
}

namespace optim_detail {

Evaluator::Evaluator(const MinimizeProblem &problem, std::string method)
    : problem_(problem), budget_(problem.budget()), best_value_(std::numeric_limits<double>::infinity()) {
    trace_.method = std::move(method);
}

double Evaluator::operator()(std::span<const double> x) {
    if (trace_.size() >= budget_) {
        throw BudgetExhausted{};
    }
    double f = problem_.objective(x);
    if (std::isnan(f)) {
        throw InputError("objective returned NaN");
    }
    trace_.append(x, f);
    if (f < best_value_) {
        best_value_ = f;
        best_point_.assign(x.begin(), x.end());
    }
    return f;
}

MinimizeResult Evaluator::finish(TerminalStatus status) {
    trace_.status = status;
    MinimizeResult result;
    result.x_best = best_point_;
    result.f_best = best_value_;
    result.evals_used = trace_.size();
    result.status = status;
    result.trace = std::move(trace_);
    return result;
}

bool relative_converged(double a, double b, double ftol) {
    return 2.0 * std::abs(a - b) <= ftol * (std::abs(a) + std::abs(b)) + 1e-300;
}

}  // namespace optim_detail
}  // namespace qaoa
