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

#ifndef QAOA_SRC_OPTIM_EVALUATOR_H
#define QAOA_SRC_OPTIM_EVALUATOR_H

#include <span>
#include <string>
#include <vector>

#include "qaoa/optim.h"

namespace qaoa::optim_detail {

/// Thrown by Evaluator when the evaluation budget is spent. Never escapes
/// the minimize_* entry points.
struct BudgetExhausted {};

/// Counts, records and budget-limits objective calls for one minimize run.
class Evaluator {
   public:
    Evaluator(const MinimizeProblem &problem, std::string method);

    double operator()(std::span<const double> x);

    std::size_t used() const {
        return trace_.size();
    }
    double best_value() const {
        return best_value_;
    }
    const std::vector<double> &best_point() const {
        return best_point_;
    }

    MinimizeResult finish(TerminalStatus status);

   private:
    const MinimizeProblem &problem_;
    std::size_t budget_;
    OptimizationTrace trace_;
    double best_value_;
    std::vector<double> best_point_;
};

/// 2 |a - b| <= ftol (|a| + |b|) + tiny.
bool relative_converged(double a, double b, double ftol);

}  // namespace qaoa::optim_detail

#endif
