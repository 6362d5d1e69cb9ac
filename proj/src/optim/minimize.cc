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

#include <numbers>

#include "qaoa/error.h"
#include "qaoa/optim.h"
#include "qaoa/rng.h"

namespace qaoa {

Method parse_method(std::string_view name) {
    if (name == "powell") {
        return Method::kPowell;
    }
    if (name == "cg") {
        return Method::kCg;
    }
    if (name == "cobyla") {
        return Method::kCobyla;
    }
    throw ConfigError("unknown minimization method '" + std::string(name) + "' (expected powell, cg or cobyla)");
}

std::string_view method_name(Method method) {
    switch (method) {
        case Method::kPowell:
            return "powell";
        case Method::kCg:
            return "cg";
        case Method::kCobyla:
            return "cobyla";
    }
    return "?";
}

MinimizeResult minimize(Method method, const MinimizeProblem &problem, const MethodOptions &options) {
    switch (method) {
        case Method::kPowell:
            return minimize_powell(problem, options.powell);
        case Method::kCg:
            return minimize_cg_fd(problem, options.cg);
        case Method::kCobyla:
            return minimize_cobyla_like(problem, options.cobyla);
    }
    throw ConfigError("unknown minimization method");
}

MinimizeResult minimize(std::string_view method, const MinimizeProblem &problem, const MethodOptions &options) {
    return minimize(parse_method(method), problem, options);
}

MultiStartResult multi_start(Method method, const MinimizeProblem &problem,
                             const std::vector<std::vector<double>> &starts, const MethodOptions &options) {
    if (starts.empty()) {
        throw ConfigError("multi-start needs at least one starting point");
    }
    MultiStartResult out;
    for (std::size_t k = 0; k < starts.size(); ++k) {
        MinimizeProblem run = problem;
        run.x0 = starts[k];
        out.runs.push_back(minimize(method, run, options));
        if (out.runs.back().f_best < out.runs[out.best_index].f_best) {
            out.best_index = k;
        }
    }
    return out;
}

std::vector<std::vector<double>> random_qaoa_starts(int depth, int count, std::uint64_t seed) {
    if (depth < 1 || count < 1) {
        throw ConfigError("random starts need depth >= 1 and count >= 1");
    }
    std::vector<std::vector<double>> starts;
    for (int k = 0; k < count; ++k) {
        CounterRng rng(seed, StreamTag::kRestart, static_cast<std::uint64_t>(k));
        std::vector<double> theta(2 * static_cast<std::size_t>(depth));
        for (int i = 0; i < depth; ++i) {
            theta[static_cast<std::size_t>(i)] = std::numbers::pi * rng.uniform();
        }
        for (int i = 0; i < depth; ++i) {
            theta[static_cast<std::size_t>(depth + i)] = 2.0 * std::numbers::pi * rng.uniform();
        }
        starts.push_back(std::move(theta));
    }
    return starts;
}

}  // namespace qaoa
