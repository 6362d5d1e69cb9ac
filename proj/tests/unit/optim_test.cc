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

#include "qaoa/optim.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <ostream>

#include "qaoa/error.h"
#include "qaoa/rng.h"

namespace qaoa {

void PrintTo(Method method, std::ostream *os) {
    *os << method_name(method);
}

namespace {

const Method kAllMethods[] = {Method::kPowell, Method::kCg, Method::kCobyla};

MinimizeProblem shifted_bowl() {
    MinimizeProblem p;
    p.objective = [](std::span<const double> x) { return std::pow(x[0] - 1.0, 2) + std::pow(x[1] + 2.0, 2); };
    p.x0 = {0.0, 0.0};
    return p;
}

void expect_consistent(const MinimizeProblem &problem, const MinimizeResult &r) {
    EXPECT_EQ(r.trace.size(), r.evals_used);
    EXPECT_LE(r.evals_used, problem.budget());
    EXPECT_LE(r.f_best, problem.objective(problem.x0));
    EXPECT_DOUBLE_EQ(r.f_best, r.trace.best_energy());
    EXPECT_DOUBLE_EQ(r.f_best, problem.objective(r.x_best));
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
        EXPECT_EQ(r.trace.records[i].eval, i);
    }
}

TEST(Powell, ShiftedBowl) {
    const auto problem = shifted_bowl();
    const auto r = minimize_powell(problem);
    EXPECT_NEAR(r.x_best[0], 1.0, 1e-6);
    EXPECT_NEAR(r.x_best[1], -2.0, 1e-6);
    EXPECT_EQ(r.status, TerminalStatus::kConverged);
    EXPECT_EQ(r.trace.method, "powell");
    expect_consistent(problem, r);
}

TEST(Powell, ConstantConvergesImmediately) {
    MinimizeProblem problem;
    problem.objective = [](std::span<const double>) { return 4.0; };
    problem.x0 = {0.3, -0.1, 2.0};
    const auto r = minimize_powell(problem);
    EXPECT_EQ(r.status, TerminalStatus::kConverged);
    EXPECT_DOUBLE_EQ(r.f_best, 4.0);
    EXPECT_EQ(r.x_best, problem.x0);
    // One sweep of line searches: no more than a few dozen evaluations.
    EXPECT_LT(r.evals_used, 100u);
    expect_consistent(problem, r);
}

TEST(Powell, RotatedValleyUsesNewDirections) {
    MinimizeProblem problem;
    problem.objective = [](std::span<const double> x) {
        const double u = x[0] + x[1], v = x[0] - x[1];
        return u * u + 100.0 * v * v;
    };
    problem.x0 = {3.0, -1.0};
    const auto r = minimize_powell(problem);
    EXPECT_LT(r.f_best, 1e-10);
    expect_consistent(problem, r);
}

TEST(Cg, Rosenbrock) {
    MinimizeProblem problem;
    problem.objective = [](std::span<const double> x) {
        return std::pow(1.0 - x[0], 2) + 100.0 * std::pow(x[1] - x[0] * x[0], 2);
    };
    problem.x0 = {-1.2, 1.0};
    const auto r = minimize_cg_fd(problem);
    EXPECT_NEAR(r.x_best[0], 1.0, 1e-4);
    EXPECT_NEAR(r.x_best[1], 1.0, 1e-4);
    EXPECT_LE(r.evals_used, 1000u);
    expect_consistent(problem, r);
}

TEST(Cg, QuadraticGradientNorm) {
    constexpr std::size_t d = 10;
    MinimizeProblem problem;
    problem.objective = [](std::span<const double> x) {
        double f = 0.0;
        for (std::size_t i = 0; i < d; ++i) {
            f += 0.5 * static_cast<double>(i + 1) * std::pow(x[i] - 0.1 * static_cast<double>(i), 2);
        }
        return f;
    };
    problem.x0.assign(d, 1.0);
    problem.max_evals = 500;
    const auto r = minimize_cg_fd(problem);
    double g2 = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        g2 += std::pow(static_cast<double>(i + 1) * (r.x_best[i] - 0.1 * static_cast<double>(i)), 2);
    }
    EXPECT_LT(std::sqrt(g2), 1e-6);
    expect_consistent(problem, r);
}

TEST(Cg, ShotNoiseStepUsed) {
    // With a fixed step 0.05, the central difference of a quadratic is
    // still exact, so convergence is unaffected.
    CgOptions opts;
    opts.fd_step = CgOptions::kShotNoiseStep;
    const auto problem = shifted_bowl();
    const auto r = minimize_cg_fd(problem, opts);
    EXPECT_LT(r.f_best, 1e-10);
}

TEST(Cobyla, SphereD4) {
    MinimizeProblem problem;
    problem.objective = [](std::span<const double> x) {
        double f = 0.0;
        for (double v : x) {
            f += v * v;
        }
        return f;
    };
    problem.x0 = {1.0, -0.5, 0.25, 2.0};
    const auto r = minimize_cobyla_like(problem);
    EXPECT_LT(r.f_best, 1e-6);
    EXPECT_EQ(r.status, TerminalStatus::kConverged);
    expect_consistent(problem, r);
}

TEST(Cobyla, DegenerateSimplexRebuilt) {
    MinimizeProblem problem;
    problem.objective = [](std::span<const double> x) { return std::pow(x[0] - 0.7, 2); };
    problem.x0 = {0.0};
    CobylaOptions opts;
    opts.initial_simplex = {{0.0}, {0.0}};
    const auto r = minimize_cobyla_like(problem, opts);
    EXPECT_LT(r.f_best, 1e-6);
    expect_consistent(problem, r);
}

TEST(Cobyla, RejectsBadRadii) {
    auto problem = shifted_bowl();
    CobylaOptions opts;
    opts.rho_end = 1.0;
    EXPECT_THROW(minimize_cobyla_like(problem, opts), ConfigError);
    opts = {};
    opts.initial_simplex = {{0.0, 0.0}};
    EXPECT_THROW(minimize_cobyla_like(problem, opts), ConfigError);
}

class AllMethods : public ::testing::TestWithParam<Method> {};

TEST_P(AllMethods, BudgetRespected) {
    MinimizeProblem problem;
    problem.objective = [](std::span<const double> x) {
        return std::pow(1.0 - x[0], 2) + 100.0 * std::pow(x[1] - x[0] * x[0], 2);
    };
    problem.x0 = {-1.2, 1.0};
    problem.max_evals = 37;
    const auto r = minimize(GetParam(), problem);
    EXPECT_EQ(r.evals_used, 37u);
    EXPECT_EQ(r.status, TerminalStatus::kBudgetExhausted);
    expect_consistent(problem, r);
}

TEST_P(AllMethods, RandomConvexQuadratics) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CounterRng rng(seed, StreamTag::kDerive, 77);
        const std::size_t d = 1 + seed % 10;
        std::vector<double> diag(d), c(d), x0(d);
        for (std::size_t i = 0; i < d; ++i) {
            diag[i] = 0.2 + 3.0 * rng.uniform();
            c[i] = 2.0 * rng.uniform() - 1.0;
            x0[i] = 4.0 * rng.uniform() - 2.0;
        }
        // Rotate by a random Givens chain so axes are not eigenvectors.
        const double angle = rng.uniform() * std::numbers::pi;
        MinimizeProblem problem;
        problem.objective = [=](std::span<const double> x) {
            std::vector<double> y(x.begin(), x.end());
            for (std::size_t i = 0; i < d; ++i) {
                y[i] -= c[i];
            }
            for (std::size_t i = 0; i + 1 < d; ++i) {
                const double a = y[i], b = y[i + 1];
                y[i] = std::cos(angle) * a - std::sin(angle) * b;
                y[i + 1] = std::sin(angle) * a + std::cos(angle) * b;
            }
            double f = 0.0;
            for (std::size_t i = 0; i < d; ++i) {
                f += diag[i] * y[i] * y[i];
            }
            return f;
        };
        problem.x0 = x0;
        const auto r = minimize(GetParam(), problem);
        EXPECT_LT(r.f_best, 1e-6) << "seed " << seed << " d " << d;
        expect_consistent(problem, r);
    }
}

TEST_P(AllMethods, DispatchMatchesDirectCall) {
    const auto problem = shifted_bowl();
    const auto via_enum = minimize(GetParam(), problem);
    const auto via_name = minimize(method_name(GetParam()), problem);
    EXPECT_EQ(via_enum.x_best, via_name.x_best);
    EXPECT_EQ(via_enum.evals_used, via_name.evals_used);
    EXPECT_EQ(via_enum.trace.method, method_name(GetParam()));
}

INSTANTIATE_TEST_SUITE_P(Methods, AllMethods, ::testing::ValuesIn(kAllMethods),
                         [](const auto &info) { return std::string(method_name(info.param)); });

TEST(Minimize, ProblemValidation) {
    MinimizeProblem p = shifted_bowl();
    p.x0.clear();
    EXPECT_THROW(minimize_powell(p), ConfigError);
    p = shifted_bowl();
    p.max_evals = 1;
    EXPECT_THROW(minimize_cg_fd(p), ConfigError);
    EXPECT_THROW(parse_method("nelder-mead"), ConfigError);
    EXPECT_EQ(shifted_bowl().budget(), 1000u);
}

TEST(MultiStart, PicksBestRun) {
    MinimizeProblem problem;
    // Two basins; the one near x = 3 is deeper.
    problem.objective = [](std::span<const double> x) {
        return std::min(std::pow(x[0] + 1.0, 2), std::pow(x[0] - 3.0, 2) - 1.0);
    };
    problem.x0 = {0.0};
    const auto r = multi_start(Method::kCobyla, problem, {{-1.5}, {3.5}, {-0.5}});
    EXPECT_EQ(r.runs.size(), 3u);
    EXPECT_EQ(r.best_index, 1u);
    EXPECT_NEAR(r.best().f_best, -1.0, 1e-6);
    EXPECT_THROW(multi_start(Method::kCobyla, problem, {}), ConfigError);
}

TEST(MultiStart, RandomStartsInRange) {
    const auto starts = random_qaoa_starts(3, 50, 8);
    ASSERT_EQ(starts.size(), 50u);
    for (const auto &s : starts) {
        ASSERT_EQ(s.size(), 6u);
        for (int i = 0; i < 3; ++i) {
            EXPECT_GE(s[i], 0.0);
            EXPECT_LT(s[i], std::numbers::pi);
            EXPECT_GE(s[3 + i], 0.0);
            EXPECT_LT(s[3 + i], 2.0 * std::numbers::pi);
        }
    }
    EXPECT_EQ(random_qaoa_starts(3, 50, 8), starts);
    EXPECT_NE(random_qaoa_starts(3, 50, 9), starts);
}

}  // namespace
}  // namespace qaoa
