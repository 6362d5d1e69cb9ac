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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "evaluator.h"
#include "qaoa/error.h"

namespace qaoa {

using optim_detail::BudgetExhausted;
using optim_detail::Evaluator;

namespace {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Acceptance threshold on actual / predicted reduction.
constexpr double kGoodRatio = 0.1;
// Simplex shape limits, in units of rho (same spirit as COBYLA's parsig /
// pareta): vertices must stay within kFarFactor * rho of the pole and at
// least kFlatFactor * rho from the opposite face.
constexpr double kFarFactor = 2.1;
constexpr double kFlatFactor = 0.25;
constexpr double kDegenerateFactor = 1e-10;

std::vector<double> to_std(const Vec &v) {
    return {v.data(), v.data() + v.size()};
}

/// d+1 vertices; vertex 0 is kept as the best point (the pole).
struct Simplex {
    std::vector<Vec> x;
    std::vector<double> f;

    std::size_t dim() const {
        return x.size() - 1;
    }

    void move_best_to_front() {
        auto best = static_cast<std::size_t>(std::min_element(f.begin(), f.end()) - f.begin());
        std::swap(x[0], x[best]);
        std::swap(f[0], f[best]);
    }

    /// Rows are edge vectors x_i - x_0, i = 1..d.
    Mat edges() const {
        const std::size_t d = dim();
        Mat a(d, d);
        for (std::size_t i = 0; i < d; ++i) {
            a.row(static_cast<Eigen::Index>(i)) = (x[i + 1] - x[0]).transpose();
        }
        return a;
    }
};

/// Inverse of the edge matrix, or nullopt if the simplex is (numerically) flat.
/// Column j is normal to every edge except edge j, and 1 / |column j| is
/// the distance of vertex j+1 from the opposite face.
std::optional<Mat> edge_inverse(const Simplex &s, double rho) {
    Eigen::FullPivLU<Mat> lu(s.edges());
    if (!lu.isInvertible()) {
        return std::nullopt;
    }
    Mat inv = lu.inverse();
    for (Eigen::Index j = 0; j < inv.cols(); ++j) {
        const double n = inv.col(j).norm();
        if (!std::isfinite(n) || 1.0 / n < kDegenerateFactor * rho) {
            return std::nullopt;
        }
    }
    return inv;
}

void rebuild_around_pole(Simplex &s, double rho, Evaluator &eval) {
    const std::size_t d = s.dim();
    for (std::size_t i = 0; i < d; ++i) {
        Vec v = s.x[0];
        v[static_cast<Eigen::Index>(i)] += rho;
        s.x[i + 1] = v;
        s.f[i + 1] = eval(to_std(v));
    }
}

}  // namespace

MinimizeResult minimize_cobyla_like(const MinimizeProblem &problem, const CobylaOptions &options) {
    problem.validate();
    if (!(options.rho_start > 0.0) || !(options.rho_end > 0.0) || options.rho_end > options.rho_start) {
        throw ConfigError("cobyla radii need 0 < rho_end <= rho_start");
    }
    const std::size_t d = problem.dimension();
    if (!options.initial_simplex.empty()) {
        if (options.initial_simplex.size() != d + 1) {
            throw ConfigError("initial simplex needs d + 1 vertices");
        }
        for (const auto &v : options.initial_simplex) {
            if (v.size() != d) {
                throw ConfigError("initial simplex vertex has the wrong dimension");
            }
        }
    }
    Evaluator eval(problem, "cobyla");
    TerminalStatus status = TerminalStatus::kRunning;
    double rho = options.rho_start;
    try {
        Simplex s;
        s.x.resize(d + 1);
        s.f.resize(d + 1);
        if (options.initial_simplex.empty()) {
            s.x[0] = Eigen::Map<const Vec>(problem.x0.data(), static_cast<Eigen::Index>(d));
            s.f[0] = eval(problem.x0);
            rebuild_around_pole(s, rho, eval);
        } else {
            for (std::size_t i = 0; i <= d; ++i) {
                const auto &v = options.initial_simplex[i];
                s.x[i] = Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(d));
                s.f[i] = eval(v);
            }
        }

        while (true) {
            s.move_best_to_front();
            auto inv = edge_inverse(s, rho);
            if (!inv) {
                rebuild_around_pole(s, rho, eval);
                continue;
            }
            // Linear interpolant through all d+1 vertices: edges * g = df.
            Vec df(static_cast<Eigen::Index>(d));
            for (std::size_t i = 0; i < d; ++i) {
                df[static_cast<Eigen::Index>(i)] = s.f[i + 1] - s.f[0];
            }
            const Vec g = (*inv) * df;
            const double gnorm = g.norm();

            bool model_ok = false;
            if (gnorm > 0.0 && std::isfinite(gnorm)) {
                const Vec trial = s.x[0] - (rho / gnorm) * g;
                const double f_trial = eval(to_std(trial));
                const double predicted = rho * gnorm;
                const double ratio = (s.f[0] - f_trial) / predicted;
                model_ok = ratio >= kGoodRatio;
                // Replace the vertex whose removal keeps the simplex fattest;
                // far-away vertices are preferred so the model stays local.
                const Vec lambda = inv->transpose() * (trial - s.x[0]);
                std::size_t drop = 0;
                double best_score = -1.0;
                for (std::size_t j = 0; j < d; ++j) {
                    const double dist = (s.x[j + 1] - s.x[0]).norm();
                    const double score =
                        std::abs(lambda[static_cast<Eigen::Index>(j)]) * std::max(1.0, std::pow(dist / rho, 2));
                    if (score > best_score) {
                        best_score = score;
                        drop = j + 1;
                    }
                }
                if (f_trial < s.f[0] || std::abs(lambda[static_cast<Eigen::Index>(drop - 1)]) > kFlatFactor) {
                    s.x[drop] = trial;
                    s.f[drop] = f_trial;
                }
            }
            if (model_ok) {
                continue;
            }

            // The model failed: repair the geometry if the simplex is poor
            // for the current radius, otherwise shrink the radius.
            s.move_best_to_front();
            inv = edge_inverse(s, rho);
            if (!inv) {
                rebuild_around_pole(s, rho, eval);
                continue;
            }
            std::size_t worst = 0;
            double worst_badness = 1.0;
            for (std::size_t j = 0; j < d; ++j) {
                const double dist = (s.x[j + 1] - s.x[0]).norm();
                const double height = 1.0 / inv->col(static_cast<Eigen::Index>(j)).norm();
                const double badness = std::max(dist / (kFarFactor * rho), (kFlatFactor * rho) / height);
                if (badness > worst_badness) {
                    worst_badness = badness;
                    worst = j + 1;
                }
            }
            if (worst != 0) {
                Vec normal = inv->col(static_cast<Eigen::Index>(worst - 1));
                normal.normalize();
                Vec df2(static_cast<Eigen::Index>(d));
                for (std::size_t i = 0; i < d; ++i) {
                    df2[static_cast<Eigen::Index>(i)] = s.f[i + 1] - s.f[0];
                }
                const Vec g2 = (*inv) * df2;
                const double sign = g2.dot(normal) > 0.0 ? -1.0 : 1.0;
                const Vec v = s.x[0] + sign * rho * normal;
                s.x[worst] = v;
                s.f[worst] = eval(to_std(v));
                continue;
            }
            if (rho <= options.rho_end) {
                status = TerminalStatus::kConverged;
                break;
            }
            rho = std::max(0.5 * rho, options.rho_end);
        }
    } catch (const BudgetExhausted &) {
        status = TerminalStatus::kBudgetExhausted;
    }
    return eval.finish(status);
}

}  // namespace qaoa
