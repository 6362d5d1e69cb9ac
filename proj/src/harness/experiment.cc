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

#include "qaoa/harness/experiment.h"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "json.hpp"
#include "qaoa/error.h"
#include "qaoa/harness/io.h"
#include "qaoa/parallel.h"
#include "qaoa/rng.h"

namespace qaoa::harness {

namespace {

// Indices for derive_seed(master, .): one independent stream family per role.
constexpr std::uint64_t kStartsSeed = 0;
constexpr std::uint64_t kFinalSeed = 1;
constexpr std::uint64_t kEvalSeed = 2;

bool noiseless(const NoiseConfig &noise) {
    return noise == NoiseConfig{};
}

RunMode mode_for(ObjectiveMode mode, const ExperimentConfig &config, std::uint64_t seed) {
    switch (mode) {
        case ObjectiveMode::kExact:
            return ExactMode{};
        case ObjectiveMode::kSampled:
            return SampledMode{config.shots, seed};
        case ObjectiveMode::kNoisy:
            return NoisyMode{config.noise, config.shots, seed};
    }
    return ExactMode{};
}

std::vector<std::vector<double>> starting_points(const ExperimentConfig &config) {
    switch (config.init.kind) {
        case InitSpec::Kind::kPaperP5:
            return {QaoaParams::paper_p5().flatten()};
        case InitSpec::Kind::kExplicit:
            return {config.init.theta};
        case InitSpec::Kind::kRandom:
            return random_qaoa_starts(config.p, config.restarts, derive_seed(config.seed, kStartsSeed));
    }
    return {};
}

std::vector<std::string> most_frequent(const Counts &counts, std::size_t k) {
    std::vector<std::pair<std::string, std::uint64_t>> items(counts.entries().begin(), counts.entries().end());
    std::stable_sort(items.begin(), items.end(), [](const auto &a, const auto &b) { return a.second > b.second; });
    std::vector<std::string> out;
    for (std::size_t i = 0; i < std::min(k, items.size()); ++i) {
        out.push_back(items[i].first);
    }
    return out;
}

}  // namespace

RunArtifacts run_experiment(const ExperimentConfig &config) {
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const MaxCutInstance instance = config.load_instance();
    const MaxCutSolution oracle = brute_force_maxcut(instance);

    const std::uint64_t eval_seed = derive_seed(config.seed, kEvalSeed);
    std::uint64_t eval_index = 0;
    auto energy_at = [&](std::span<const double> theta) {
        const auto mode = mode_for(config.mode, config, derive_seed(eval_seed, eval_index++));
        return evaluate_qaoa(instance, QaoaParams::unflatten(theta), mode, nullptr, config.durations, config.threads)
            .energy;
    };

    RunArtifacts art;
    RunSummary &s = art.summary;
    art.trace.method = std::string(method_name(config.method));
    std::vector<double> best_theta;
    if (config.p == 0) {
        art.trace.append({}, energy_at({}));
        art.trace.status = TerminalStatus::kConverged;
    } else {
        MinimizeProblem problem;
        problem.objective = energy_at;
        problem.x0 = std::vector<double>(2 * static_cast<std::size_t>(config.p), 0.0);
        problem.max_evals = config.max_evals;
        MethodOptions options;
        options.cg.fd_step = config.fd_step;
        if (!options.cg.fd_step && config.mode != ObjectiveMode::kExact) {
            options.cg.fd_step = CgOptions::kShotNoiseStep;
        }
        const auto multi = multi_start(config.method, problem, starting_points(config), options);
        for (const auto &run : multi.runs) {
            for (const auto &r : run.trace.records) {
                art.trace.append(r.theta, r.energy);
            }
        }
        art.trace.status = multi.best().status;
        best_theta = multi.best().x_best;
    }

    const RunMode final_mode = noiseless(config.noise)
                                   ? RunMode(SampledMode{config.shots, derive_seed(config.seed, kFinalSeed)})
                                   : RunMode(NoisyMode{config.noise, config.shots, derive_seed(config.seed, kFinalSeed)});
    EnergySample final_sample = evaluate_qaoa(instance, QaoaParams::unflatten(best_theta), final_mode, nullptr,
                                              config.durations, config.threads);
    art.counts = std::move(*final_sample.counts);

    s.config_hash = config.hash();
    s.seed = config.seed;
    s.method = art.trace.method;
    s.p = config.p;
    s.noise = config.noise_name;
    s.status = art.trace.status;
    s.best_energy = art.trace.best_energy();
    s.best_theta = best_theta;
    s.final_energy = final_sample.energy;
    s.best_bitstrings = most_frequent(art.counts, oracle.optima.size());
    for (const auto &[bits, n] : art.counts.entries()) {
        s.best_sampled_cut = std::max(s.best_sampled_cut, cut_value(instance, bits));
    }
    s.max_cut = oracle.value;
    s.approx_ratio = oracle.value > 0.0 ? s.best_sampled_cut / oracle.value : 1.0;
    std::uint64_t on_optimum = 0;
    for (const auto &bits : oracle.optima) {
        on_optimum += art.counts.at(bits);
    }
    s.ground_pair_prob = static_cast<double>(on_optimum) / static_cast<double>(art.counts.total());
    s.evals_used = art.trace.size();
    s.shots = art.counts.total();

    const std::filesystem::path dir(config.out);
    art.counts_path = dir / "counts.json";
    art.trace_path = dir / "trace.csv";
    art.summary_path = dir / "summary.json";
    write_text_file(art.counts_path, format_counts_json({art.counts, s.config_hash, s.seed, oracle.optima}));
    write_text_file(art.trace_path, format_trace_csv(art.trace, config.p));
    s.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    write_text_file(art.summary_path, format_summary_json(s));
    return art;
}

std::vector<ExperimentConfig> sweep_cells(const ExperimentConfig &config) {
    ExperimentConfig base = config;
    base.sweep = {};
    if (config.sweep.empty()) {
        return {base};
    }
    const auto &axes = config.sweep;
    const std::vector<int> ps = axes.p.empty() ? std::vector<int>{config.p} : axes.p;
    const std::vector<Method> methods = axes.method.empty() ? std::vector<Method>{config.method} : axes.method;
    const std::vector<std::string> noises =
        axes.noise.empty() ? std::vector<std::string>{config.noise_name} : axes.noise;
    std::vector<ExperimentConfig> cells;
    for (int p : ps) {
        for (Method m : methods) {
            for (const auto &noise : noises) {
                ExperimentConfig cell = base;
                const std::size_t index = cells.size();
                cell.p = p;
                cell.method = m;
                if (!axes.noise.empty()) {
                    cell.noise = NoiseConfig::preset(noise);
                    cell.noise_name = noise;
                }
                cell.seed = derive_seed(config.seed, index);
                char name[32];
                std::snprintf(name, sizeof(name), "cell_%03zu", index);
                cell.out = (std::filesystem::path(config.out) / name).string();
                try {
                    cell.validate();
                } catch (const ConfigError &e) {
                    throw ConfigError("sweep cell " + std::to_string(index) + ": " + e.what());
                }
                cells.push_back(std::move(cell));
            }
        }
    }
    return cells;
}

SweepResult run_sweep(const ExperimentConfig &config) {
    auto cells = sweep_cells(config);
    const int cell_threads = cells.size() > 1 ? config.threads : 1;
    if (cells.size() > 1) {
        for (auto &cell : cells) {
            cell.threads = 1;
        }
    }
    SweepResult result;
    result.rows.resize(cells.size());
    parallel_for(cells.size(), cell_threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto art = run_experiment(cells[i]);
            result.rows[i] = {i, cells[i].p, std::string(method_name(cells[i].method)), cells[i].noise_name,
                              art.summary, cells[i].out};
        }
    });
    result.csv_path = std::filesystem::path(config.out) / "sweep.csv";
    write_text_file(result.csv_path, format_sweep_csv(result.rows));
    return result;
}

std::string format_summary_json(const RunSummary &s) {
    nlohmann::ordered_json j;
    j["config_hash"] = s.config_hash;
    j["seed"] = s.seed;
    j["method"] = s.method;
    j["p"] = s.p;
    j["noise"] = s.noise;
    j["status"] = std::string(status_name(s.status));
    j["best_energy"] = s.best_energy;
    j["best_theta"] = s.best_theta;
    j["final_energy"] = s.final_energy;
    j["best_bitstrings"] = s.best_bitstrings;
    j["best_sampled_cut"] = s.best_sampled_cut;
    j["max_cut"] = s.max_cut;
    j["approx_ratio"] = s.approx_ratio;
    j["ground_pair_prob"] = s.ground_pair_prob;
    j["evals_used"] = s.evals_used;
    j["shots"] = s.shots;
    j["wall_time_s"] = s.wall_time_s;
    return j.dump(2) + "\n";
}

std::string format_sweep_csv(const std::vector<SweepRow> &rows) {
    std::string out = "cell_id,p,method,noise,f_best,approx_ratio,ground_pair_prob,evals_used\n";
    for (const auto &r : rows) {
        out += std::to_string(r.cell) + "," + std::to_string(r.p) + "," + r.method + "," + r.noise + "," +
               format_double(r.summary.best_energy) + "," + format_double(r.summary.approx_ratio) + "," +
               format_double(r.summary.ground_pair_prob) + "," + std::to_string(r.summary.evals_used) + "\n";
    }
    return out;
}

}  // namespace qaoa::harness
