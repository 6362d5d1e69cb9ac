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

#ifndef QAOA_HARNESS_EXPERIMENT_H
#define QAOA_HARNESS_EXPERIMENT_H

#include <filesystem>
#include <string>
#include <vector>

#include "qaoa/harness/config.h"
#include "qaoa/objective.h"

namespace qaoa::harness {

struct RunSummary {
    std::string config_hash;
    std::uint64_t seed = 0;
    std::string method;
    int p = 0;
    std::string noise;
    TerminalStatus status = TerminalStatus::kRunning;
    /// Minimum energy over the optimization trace.
    double best_energy = 0.0;
    std::vector<double> best_theta;
    /// Energy of the final counts.
    double final_energy = 0.0;
    /// The k most frequent final outcomes, k = number of brute-force
    /// optima; ties broken lexicographically.
    std::vector<std::string> best_bitstrings;
    double best_sampled_cut = 0.0;
    double max_cut = 0.0;
    /// best_sampled_cut / max_cut (1 for edgeless graphs).
    double approx_ratio = 0.0;
    /// Fraction of final shots landing on a brute-force optimum.
    double ground_pair_prob = 0.0;
    std::size_t evals_used = 0;
    std::uint64_t shots = 0;
    double wall_time_s = 0.0;
};

struct RunArtifacts {
    std::filesystem::path counts_path;
    std::filesystem::path trace_path;
    std::filesystem::path summary_path;
    RunSummary summary;
    /// In-memory copies of what was written.
    Counts counts{0};
    OptimizationTrace trace;
};

/// Optimizes, runs the final circuit at the best angles and writes
/// counts.json, trace.csv and summary.json into config.out.
RunArtifacts run_experiment(const ExperimentConfig &config);

struct SweepRow {
    std::size_t cell = 0;
    int p = 0;
    std::string method;
    std::string noise;
    RunSummary summary;
    std::filesystem::path dir;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::filesystem::path csv_path;
};

/// Cross product of config.sweep over the base config. Cell i runs in
/// out/cell_NNN with seed derive_seed(seed, i); with no axes the single
/// cell is the base config itself, written straight into out. Writes
/// sweep.csv after every cell has finished.
SweepResult run_sweep(const ExperimentConfig &config);

/// Expands the sweep into per-cell configs (without running them).
std::vector<ExperimentConfig> sweep_cells(const ExperimentConfig &config);

std::string format_summary_json(const RunSummary &summary);
std::string format_sweep_csv(const std::vector<SweepRow> &rows);

}  // namespace qaoa::harness

#endif
