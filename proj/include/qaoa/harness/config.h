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

#ifndef QAOA_HARNESS_CONFIG_H
#define QAOA_HARNESS_CONFIG_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qaoa/ansatz.h"
#include "qaoa/graph.h"
#include "qaoa/noise.h"
#include "qaoa/optim.h"

namespace qaoa::harness {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::size_t kMaxSweepCells = 1000;

enum class ObjectiveMode { kExact, kSampled, kNoisy };

std::string_view objective_mode_name(ObjectiveMode mode);

/// Where the starting angles come from.
struct InitSpec {
    enum class Kind { kPaperP5, kRandom, kExplicit };
    Kind kind = Kind::kRandom;
    /// Flat (beta..., gamma...) vector for kExplicit.
    std::vector<double> theta;
};

/// Lists over which a sweep takes the cross product. Empty lists keep the
/// base value.
struct SweepAxes {
    std::vector<int> p;
    std::vector<Method> method;
    std::vector<std::string> noise;

    std::size_t cell_count() const;
    bool empty() const {
        return p.empty() && method.empty() && noise.empty();
    }
};

struct ExperimentConfig {
    /// "canonical", or a path to an edge-list file. Ignored when
    /// `graph_text` is set.
    std::string graph = "canonical";
    /// Inline edge list in the edge-list file format.
    std::optional<std::string> graph_text;
    int p = 1;
    Method method = Method::kCobyla;
    InitSpec init;
    int restarts = 1;
    std::uint64_t shots = 1000;
    /// How the optimizer's objective is evaluated.
    ObjectiveMode mode = ObjectiveMode::kExact;
    /// Applied to the final run, and to every evaluation when mode is noisy.
    NoiseConfig noise;
    /// Preset name, or "custom" when fields were overridden.
    std::string noise_name = "none";
    /// 0 selects the optimizer default (500 per parameter).
    std::size_t max_evals = 0;
    /// Central-difference step for cg; defaults depend on the mode.
    std::optional<double> fd_step;
    DurationTable durations;
    std::string out = "out";
    std::uint64_t seed = 0;
    /// 0 = hardware concurrency. Never affects results.
    int threads = 0;
    SweepAxes sweep;

    /// Throws ConfigError naming the offending field.
    void validate() const;
    MaxCutInstance load_instance() const;
    /// Canonical JSON text of every field that influences results.
    std::string canonical_json() const;
    /// FNV-1a 64 of canonical_json(), as 16 lowercase hex digits.
    std::string hash() const;
};

/// Parses schema v1. Unknown fields, wrong types and out-of-range values
/// are ConfigErrors naming the field. Relative graph paths are resolved
/// against `base_dir` when it is non-empty.
ExperimentConfig parse_config(std::string_view json_text, const std::filesystem::path &base_dir = {});

/// Reads and parses a config file. A missing file is an InputError naming
/// the path.
ExperimentConfig load_config(const std::filesystem::path &path);

std::uint64_t fnv1a64(std::string_view data);

}  // namespace qaoa::harness

#endif
