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

#ifndef QAOA_OBJECTIVE_H
#define QAOA_OBJECTIVE_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qaoa/ansatz.h"
#include "qaoa/graph.h"
#include "qaoa/statevec.h"

namespace qaoa {

enum class TerminalStatus { kRunning, kConverged, kBudgetExhausted, kStalled };

std::string_view status_name(TerminalStatus status);

struct EnergySample {
    /// Negated average cut; lower is better.
    double energy = 0.0;
    /// 0 for exact-mode evaluations.
    std::uint64_t shots = 0;
    std::optional<Counts> counts;
};

struct TraceRecord {
    std::size_t eval = 0;
    std::vector<double> theta;
    double energy = 0.0;
};

/// One record per objective evaluation, indices 0, 1, 2, ...
struct OptimizationTrace {
    std::string method;
    TerminalStatus status = TerminalStatus::kRunning;
    std::vector<TraceRecord> records;

    void append(std::span<const double> theta, double energy);
    std::size_t size() const {
        return records.size();
    }
    /// Minimum recorded energy; throws if the trace is empty.
    double best_energy() const;
    const TraceRecord &best() const;
};

/// -(sum_b counts(b) * cut(b)) / shots.
double energy_from_counts(const Counts &counts, const MaxCutInstance &instance);

/// Builds and runs the ansatz. Exact mode returns -expectation_cut; sampled
/// and noisy modes return energy_from_counts. Appends to `trace` when given.
EnergySample evaluate_qaoa(const MaxCutInstance &instance, const QaoaParams &params, const RunMode &mode,
                           OptimizationTrace *trace = nullptr, const DurationTable &durations = {}, int threads = 0);

}  // namespace qaoa

#endif
