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

#include "qaoa/objective.h"

#include <algorithm>

#include "qaoa/error.h"

namespace qaoa {

std::string_view status_name(TerminalStatus status) {
    switch (status) {
        case TerminalStatus::kRunning:
            return "running";
        case TerminalStatus::kConverged:
            return "converged";
        case TerminalStatus::kBudgetExhausted:
            return "budget_exhausted";
        case TerminalStatus::kStalled:
            return "stalled";
    }
    return "?";
}

void OptimizationTrace::append(std::span<const double> theta, double energy) {
    records.push_back({records.size(), {theta.begin(), theta.end()}, energy});
}

const TraceRecord &OptimizationTrace::best() const {
    if (records.empty()) {
        throw InputError("empty optimization trace");
    }
    return *std::min_element(records.begin(), records.end(),
                             [](const TraceRecord &a, const TraceRecord &b) { return a.energy < b.energy; });
}

double OptimizationTrace::best_energy() const {
    return best().energy;
}

double energy_from_counts(const Counts &counts, const MaxCutInstance &instance) {
    if (counts.total() == 0) {
        throw InputError("cannot compute energy from empty counts");
    }
    if (counts.num_bits() != instance.num_nodes()) {
        throw InputError("counts keys have " + std::to_string(counts.num_bits()) + " bits, instance has " +
                         std::to_string(instance.num_nodes()) + " nodes");
    }
    double weighted = 0.0;
    for (const auto &[bits, n] : counts.entries()) {
        weighted += static_cast<double>(n) * cut_value(instance, bits);
    }
    return -weighted / static_cast<double>(counts.total());
}

EnergySample evaluate_qaoa(const MaxCutInstance &instance, const QaoaParams &params, const RunMode &mode,
                           OptimizationTrace *trace, const DurationTable &durations, int threads) {
    auto circuit = build_qaoa_circuit(instance, params, durations);
    auto output = run_circuit(circuit, mode, threads);
    EnergySample sample;
    if (const auto *state = std::get_if<StateVector>(&output)) {
        sample.energy = -expectation_cut(*state, instance);
    } else {
        auto &counts = std::get<Counts>(output);
        sample.energy = energy_from_counts(counts, instance);
        sample.shots = counts.total();
        sample.counts = std::move(counts);
    }
    if (trace != nullptr) {
        trace->append(params.flatten(), sample.energy);
    }
    return sample;
}

}  // namespace qaoa
