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

#ifndef QAOA_ANSATZ_H
#define QAOA_ANSATZ_H

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "qaoa/circuit.h"
#include "qaoa/graph.h"
#include "qaoa/noise.h"
#include "qaoa/statevec.h"

namespace qaoa {

/// Variational angles for depth p = betas.size() == gammas.size().
/// Flat layout is (beta_1..beta_p, gamma_1..gamma_p).
struct QaoaParams {
    std::vector<double> betas;
    std::vector<double> gammas;

    int depth() const {
        return static_cast<int>(betas.size());
    }
    void validate() const;
    std::vector<double> flatten() const;
    static QaoaParams unflatten(std::span<const double> theta);

    /// Starting point used for the p = 5 simulator runs.
    static QaoaParams paper_p5();
};

/// Gate durations in dimensionless time units. Measurement is not on the
/// timeline.
struct DurationTable {
    double single_qubit = 1.0;
    double cnot = 4.0;

    double of(GateKind kind) const {
        return kind == GateKind::kCNOT ? cnot : single_qubit;
    }
};

/// H layer, then p x (per-edge CNOT / RZ(2 w gamma) / CNOT, RX(2 beta) on
/// every qubit). Gate count is n + p (3|E| + n).
Circuit build_qaoa_circuit(const MaxCutInstance &instance, const QaoaParams &params,
                           const DurationTable &durations = {});

struct ExactMode {};
struct SampledMode {
    std::uint64_t shots = 1000;
    std::uint64_t seed = 0;
};
struct NoisyMode {
    NoiseConfig noise;
    std::uint64_t shots = 1000;
    std::uint64_t seed = 0;
};
using RunMode = std::variant<ExactMode, SampledMode, NoisyMode>;
using RunOutput = std::variant<StateVector, Counts>;

StateVector run_exact(const Circuit &circuit);
Counts run_sampled(const Circuit &circuit, std::uint64_t shots, std::uint64_t seed, int threads = 0);
/// Each shot is an independent noise trajectory; shot s depends only on
/// (seed, s), so the histogram is identical for every thread count.
Counts run_noisy(const Circuit &circuit, const NoiseConfig &noise, std::uint64_t shots, std::uint64_t seed,
                 int threads = 0);

/// Exact -> StateVector; sampled / noisy -> Counts.
RunOutput run_circuit(const Circuit &circuit, const RunMode &mode, int threads = 0);

}  // namespace qaoa

#endif
