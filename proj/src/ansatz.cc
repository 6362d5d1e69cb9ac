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

#include "qaoa/ansatz.h"

#include <cmath>

#include "qaoa/error.h"
#include "qaoa/parallel.h"

namespace qaoa {

void QaoaParams::validate() const {
    if (betas.size() != gammas.size()) {
        throw InputError("QAOA params need as many betas (" + std::to_string(betas.size()) + ") as gammas (" +
                         std::to_string(gammas.size()) + ")");
    }
    for (double x : betas) {
        if (!std::isfinite(x)) {
            throw InputError("non-finite beta");
        }
    }
    for (double x : gammas) {
        if (!std::isfinite(x)) {
            throw InputError("non-finite gamma");
        }
    }
}

std::vector<double> QaoaParams::flatten() const {
    std::vector<double> theta(betas);
    theta.insert(theta.end(), gammas.begin(), gammas.end());
    return theta;
}

QaoaParams QaoaParams::unflatten(std::span<const double> theta) {
    if (theta.size() % 2 != 0) {
        throw InputError("flat parameter vector must have even length, got " + std::to_string(theta.size()));
    }
    auto p = theta.size() / 2;
    return {{theta.begin(), theta.begin() + static_cast<std::ptrdiff_t>(p)},
            {theta.begin() + static_cast<std::ptrdiff_t>(p), theta.end()}};
}

QaoaParams QaoaParams::paper_p5() {
    return {{2.083, 2.048, 1.792, 1.564, 1.387}, {2.281, 5.962, 1.789, 3.563, 5.646}};
}

Circuit build_qaoa_circuit(const MaxCutInstance &instance, const QaoaParams &params,
                           const DurationTable &durations) {
    params.validate();
    const int n = instance.num_nodes();
    Circuit circuit{n, {}};
    const auto p = static_cast<std::size_t>(params.depth());
    circuit.ops.reserve(static_cast<std::size_t>(n) + p * (3 * instance.edges().size() + static_cast<std::size_t>(n)));
    const double t1 = durations.single_qubit;
    const double t2 = durations.cnot;
    for (int q = 0; q < n; ++q) {
        circuit.ops.push_back(GateOp::single(GateKind::kH, q, t1));
    }
    for (std::size_t layer = 0; layer < p; ++layer) {
        const double gamma = params.gammas[layer];
        for (const auto &e : instance.edges()) {
            circuit.ops.push_back(GateOp::cnot(e.u, e.v, t2));
            circuit.ops.push_back(GateOp::rotation(GateKind::kRZ, e.v, 2.0 * e.weight * gamma, t1));
            circuit.ops.push_back(GateOp::cnot(e.u, e.v, t2));
        }
        const double beta = params.betas[layer];
        for (int q = 0; q < n; ++q) {
            circuit.ops.push_back(GateOp::rotation(GateKind::kRX, q, 2.0 * beta, t1));
        }
    }
    return circuit;
}

StateVector run_exact(const Circuit &circuit) {
    StateVector state(circuit.num_qubits);
    state.apply(circuit);
    return state;
}

Counts run_sampled(const Circuit &circuit, std::uint64_t shots, std::uint64_t seed, int threads) {
    return sample_counts(run_exact(circuit), shots, seed, threads);
}

Counts run_noisy(const Circuit &circuit, const NoiseConfig &noise, std::uint64_t shots, std::uint64_t seed,
                 int threads) {
    noise.validate();
    if (shots == 0) {
        throw InputError("shots must be at least 1");
    }
    const int n = circuit.num_qubits;
    std::vector<std::uint64_t> outcomes(shots);
    if (noise.shot_invariant_circuit()) {
        // Every shot runs the same circuit: simulate once, then only the
        // sampling and readout draws differ per shot.
        auto probs = run_exact(prepare_shot_circuit(circuit, noise, 0, seed)).probabilities();
        auto cdf = cumulative_distribution(probs);
        parallel_for(shots, threads, [&](std::size_t begin, std::size_t end) {
            for (std::size_t s = begin; s < end; ++s) {
                outcomes[s] = sample_one(cdf, s, seed);
            }
        });
    } else {
        parallel_for(shots, threads, [&](std::size_t begin, std::size_t end) {
            for (std::size_t s = begin; s < end; ++s) {
                auto probs = run_exact(prepare_shot_circuit(circuit, noise, s, seed)).probabilities();
                outcomes[s] = sample_one(cumulative_distribution(probs), s, seed);
            }
        });
    }
    Counts counts(n);
    for (std::size_t s = 0; s < shots; ++s) {
        counts.add(apply_readout_error(bitstring_of(outcomes[s], n), noise.p_readout, s, seed));
    }
    return counts;
}

RunOutput run_circuit(const Circuit &circuit, const RunMode &mode, int threads) {
    circuit.validate();
    if (std::holds_alternative<ExactMode>(mode)) {
        return run_exact(circuit);
    }
    if (const auto *sampled = std::get_if<SampledMode>(&mode)) {
        return run_sampled(circuit, sampled->shots, sampled->seed, threads);
    }
    const auto &noisy = std::get<NoisyMode>(mode);
    return run_noisy(circuit, noisy.noise, noisy.shots, noisy.seed, threads);
}

}  // namespace qaoa
