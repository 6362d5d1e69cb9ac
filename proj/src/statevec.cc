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

#include "qaoa/statevec.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "qaoa/error.h"
#include "qaoa/parallel.h"
#include "qaoa/rng.h"
#include "qaoa/simd/kernels.h"

namespace qaoa {

namespace {

using cplx = std::complex<double>;

void check_qubit_count(int n) {
    if (n < 1) {
        throw InputError("qubit count must be positive, got " + std::to_string(n));
    }
    if (n > kMaxQubits) {
        throw CapacityError("statevector limited to " + std::to_string(kMaxQubits) + " qubits, got " +
                            std::to_string(n));
    }
}

}  // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits);
    amps_.assign(std::size_t{1} << num_qubits, cplx{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
    StateVector s(num_qubits);
    if (index >= s.size()) {
        throw InputError("basis index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::from_bitstring(std::string_view bits) {
    return basis(static_cast<int>(bits.size()), index_of(bits));
}

StateVector StateVector::from_amplitudes(std::vector<std::complex<double>> amps) {
    if (amps.empty() || !std::has_single_bit(amps.size())) {
        throw InputError("amplitude count must be a power of two");
    }
    StateVector s(std::countr_zero(amps.size()));
    s.amps_ = std::move(amps);
    return s;
}

std::complex<double> StateVector::amplitude(std::string_view bits) const {
    if (bits.size() != static_cast<std::size_t>(num_qubits_)) {
        throw InputError("bitstring length does not match qubit count");
    }
    return amps_[index_of(bits)];
}

void StateVector::apply(const GateOp &gate) {
    for (int k = 0; k < gate.arity(); ++k) {
        int q = gate.qubits[static_cast<std::size_t>(k)];
        if (q < 0 || q >= num_qubits_) {
            throw InputError(std::string(gate_name(gate.kind)) + " on qubit " + std::to_string(q) +
                             " out of range for " + std::to_string(num_qubits_) + " qubits");
        }
    }
    const auto &k = simd::active_kernels();
    std::span<cplx> amps(amps_);
    const std::uint64_t mask = mask_of(gate.qubits[0]);
    const cplx i_unit{0.0, 1.0};
    switch (gate.kind) {
        case GateKind::kH: {
            const double r = std::numbers::sqrt2 / 2.0;
            k.apply_matrix(amps, mask, {r, r, r, -r});
            break;
        }
        case GateKind::kX:
            k.apply_matrix(amps, mask, {0.0, 1.0, 1.0, 0.0});
            break;
        case GateKind::kY:
            k.apply_matrix(amps, mask, {0.0, -i_unit, i_unit, 0.0});
            break;
        case GateKind::kZ:
            k.apply_diagonal(amps, mask, 1.0, -1.0);
            break;
        case GateKind::kRX: {
            const double c = std::cos(gate.angle / 2.0);
            const double s = std::sin(gate.angle / 2.0);
            k.apply_matrix(amps, mask, {c, cplx{0.0, -s}, cplx{0.0, -s}, c});
            break;
        }
        case GateKind::kRZ: {
            const double h = gate.angle / 2.0;
            k.apply_diagonal(amps, mask, std::polar(1.0, -h), std::polar(1.0, h));
            break;
        }
        case GateKind::kCNOT:
            if (gate.qubits[0] == gate.qubits[1]) {
                throw InputError("CNOT control and target coincide");
            }
            k.apply_cnot(amps, mask, mask_of(gate.qubits[1]));
            break;
        case GateKind::kDelay:
            break;
    }
}

void StateVector::apply(const Circuit &circuit) {
    if (circuit.num_qubits != num_qubits_) {
        throw InputError("circuit has " + std::to_string(circuit.num_qubits) + " qubits, state has " +
                         std::to_string(num_qubits_));
    }
    for (const auto &op : circuit.ops) {
        apply(op);
    }
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> out(amps_.size());
    simd::active_kernels().probabilities(amps_, out);
    return out;
}

double StateVector::norm_squared() const {
    auto p = probabilities();
    double total = 0.0;
    for (double x : p) {
        total += x;
    }
    return total;
}

StateVector apply_gate(StateVector state, const GateOp &gate) {
    state.apply(gate);
    return state;
}

void Counts::add(const std::string &bits, std::uint64_t times) {
    if (bits.size() != static_cast<std::size_t>(num_bits_)) {
        throw InputError("counts key '" + bits + "' does not have " + std::to_string(num_bits_) + " bits");
    }
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw InputError("counts key '" + bits + "' is not a bitstring");
        }
    }
    if (times == 0) {
        return;
    }
    entries_[bits] += times;
    total_ += times;
}

std::uint64_t Counts::at(const std::string &bits) const {
    auto it = entries_.find(bits);
    return it == entries_.end() ? 0 : it->second;
}

double expectation_cut(const StateVector &state, const MaxCutInstance &instance) {
    if (state.num_qubits() != instance.num_nodes()) {
        throw InputError("state has " + std::to_string(state.num_qubits()) + " qubits but instance has " +
                         std::to_string(instance.num_nodes()) + " nodes");
    }
    auto probs = state.probabilities();
    auto table = cut_table(instance);
    return simd::active_kernels().dot(probs, table);
}

std::vector<double> cumulative_distribution(std::span<const double> probabilities) {
    std::vector<double> cdf(probabilities.size());
    double running = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        running += probabilities[i];
        cdf[i] = running;
    }
    return cdf;
}

std::uint64_t sample_one(std::span<const double> cumulative, std::uint64_t shot, std::uint64_t seed) {
    CounterRng rng(seed, StreamTag::kSample, shot);
    const double target = rng.uniform() * cumulative.back();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
    if (it == cumulative.end()) {
        --it;
    }
    return static_cast<std::uint64_t>(it - cumulative.begin());
}

std::vector<std::uint64_t> sample_indices(std::span<const double> probabilities, std::uint64_t shots,
                                          std::uint64_t seed, int threads) {
    if (shots == 0) {
        throw InputError("shots must be at least 1");
    }
    if (probabilities.empty()) {
        throw InputError("cannot sample from an empty distribution");
    }
    auto cdf = cumulative_distribution(probabilities);
    std::vector<std::uint64_t> out(shots);
    parallel_for(shots, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t s = begin; s < end; ++s) {
            out[s] = sample_one(cdf, s, seed);
        }
    });
    return out;
}

Counts sample_counts(const StateVector &state, std::uint64_t shots, std::uint64_t seed, int threads) {
    auto probs = state.probabilities();
    auto indices = sample_indices(probs, shots, seed, threads);
    std::vector<std::uint64_t> histogram(probs.size(), 0);
    for (auto k : indices) {
        ++histogram[k];
    }
    Counts counts(state.num_qubits());
    for (std::uint64_t k = 0; k < histogram.size(); ++k) {
        if (histogram[k] != 0) {
            counts.add(bitstring_of(k, state.num_qubits()), histogram[k]);
        }
    }
    return counts;
}

}  // namespace qaoa
