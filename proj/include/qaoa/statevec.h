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

#ifndef QAOA_STATEVEC_H
#define QAOA_STATEVEC_H

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qaoa/circuit.h"
#include "qaoa/graph.h"

namespace qaoa {

/// Hard cap on simulated qubits (2^24 amplitudes = 256 MiB).
inline constexpr int kMaxQubits = 24;

/// Dense pure state over n qubits. Qubit q maps to bit (n - 1 - q) of the
/// basis index, so the basis index of bitstring "b0 b1 ... b{n-1}" is the
/// bitstring read as a binary number.
class StateVector {
   public:
    /// |0...0>.
    explicit StateVector(int num_qubits);
    static StateVector basis(int num_qubits, std::uint64_t index);
    static StateVector from_bitstring(std::string_view bits);
    /// Takes ownership of raw amplitudes (size must be a power of two).
    static StateVector from_amplitudes(std::vector<std::complex<double>> amps);

    int num_qubits() const {
        return num_qubits_;
    }
    std::size_t size() const {
        return amps_.size();
    }
    std::span<const std::complex<double>> amplitudes() const {
        return amps_;
    }
    std::complex<double> amplitude(std::string_view bits) const;

    /// In-place unitary action. DELAY is the identity.
    void apply(const GateOp &gate);
    void apply(const Circuit &circuit);

    std::vector<double> probabilities() const;
    double norm_squared() const;

   private:
    std::uint64_t mask_of(int qubit) const {
        return std::uint64_t{1} << (num_qubits_ - 1 - qubit);
    }

    int num_qubits_;
    std::vector<std::complex<double>> amps_;
};

/// Value-returning form of StateVector::apply.
StateVector apply_gate(StateVector state, const GateOp &gate);

/// Bitstring histogram. Keys are n-character bitstrings.
class Counts {
   public:
    explicit Counts(int num_bits) : num_bits_(num_bits) {
    }

    void add(const std::string &bits, std::uint64_t times = 1);
    int num_bits() const {
        return num_bits_;
    }
    std::uint64_t total() const {
        return total_;
    }
    std::uint64_t at(const std::string &bits) const;
    const std::map<std::string, std::uint64_t> &entries() const {
        return entries_;
    }

    bool operator==(const Counts &) const = default;

   private:
    int num_bits_;
    std::uint64_t total_ = 0;
    std::map<std::string, std::uint64_t> entries_;
};

/// Exact (infinite-shot) expected cut value of the state.
double expectation_cut(const StateVector &state, const MaxCutInstance &instance);

/// Inverse-CDF sampling of a probability vector. Shot s draws its uniform
/// from Philox stream (seed, kSample, s); results are independent of
/// `threads` (0 = hardware concurrency).
std::vector<std::uint64_t> sample_indices(std::span<const double> probabilities, std::uint64_t shots,
                                          std::uint64_t seed, int threads = 0);

/// Index drawn by one shot; the per-shot primitive behind sample_indices.
std::uint64_t sample_one(std::span<const double> cumulative, std::uint64_t shot, std::uint64_t seed);
std::vector<double> cumulative_distribution(std::span<const double> probabilities);

Counts sample_counts(const StateVector &state, std::uint64_t shots, std::uint64_t seed, int threads = 0);

}  // namespace qaoa

#endif
