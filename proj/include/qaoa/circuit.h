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

#ifndef QAOA_CIRCUIT_H
#define QAOA_CIRCUIT_H

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qaoa {

/// Gate vocabulary. DELAY is an explicit idle of a given duration on one
/// qubit (identity on the state); scheduling passes use it to pin pulses.
enum class GateKind { kH, kX, kY, kZ, kRX, kRZ, kCNOT, kDelay };

/// Which pass produced a gate. Noise passes never add noise to kNoise gates.
enum class GateOrigin { kProgram, kTwirl, kDecoupling, kNoise };

std::string_view gate_name(GateKind kind);

struct GateOp {
    GateKind kind = GateKind::kH;
    /// qubits[1] is the CNOT target; -1 for single-qubit gates.
    std::array<int, 2> qubits{-1, -1};
    /// Radians; meaningful only for RX/RZ.
    double angle = 0.0;
    /// Dimensionless time units. Required by the scheduler.
    std::optional<double> duration;
    GateOrigin origin = GateOrigin::kProgram;

    int arity() const {
        return kind == GateKind::kCNOT ? 2 : 1;
    }
    bool has_angle() const {
        return kind == GateKind::kRX || kind == GateKind::kRZ;
    }
    bool acts_on(int q) const {
        return qubits[0] == q || (arity() == 2 && qubits[1] == q);
    }

    static GateOp single(GateKind kind, int q, std::optional<double> duration = std::nullopt,
                         GateOrigin origin = GateOrigin::kProgram);
    static GateOp rotation(GateKind kind, int q, double angle, std::optional<double> duration = std::nullopt,
                           GateOrigin origin = GateOrigin::kProgram);
    static GateOp cnot(int control, int target, std::optional<double> duration = std::nullopt,
                       GateOrigin origin = GateOrigin::kProgram);
    static GateOp delay(int q, double duration, GateOrigin origin = GateOrigin::kDecoupling);

    bool operator==(const GateOp &) const = default;
};

/// Ordered gate list over `num_qubits` qubits.
struct Circuit {
    int num_qubits = 0;
    std::vector<GateOp> ops;

    /// Throws InputError if any op references an invalid qubit or carries an
    /// angle on a non-rotation kind.
    void validate() const;
    std::size_t count(GateKind kind) const;

    bool operator==(const Circuit &) const = default;
};

/// Human-readable one-op-per-line listing (debugging and CLI output).
std::string to_text(const Circuit &circuit);

}  // namespace qaoa

#endif
