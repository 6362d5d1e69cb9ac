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

#ifndef QAOA_NOISE_H
#define QAOA_NOISE_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qaoa/circuit.h"

namespace qaoa {

enum class DdSequence { kXpXm, kXY4 };
enum class SchedulePolicy { kAsap, kAlap };

/// Throws InputError for anything but "XpXm" / "XY4".
DdSequence parse_dd_sequence(std::string_view name);
std::string_view dd_sequence_name(DdSequence sequence);
SchedulePolicy parse_schedule_policy(std::string_view name);
std::string_view schedule_policy_name(SchedulePolicy policy);

/// Error-channel parameters plus mitigation switches. All rates default to
/// zero (noiseless).
struct NoiseConfig {
    /// Random X/Y/Z after each single-qubit gate.
    double p1q = 0.0;
    /// Random non-identity two-qubit Pauli after each CNOT.
    double p2q = 0.0;
    /// Independent per-bit measurement flip.
    double p_readout = 0.0;
    /// Systematic ZZ over-rotation (radians) appended to every CNOT.
    double epsilon_coherent = 0.0;
    /// Std-dev of the per-shot quasi-static Z drift rate (radians per time unit).
    double sigma_dephase = 0.0;

    bool twirling = false;
    std::optional<DdSequence> dd;
    SchedulePolicy schedule = SchedulePolicy::kAlap;

    /// Throws InputError naming the offending field.
    void validate() const;
    /// True when every shot runs the same circuit (no twirling, no
    /// stochastic gate or idle noise); readout noise may still be present.
    bool shot_invariant_circuit() const;

    /// "none", "ibm-bounds", "coherent-only", "dephase-only".
    static NoiseConfig preset(std::string_view name);
    static std::vector<std::string> preset_names();

    bool operator==(const NoiseConfig &) const = default;
};

struct Interval {
    double start = 0.0;
    double duration = 0.0;
    bool busy = false;
    /// Op index occupying the interval. Unset for gaps; DELAY ops yield idle
    /// intervals that do carry their op index.
    std::optional<std::size_t> op;

    double end() const {
        return start + duration;
    }
};

/// Per-qubit contiguous interval cover of [0, makespan).
struct Timeline {
    int num_qubits = 0;
    double makespan = 0.0;
    std::vector<std::vector<Interval>> lanes;

    double busy_time(int qubit) const;
    double idle_time(int qubit) const;
};

/// Greedy list scheduling in op order. ALAP is ASAP of the reversed circuit,
/// mirrored, so both policies share a makespan. Throws InputError if an op
/// lacks a duration.
Timeline schedule_circuit(const Circuit &circuit, SchedulePolicy policy);

/// Wraps each CNOT in a uniformly random Pauli pair and the compensating
/// pair that keeps the ideal unitary unchanged (up to global phase).
Circuit twirl_circuit(const Circuit &circuit, std::uint64_t seed);

/// Fills every gap of at least `pulses * pulse_duration` with the sequence,
/// using delays so the pulses sit symmetrically in the gap (spacing
/// tau/2k, tau/k, ..., tau/k, tau/2k). Shorter gaps are left untouched.
Circuit insert_dd(const Circuit &circuit, const Timeline &timeline, DdSequence sequence, double pulse_duration = 1.0);
Circuit insert_dd(const Circuit &circuit, const Timeline &timeline, std::string_view sequence,
                  double pulse_duration = 1.0);

/// The concrete circuit executed by one shot: gate Paulis, coherent ZZ
/// over-rotation after CNOTs, and quasi-static idle dephasing.
Circuit apply_trajectory_noise(const Circuit &circuit, const NoiseConfig &config, std::uint64_t shot_index,
                               std::uint64_t seed);

std::string apply_readout_error(std::string bits, double p_readout, std::uint64_t shot_index, std::uint64_t seed);

/// Full per-shot pipeline: twirl (if enabled), DD insertion (if enabled),
/// then trajectory noise.
Circuit prepare_shot_circuit(const Circuit &circuit, const NoiseConfig &config, std::uint64_t shot_index,
                             std::uint64_t seed);

}  // namespace qaoa

#endif
