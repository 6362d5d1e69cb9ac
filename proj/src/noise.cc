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

#include "qaoa/noise.h"

#include <algorithm>
#include <cmath>

#include "qaoa/error.h"
#include "qaoa/rng.h"

namespace qaoa {

DdSequence parse_dd_sequence(std::string_view name) {
    if (name == "XpXm") {
        return DdSequence::kXpXm;
    }
    if (name == "XY4") {
        return DdSequence::kXY4;
    }
    throw InputError("unknown dynamical decoupling sequence '" + std::string(name) + "' (expected XpXm or XY4)");
}

std::string_view dd_sequence_name(DdSequence sequence) {
    return sequence == DdSequence::kXpXm ? "XpXm" : "XY4";
}

SchedulePolicy parse_schedule_policy(std::string_view name) {
    if (name == "asap") {
        return SchedulePolicy::kAsap;
    }
    if (name == "alap") {
        return SchedulePolicy::kAlap;
    }
    throw InputError("unknown scheduling policy '" + std::string(name) + "' (expected asap or alap)");
}

std::string_view schedule_policy_name(SchedulePolicy policy) {
    return policy == SchedulePolicy::kAsap ? "asap" : "alap";
}

void NoiseConfig::validate() const {
    auto check_prob = [](double p, const char *field) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw InputError(std::string("noise.") + field + " must lie in [0, 1]");
        }
    };
    check_prob(p1q, "p1q");
    check_prob(p2q, "p2q");
    check_prob(p_readout, "p_readout");
    if (!(epsilon_coherent >= 0.0) || !std::isfinite(epsilon_coherent)) {
        throw InputError("noise.epsilon_coherent must be a finite non-negative angle");
    }
    if (!(sigma_dephase >= 0.0) || !std::isfinite(sigma_dephase)) {
        throw InputError("noise.sigma_dephase must be finite and non-negative");
    }
}

bool NoiseConfig::shot_invariant_circuit() const {
    return !twirling && p1q == 0.0 && p2q == 0.0 && sigma_dephase == 0.0;
}

NoiseConfig NoiseConfig::preset(std::string_view name) {
    NoiseConfig config;
    if (name == "none") {
        return config;
    }
    if (name == "ibm-bounds") {
        // Worst-case superconducting error budgets: 1q 0.5%, 2q 2.5%, readout 5%.
        config.p1q = 0.005;
        config.p2q = 0.025;
        config.p_readout = 0.05;
        return config;
    }
    if (name == "coherent-only") {
        config.epsilon_coherent = 0.05;
        return config;
    }
    if (name == "dephase-only") {
        config.sigma_dephase = 0.1;
        return config;
    }
    throw InputError("unknown noise preset '" + std::string(name) + "'");
}

std::vector<std::string> NoiseConfig::preset_names() {
    return {"none", "ibm-bounds", "coherent-only", "dephase-only"};
}

double Timeline::busy_time(int qubit) const {
    double total = 0.0;
    for (const auto &iv : lanes.at(static_cast<std::size_t>(qubit))) {
        if (iv.busy) {
            total += iv.duration;
        }
    }
    return total;
}

double Timeline::idle_time(int qubit) const {
    double total = 0.0;
    for (const auto &iv : lanes.at(static_cast<std::size_t>(qubit))) {
        if (!iv.busy) {
            total += iv.duration;
        }
    }
    return total;
}

namespace {

Timeline schedule_asap(const Circuit &circuit) {
    const auto n = static_cast<std::size_t>(circuit.num_qubits);
    Timeline tl;
    tl.num_qubits = circuit.num_qubits;
    tl.lanes.assign(n, {});
    std::vector<double> ready(n, 0.0);
    for (std::size_t i = 0; i < circuit.ops.size(); ++i) {
        const auto &op = circuit.ops[i];
        if (!op.duration) {
            throw InputError("op " + std::to_string(i) + " (" + std::string(gate_name(op.kind)) +
                             ") has no duration; cannot schedule");
        }
        double start = 0.0;
        for (int k = 0; k < op.arity(); ++k) {
            start = std::max(start, ready[static_cast<std::size_t>(op.qubits[static_cast<std::size_t>(k)])]);
        }
        for (int k = 0; k < op.arity(); ++k) {
            auto q = static_cast<std::size_t>(op.qubits[static_cast<std::size_t>(k)]);
            if (start > ready[q]) {
                tl.lanes[q].push_back({ready[q], start - ready[q], false, std::nullopt});
            }
            tl.lanes[q].push_back({start, *op.duration, op.kind != GateKind::kDelay, i});
            ready[q] = start + *op.duration;
        }
    }
    tl.makespan = n == 0 ? 0.0 : *std::max_element(ready.begin(), ready.end());
    for (std::size_t q = 0; q < n; ++q) {
        if (tl.makespan > ready[q]) {
            tl.lanes[q].push_back({ready[q], tl.makespan - ready[q], false, std::nullopt});
        }
    }
    return tl;
}

}  // namespace

Timeline schedule_circuit(const Circuit &circuit, SchedulePolicy policy) {
    circuit.validate();
    if (policy == SchedulePolicy::kAsap) {
        return schedule_asap(circuit);
    }
    Circuit reversed{circuit.num_qubits, {circuit.ops.rbegin(), circuit.ops.rend()}};
    Timeline tl = schedule_asap(reversed);
    const std::size_t last = circuit.ops.size() - 1;
    for (auto &lane : tl.lanes) {
        std::reverse(lane.begin(), lane.end());
        for (auto &iv : lane) {
            iv.start = tl.makespan - iv.end();
            if (iv.op) {
                iv.op = last - *iv.op;
            }
        }
    }
    return tl;
}

namespace {

enum Pauli : std::uint32_t { kI = 0, kPX = 1, kPY = 2, kPZ = 3 };

// Symplectic (x, z) bits of a Pauli label.
constexpr bool x_bit(std::uint32_t p) {
    return p == kPX || p == kPY;
}
constexpr bool z_bit(std::uint32_t p) {
    return p == kPZ || p == kPY;
}
constexpr std::uint32_t from_bits(bool x, bool z) {
    return x ? (z ? kPY : kPX) : (z ? kPZ : kI);
}

void emit_pauli(std::vector<GateOp> &out, std::uint32_t pauli, int q, std::optional<double> duration,
                GateOrigin origin) {
    static constexpr GateKind kinds[] = {GateKind::kX, GateKind::kX, GateKind::kY, GateKind::kZ};
    if (pauli != kI) {
        out.push_back(GateOp::single(kinds[pauli], q, duration, origin));
    }
}

}  // namespace

Circuit twirl_circuit(const Circuit &circuit, std::uint64_t seed) {
    CounterRng rng(seed, StreamTag::kTwirl, 0);
    Circuit out{circuit.num_qubits, {}};
    out.ops.reserve(circuit.ops.size() * 3);
    for (const auto &op : circuit.ops) {
        if (op.kind != GateKind::kCNOT) {
            out.ops.push_back(op);
            continue;
        }
        const std::uint32_t draw = rng.below(16);
        const std::uint32_t pre_c = draw / 4;
        const std::uint32_t pre_t = draw % 4;
        // Conjugation by CNOT: X_c -> X_c X_t, Z_t -> Z_c Z_t.
        const std::uint32_t post_c = from_bits(x_bit(pre_c), z_bit(pre_c) != z_bit(pre_t));
        const std::uint32_t post_t = from_bits(x_bit(pre_t) != x_bit(pre_c), z_bit(pre_t));
        // Twirl Paulis are merged into neighbouring single-qubit layers on
        // hardware, so they take no time of their own.
        emit_pauli(out.ops, pre_c, op.qubits[0], 0.0, GateOrigin::kTwirl);
        emit_pauli(out.ops, pre_t, op.qubits[1], 0.0, GateOrigin::kTwirl);
        out.ops.push_back(op);
        emit_pauli(out.ops, post_c, op.qubits[0], 0.0, GateOrigin::kTwirl);
        emit_pauli(out.ops, post_t, op.qubits[1], 0.0, GateOrigin::kTwirl);
    }
    return out;
}

namespace {

// Ops to splice in, keyed by the op they follow; `leading` precedes op 0.
struct Splices {
    std::vector<GateOp> leading;
    std::vector<std::vector<GateOp>> after;

    explicit Splices(std::size_t num_ops) : after(num_ops) {
    }

    std::vector<GateOp> &at(std::optional<std::size_t> anchor) {
        return anchor ? after[*anchor] : leading;
    }
};

// Op index of the last interval before `pos` in the lane that is tied to an op.
std::optional<std::size_t> preceding_op(const std::vector<Interval> &lane, std::size_t pos) {
    for (std::size_t k = pos; k-- > 0;) {
        if (lane[k].op) {
            return lane[k].op;
        }
    }
    return std::nullopt;
}

}  // namespace

Circuit insert_dd(const Circuit &circuit, const Timeline &timeline, DdSequence sequence, double pulse_duration) {
    if (timeline.num_qubits != circuit.num_qubits) {
        throw InputError("timeline does not match circuit qubit count");
    }
    if (!(pulse_duration > 0.0)) {
        throw InputError("pulse duration must be positive");
    }
    const std::vector<GateKind> pulses = sequence == DdSequence::kXpXm
                                             ? std::vector<GateKind>{GateKind::kX, GateKind::kX}
                                             : std::vector<GateKind>{GateKind::kX, GateKind::kY, GateKind::kX,
                                                                     GateKind::kY};
    const auto k = static_cast<double>(pulses.size());
    Splices splices(circuit.ops.size());
    for (int q = 0; q < timeline.num_qubits; ++q) {
        const auto &lane = timeline.lanes[static_cast<std::size_t>(q)];
        for (std::size_t pos = 0; pos < lane.size(); ++pos) {
            const auto &gap = lane[pos];
            if (gap.busy || gap.op || gap.duration < k * pulse_duration) {
                continue;
            }
            const double tau = gap.duration - k * pulse_duration;
            auto &dst = splices.at(preceding_op(lane, pos));
            auto delay = [&](double d) {
                if (d > 0.0) {
                    dst.push_back(GateOp::delay(q, d));
                }
            };
            delay(tau / (2.0 * k));
            for (std::size_t j = 0; j < pulses.size(); ++j) {
                dst.push_back(GateOp::single(pulses[j], q, pulse_duration, GateOrigin::kDecoupling));
                delay(j + 1 < pulses.size() ? tau / k : tau / (2.0 * k));
            }
        }
    }
    Circuit out{circuit.num_qubits, {}};
    out.ops.insert(out.ops.end(), splices.leading.begin(), splices.leading.end());
    for (std::size_t i = 0; i < circuit.ops.size(); ++i) {
        out.ops.push_back(circuit.ops[i]);
        out.ops.insert(out.ops.end(), splices.after[i].begin(), splices.after[i].end());
    }
    return out;
}

Circuit insert_dd(const Circuit &circuit, const Timeline &timeline, std::string_view sequence,
                  double pulse_duration) {
    return insert_dd(circuit, timeline, parse_dd_sequence(sequence), pulse_duration);
}

Circuit apply_trajectory_noise(const Circuit &circuit, const NoiseConfig &config, std::uint64_t shot_index,
                               std::uint64_t seed) {
    config.validate();
    const bool gate_noise = config.p1q > 0.0 || config.p2q > 0.0 || config.epsilon_coherent > 0.0;
    const bool dephasing = config.sigma_dephase > 0.0;
    if (!gate_noise && !dephasing) {
        return circuit;
    }

    Splices idle_phases(circuit.ops.size());
    if (dephasing) {
        Timeline tl = schedule_circuit(circuit, config.schedule);
        CounterRng drift_rng(seed, StreamTag::kDephase, shot_index);
        for (int q = 0; q < circuit.num_qubits; ++q) {
            // Quasi-static: one drift rate per (shot, qubit).
            const double rate = config.sigma_dephase * drift_rng.normal();
            const auto &lane = tl.lanes[static_cast<std::size_t>(q)];
            for (std::size_t pos = 0; pos < lane.size(); ++pos) {
                const auto &iv = lane[pos];
                if (iv.busy || iv.duration <= 0.0) {
                    continue;
                }
                auto anchor = iv.op ? iv.op : preceding_op(lane, pos);
                idle_phases.at(anchor).push_back(
                    GateOp::rotation(GateKind::kRZ, q, 2.0 * rate * iv.duration, 0.0, GateOrigin::kNoise));
            }
        }
    }

    CounterRng rng(seed, StreamTag::kGateNoise, shot_index);
    Circuit out{circuit.num_qubits, {}};
    out.ops.reserve(circuit.ops.size() * 2);
    out.ops.insert(out.ops.end(), idle_phases.leading.begin(), idle_phases.leading.end());
    for (std::size_t i = 0; i < circuit.ops.size(); ++i) {
        const auto &op = circuit.ops[i];
        out.ops.push_back(op);
        const bool noisy_gate = op.kind != GateKind::kDelay &&
                                (op.origin == GateOrigin::kProgram || op.origin == GateOrigin::kDecoupling);
        if (noisy_gate && op.arity() == 1 && config.p1q > 0.0 && rng.bernoulli(config.p1q)) {
            emit_pauli(out.ops, 1 + rng.below(3), op.qubits[0], 0.0, GateOrigin::kNoise);
        }
        if (noisy_gate && op.kind == GateKind::kCNOT) {
            if (config.epsilon_coherent > 0.0) {
                // exp(-i eps Z_c Z_t) up to global phase.
                out.ops.push_back(GateOp::cnot(op.qubits[0], op.qubits[1], 0.0, GateOrigin::kNoise));
                out.ops.push_back(
                    GateOp::rotation(GateKind::kRZ, op.qubits[1], 2.0 * config.epsilon_coherent, 0.0, GateOrigin::kNoise));
                out.ops.push_back(GateOp::cnot(op.qubits[0], op.qubits[1], 0.0, GateOrigin::kNoise));
            }
            if (config.p2q > 0.0 && rng.bernoulli(config.p2q)) {
                const std::uint32_t pair = 1 + rng.below(15);
                emit_pauli(out.ops, pair / 4, op.qubits[0], 0.0, GateOrigin::kNoise);
                emit_pauli(out.ops, pair % 4, op.qubits[1], 0.0, GateOrigin::kNoise);
            }
        }
        const auto &phases = idle_phases.after[i];
        out.ops.insert(out.ops.end(), phases.begin(), phases.end());
    }
    return out;
}

std::string apply_readout_error(std::string bits, double p_readout, std::uint64_t shot_index, std::uint64_t seed) {
    if (!(p_readout >= 0.0 && p_readout <= 1.0)) {
        throw InputError("p_readout must lie in [0, 1]");
    }
    if (p_readout == 0.0) {
        return bits;
    }
    CounterRng rng(seed, StreamTag::kReadout, shot_index);
    for (auto &c : bits) {
        if (rng.bernoulli(p_readout)) {
            c = c == '0' ? '1' : '0';
        }
    }
    return bits;
}

Circuit prepare_shot_circuit(const Circuit &circuit, const NoiseConfig &config, std::uint64_t shot_index,
                             std::uint64_t seed) {
    Circuit shot = config.twirling
                       ? twirl_circuit(circuit, CounterRng(seed, StreamTag::kTwirl, shot_index).next_u64())
                       : circuit;
    if (config.dd) {
        shot = insert_dd(shot, schedule_circuit(shot, config.schedule), *config.dd);
    }
    return apply_trajectory_noise(shot, config, shot_index, seed);
}

}  // namespace qaoa
