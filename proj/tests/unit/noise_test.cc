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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "dense_oracle.h"
#include "qaoa/ansatz.h"
#include "qaoa/error.h"
#include "qaoa/rng.h"
#include "qaoa/statevec.h"

namespace qaoa {
namespace {

// |<a|b>| = 1 for states equal up to global phase.
double overlap(const StateVector &a, const StateVector &b) {
    std::complex<double> s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    }
    return std::abs(s);
}

Circuit reference_circuit() {
    return build_qaoa_circuit(canonical_instance(), QaoaParams::paper_p5());
}

TEST(NoiseConfig, Presets) {
    EXPECT_EQ(NoiseConfig::preset("none"), NoiseConfig{});
    const auto ibm = NoiseConfig::preset("ibm-bounds");
    EXPECT_DOUBLE_EQ(ibm.p1q, 0.005);
    EXPECT_DOUBLE_EQ(ibm.p2q, 0.025);
    EXPECT_DOUBLE_EQ(ibm.p_readout, 0.05);
    EXPECT_DOUBLE_EQ(NoiseConfig::preset("coherent-only").epsilon_coherent, 0.05);
    EXPECT_DOUBLE_EQ(NoiseConfig::preset("dephase-only").sigma_dephase, 0.1);
    EXPECT_THROW(NoiseConfig::preset("loud"), InputError);
    EXPECT_EQ(NoiseConfig::preset_names().size(), 4u);
}

TEST(NoiseConfig, Validation) {
    NoiseConfig c;
    c.p1q = 1.5;
    EXPECT_THROW(c.validate(), InputError);
    c = {};
    c.sigma_dephase = -0.1;
    EXPECT_THROW(c.validate(), InputError);
    EXPECT_THROW(parse_dd_sequence("XX"), InputError);
    EXPECT_EQ(parse_dd_sequence("XpXm"), DdSequence::kXpXm);
    EXPECT_EQ(parse_schedule_policy("asap"), SchedulePolicy::kAsap);
}

TEST(Schedule, AsapAndAlapShareMakespan) {
    const MaxCutInstance g(3, {{0, 1, 1.0}});
    const auto c = build_qaoa_circuit(g, {{0.2}, {0.3}});
    const auto asap = schedule_circuit(c, SchedulePolicy::kAsap);
    const auto alap = schedule_circuit(c, SchedulePolicy::kAlap);
    // H(1) + CNOT(4) + RZ(1) + CNOT(4) + RX(1).
    EXPECT_DOUBLE_EQ(asap.makespan, 11.0);
    EXPECT_DOUBLE_EQ(alap.makespan, 11.0);
    // Qubit 2 only sees H and RX: busy 2, idle 9 in both policies.
    EXPECT_DOUBLE_EQ(asap.busy_time(2), 2.0);
    EXPECT_DOUBLE_EQ(asap.idle_time(2), 9.0);
    EXPECT_DOUBLE_EQ(alap.idle_time(2), 9.0);
    // ASAP: H at 0, then idle; ALAP: idle first, H right before RX.
    EXPECT_TRUE(asap.lanes[2].front().busy);
    EXPECT_FALSE(alap.lanes[2].front().busy);
    EXPECT_DOUBLE_EQ(alap.lanes[2][1].start, 9.0);
}

TEST(Schedule, LanesCoverMakespan) {
    const auto c = reference_circuit();
    for (auto policy : {SchedulePolicy::kAsap, SchedulePolicy::kAlap}) {
        const auto tl = schedule_circuit(c, policy);
        for (int q = 0; q < 5; ++q) {
            double t = 0.0;
            for (const auto &iv : tl.lanes[static_cast<std::size_t>(q)]) {
                EXPECT_NEAR(iv.start, t, 1e-9);
                t = iv.end();
            }
            EXPECT_NEAR(t, tl.makespan, 1e-9);
            EXPECT_NEAR(tl.busy_time(q) + tl.idle_time(q), tl.makespan, 1e-9);
        }
    }
}

TEST(Schedule, MissingDurationRejected) {
    Circuit c{1, {GateOp::single(GateKind::kH, 0)}};
    EXPECT_THROW(schedule_circuit(c, SchedulePolicy::kAsap), InputError);
}

TEST(Twirl, PreservesIdealUnitary) {
    const auto c = reference_circuit();
    const auto ideal = run_exact(c);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto t = twirl_circuit(c, seed);
        EXPECT_NEAR(overlap(ideal, run_exact(t)), 1.0, 1e-12);
        for (const auto &op : t.ops) {
            if (op.origin == GateOrigin::kTwirl) {
                EXPECT_DOUBLE_EQ(op.duration.value(), 0.0);
            }
        }
    }
}

// Every one of the 16 Pauli frames around a bare CNOT is exact.
TEST(Twirl, AllFramesExact) {
    Circuit c{2, {GateOp::cnot(0, 1, 4.0)}};
    const Eigen::MatrixXcd ideal = testing_oracle::dense_unitary(c);
    std::set<std::size_t> sizes;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto t = twirl_circuit(c, seed);
        sizes.insert(t.ops.size());
        const Eigen::MatrixXcd u = testing_oracle::dense_unitary(t);
        // u = e^{i phi} ideal.
        const std::complex<double> phase = (ideal.adjoint() * u).trace() / 4.0;
        EXPECT_NEAR(std::abs(phase), 1.0, 1e-12);
        EXPECT_NEAR((u - phase * ideal).norm(), 0.0, 1e-12);
    }
    EXPECT_GT(sizes.size(), 2u);
}

TEST(Twirl, Deterministic) {
    const auto c = reference_circuit();
    EXPECT_EQ(twirl_circuit(c, 5), twirl_circuit(c, 5));
    EXPECT_NE(twirl_circuit(c, 5), twirl_circuit(c, 6));
}

TEST(Dd, PreservesIdealUnitary) {
    const auto c = reference_circuit();
    const auto ideal = run_exact(c);
    for (auto seq : {DdSequence::kXpXm, DdSequence::kXY4}) {
        for (auto policy : {SchedulePolicy::kAsap, SchedulePolicy::kAlap}) {
            const auto dd = insert_dd(c, schedule_circuit(c, policy), seq);
            EXPECT_GT(dd.ops.size(), c.ops.size());
            EXPECT_NEAR(overlap(ideal, run_exact(dd)), 1.0, 1e-12);
        }
    }
}

TEST(Dd, PulsesSymmetricInGap) {
    // Qubit 1 idles for 10 units while qubit 0 runs a long delay-free gate
    // sequence.
    Circuit c{2, {}};
    c.ops.push_back(GateOp::single(GateKind::kH, 1, 1.0));
    for (int k = 0; k < 10; ++k) {
        c.ops.push_back(GateOp::single(GateKind::kX, 0, 1.0));
    }
    c.ops.push_back(GateOp::cnot(0, 1, 4.0));
    const auto tl = schedule_circuit(c, SchedulePolicy::kAsap);
    const auto dd = insert_dd(c, tl, DdSequence::kXpXm, 1.0);
    const auto dd_tl = schedule_circuit(dd, SchedulePolicy::kAsap);
    EXPECT_DOUBLE_EQ(dd_tl.makespan, tl.makespan);
    std::vector<double> pulse_starts;
    for (const auto &iv : dd_tl.lanes[1]) {
        if (iv.busy && iv.op && dd.ops[*iv.op].origin == GateOrigin::kDecoupling) {
            pulse_starts.push_back(iv.start);
        }
    }
    // Gap [1, 10), tau = 9 - 2 = 7: X at 1 + 7/4, X at 1 + 7/4 + 1 + 7/2.
    ASSERT_EQ(pulse_starts.size(), 2u);
    EXPECT_DOUBLE_EQ(pulse_starts[0], 1.0 + 1.75);
    EXPECT_DOUBLE_EQ(pulse_starts[1], 1.0 + 1.75 + 1.0 + 3.5);
}

TEST(Dd, ShortGapsUntouched) {
    Circuit c{2, {GateOp::single(GateKind::kH, 0, 1.0), GateOp::single(GateKind::kH, 0, 1.0),
                  GateOp::cnot(0, 1, 4.0)}};
    const auto dd = insert_dd(c, schedule_circuit(c, SchedulePolicy::kAsap), DdSequence::kXpXm, 1.0);
    EXPECT_EQ(dd.ops.size(), c.ops.size() + 2);  // gap of 2 fits exactly two pulses
    const auto xy4 = insert_dd(c, schedule_circuit(c, SchedulePolicy::kAsap), DdSequence::kXY4, 1.0);
    EXPECT_EQ(xy4.ops.size(), c.ops.size());
}

TEST(Trajectory, ZeroNoiseIsIdentityPass) {
    const auto c = reference_circuit();
    EXPECT_EQ(apply_trajectory_noise(c, NoiseConfig{}, 3, 4), c);
}

TEST(Trajectory, CoherentErrorIsZzRotation) {
    Circuit c{2, {GateOp::cnot(0, 1, 4.0)}};
    NoiseConfig noise;
    noise.epsilon_coherent = 0.2;
    const auto noisy = apply_trajectory_noise(c, noise, 0, 0);
    const Eigen::MatrixXcd u = testing_oracle::dense_unitary(noisy);
    const Eigen::MatrixXcd cnot = testing_oracle::dense_unitary(c);
    // Expected: exp(-i eps Z Z) * CNOT, up to global phase.
    Eigen::MatrixXcd zz = Eigen::MatrixXcd::Zero(4, 4);
    const double signs[] = {1, -1, -1, 1};
    for (int i = 0; i < 4; ++i) {
        zz(i, i) = std::polar(1.0, -0.2 * signs[i]);
    }
    const Eigen::MatrixXcd expected = zz * cnot;
    const std::complex<double> phase = (expected.adjoint() * u).trace() / 4.0;
    EXPECT_NEAR((u - phase * expected).norm(), 0.0, 1e-12);
}

TEST(Trajectory, PauliRatesMatch) {
    Circuit c{1, {}};
    for (int k = 0; k < 200; ++k) {
        c.ops.push_back(GateOp::single(GateKind::kH, 0, 1.0));
    }
    NoiseConfig noise;
    noise.p1q = 0.1;
    std::size_t errors = 0;
    for (std::uint64_t shot = 0; shot < 100; ++shot) {
        errors += apply_trajectory_noise(c, noise, shot, 1).ops.size() - c.ops.size();
    }
    // 20000 Bernoulli(0.1) draws.
    EXPECT_NEAR(static_cast<double>(errors), 2000.0, 4.0 * std::sqrt(20000 * 0.1 * 0.9));
}

TEST(Trajectory, DephasingPhaseScalesWithIdleTime) {
    // One qubit idles while the other runs 6 units of gates.
    Circuit c{2, {GateOp::single(GateKind::kH, 1, 1.0)}};
    for (int k = 0; k < 6; ++k) {
        c.ops.push_back(GateOp::single(GateKind::kZ, 0, 1.0));
    }
    c.ops.push_back(GateOp::cnot(0, 1, 4.0));
    NoiseConfig noise;
    noise.sigma_dephase = 0.3;
    noise.schedule = SchedulePolicy::kAsap;
    const auto noisy = apply_trajectory_noise(c, noise, 0, 9);
    double total_angle = 0.0;
    int phases = 0;
    for (const auto &op : noisy.ops) {
        if (op.origin == GateOrigin::kNoise && op.qubits[0] == 1) {
            total_angle += op.angle;
            ++phases;
        }
    }
    EXPECT_EQ(phases, 1);
    // Same draw as the implementation: one normal per (shot, qubit), qubits in order.
    CounterRng rng(9, StreamTag::kDephase, 0);
    rng.normal();
    const double rate = 0.3 * rng.normal();
    EXPECT_NEAR(total_angle, 2.0 * rate * 5.0, 1e-12);
}

TEST(Trajectory, TwirlAndNoiseGatesGetNoNoise) {
    Circuit c{1, {GateOp::single(GateKind::kX, 0, 0.0, GateOrigin::kTwirl),
                  GateOp::single(GateKind::kX, 0, 0.0, GateOrigin::kNoise)}};
    NoiseConfig noise;
    noise.p1q = 1.0;
    EXPECT_EQ(apply_trajectory_noise(c, noise, 0, 0), c);
}

TEST(Readout, FlipRate) {
    std::size_t flips = 0;
    for (std::uint64_t shot = 0; shot < 4000; ++shot) {
        const auto out = apply_readout_error("00000", 0.05, shot, 2);
        flips += static_cast<std::size_t>(std::count(out.begin(), out.end(), '1'));
    }
    EXPECT_NEAR(static_cast<double>(flips), 1000.0, 4.0 * std::sqrt(20000 * 0.05 * 0.95));
    EXPECT_EQ(apply_readout_error("0101", 0.0, 1, 1), "0101");
    EXPECT_EQ(apply_readout_error("0101", 1.0, 1, 1), "1010");
}

TEST(Mitigation, NeutralWithoutNoise) {
    const auto c = reference_circuit();
    const auto ideal = run_exact(c).probabilities();
    NoiseConfig m;
    m.twirling = true;
    m.dd = DdSequence::kXpXm;
    for (std::uint64_t shot = 0; shot < 10; ++shot) {
        const auto probs = run_exact(prepare_shot_circuit(c, m, shot, 17)).probabilities();
        for (std::size_t i = 0; i < probs.size(); ++i) {
            ASSERT_NEAR(probs[i], ideal[i], 1e-9);
        }
    }
}

TEST(Mitigation, ShotInvariance) {
    NoiseConfig c;
    EXPECT_TRUE(c.shot_invariant_circuit());
    c.p_readout = 0.1;
    c.epsilon_coherent = 0.1;
    c.dd = DdSequence::kXpXm;
    EXPECT_TRUE(c.shot_invariant_circuit());
    c.twirling = true;
    EXPECT_FALSE(c.shot_invariant_circuit());
}

}  // namespace
}  // namespace qaoa
