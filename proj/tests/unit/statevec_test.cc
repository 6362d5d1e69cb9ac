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

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "qaoa/error.h"
#include "qaoa/rng.h"
#include "dense_oracle.h"

namespace qaoa {
namespace {

using cplx = std::complex<double>;

void expect_state_near(const StateVector &s, const Eigen::VectorXcd &v, double tol) {
    ASSERT_EQ(s.size(), static_cast<std::size_t>(v.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_NEAR(std::abs(s.amplitudes()[i] - v[static_cast<Eigen::Index>(i)]), 0.0, tol) << "index " << i;
    }
}

TEST(StateVector, StartsInZero) {
    StateVector s(3);
    EXPECT_EQ(s.size(), 8u);
    EXPECT_EQ(s.amplitudes()[0], cplx(1.0, 0.0));
    EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
}

TEST(StateVector, FromBitstringUsesLeftmostAsQubitZero) {
    const auto s = StateVector::from_bitstring("100");
    EXPECT_EQ(s.amplitudes()[4], cplx(1.0, 0.0));
    EXPECT_EQ(s.amplitude("100"), cplx(1.0, 0.0));
}

TEST(StateVector, XFlipsNamedQubit) {
    StateVector s(3);
    s.apply(GateOp::single(GateKind::kX, 0));
    EXPECT_EQ(s.amplitude("100"), cplx(1.0, 0.0));
    s.apply(GateOp::cnot(0, 2));
    EXPECT_EQ(s.amplitude("101"), cplx(1.0, 0.0));
}

TEST(StateVector, RotationConventions) {
    const double theta = 0.83;
    StateVector z = StateVector::from_bitstring("1");
    z.apply(GateOp::rotation(GateKind::kRZ, 0, theta));
    EXPECT_NEAR(std::abs(z.amplitudes()[1] - std::polar(1.0, theta / 2)), 0.0, 1e-15);
    StateVector x(1);
    x.apply(GateOp::rotation(GateKind::kRX, 0, theta));
    EXPECT_NEAR(std::abs(x.amplitudes()[0] - cplx(std::cos(theta / 2), 0.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(x.amplitudes()[1] - cplx(0.0, -std::sin(theta / 2))), 0.0, 1e-15);
}

TEST(StateVector, DelayIsIdentity) {
    StateVector s(2);
    s.apply(GateOp::single(GateKind::kH, 0));
    const auto before = s;
    s.apply(GateOp::delay(1, 3.0));
    for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_EQ(s.amplitudes()[i], before.amplitudes()[i]);
    }
}

TEST(StateVector, MatchesDenseOracleOnRandomCircuits) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const int n = 1 + static_cast<int>(seed % 5);
        const auto circuit = testing_oracle::random_circuit(n, 60, seed);
        StateVector s(n);
        s.apply(circuit);
        const Eigen::MatrixXcd u = testing_oracle::dense_unitary(circuit);
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(Eigen::Index{1} << n);
        v[0] = 1.0;
        expect_state_near(s, u * v, 1e-10);
    }
}

TEST(StateVector, NormPreserved) {
    const auto circuit = testing_oracle::random_circuit(6, 500, 77);
    StateVector s(6);
    for (const auto &op : circuit.ops) {
        s.apply(op);
        ASSERT_NEAR(s.norm_squared(), 1.0, 1e-10);
    }
}

TEST(StateVector, Involutions) {
    StateVector s(4);
    s.apply(testing_oracle::random_circuit(4, 40, 5));
    for (const auto &gate : {GateOp::single(GateKind::kH, 0), GateOp::single(GateKind::kX, 1),
                             GateOp::single(GateKind::kY, 2), GateOp::single(GateKind::kZ, 3), GateOp::cnot(3, 1),
                             GateOp::cnot(0, 2)}) {
        StateVector t = apply_gate(apply_gate(s, gate), gate);
        for (std::size_t i = 0; i < s.size(); ++i) {
            ASSERT_NEAR(std::abs(t.amplitudes()[i] - s.amplitudes()[i]), 0.0, 1e-12) << gate_name(gate.kind);
        }
    }
}

TEST(StateVector, RejectsBadInput) {
    EXPECT_THROW(StateVector(0), InputError);
    EXPECT_THROW(StateVector(kMaxQubits + 1), CapacityError);
    StateVector s(2);
    EXPECT_THROW(s.apply(GateOp::single(GateKind::kH, 2)), InputError);
    EXPECT_THROW(s.apply(GateOp::cnot(1, 1)), InputError);
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), InputError);
}

TEST(Expectation, UniformSuperposition) {
    const auto g = canonical_instance();
    StateVector s(5);
    for (int q = 0; q < 5; ++q) {
        s.apply(GateOp::single(GateKind::kH, q));
    }
    EXPECT_NEAR(expectation_cut(s, g), 3.0, 1e-12);
    EXPECT_DOUBLE_EQ(expectation_cut(StateVector::from_bitstring("00011"), g), 6.0);
}

TEST(Sampling, DeterministicAndThreadIndependent) {
    StateVector s(4);
    s.apply(testing_oracle::random_circuit(4, 30, 3));
    const auto a = sample_counts(s, 5000, 123, 1);
    const auto b = sample_counts(s, 5000, 123, 4);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.total(), 5000u);
    EXPECT_NE(a, sample_counts(s, 5000, 124, 1));
}

TEST(Sampling, PointMassAlwaysHit) {
    const auto counts = sample_counts(StateVector::from_bitstring("0110"), 1000, 9);
    EXPECT_EQ(counts.at("0110"), 1000u);
}

TEST(Sampling, FrequenciesWithinFourSigma) {
    StateVector s(3);
    s.apply(testing_oracle::random_circuit(3, 25, 8));
    const auto probs = s.probabilities();
    constexpr std::uint64_t kShots = 100000;
    const auto counts = sample_counts(s, kShots, 2);
    for (std::uint64_t i = 0; i < probs.size(); ++i) {
        const double sigma = std::sqrt(kShots * probs[i] * (1 - probs[i]));
        EXPECT_LE(std::abs(static_cast<double>(counts.at(bitstring_of(i, 3))) - kShots * probs[i]), 4 * sigma + 1e-9);
    }
}

TEST(Sampling, ZeroShotsRejected) {
    EXPECT_THROW(sample_counts(StateVector(2), 0, 1), InputError);
}

TEST(Counts, AddAndValidate) {
    Counts c(3);
    c.add("010", 4);
    c.add("010");
    c.add("111", 0);
    EXPECT_EQ(c.total(), 5u);
    EXPECT_EQ(c.at("010"), 5u);
    EXPECT_EQ(c.at("111"), 0u);
    EXPECT_EQ(c.entries().size(), 1u);
    EXPECT_THROW(c.add("01"), InputError);
    EXPECT_THROW(c.add("01a"), InputError);
}

}  // namespace
}  // namespace qaoa
