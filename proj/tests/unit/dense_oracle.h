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

#ifndef QAOA_TESTS_DENSE_ORACLE_H
#define QAOA_TESTS_DENSE_ORACLE_H

// Independent reference for the statevector: full 2^n x 2^n unitaries
// assembled from Kronecker products, with qubit 0 as the leftmost factor.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>

#include "qaoa/circuit.h"
#include "qaoa/rng.h"

namespace qaoa::testing_oracle {

inline Eigen::Matrix2cd single_qubit_matrix(const GateOp &op) {
    using c = std::complex<double>;
    const c i(0.0, 1.0);
    Eigen::Matrix2cd m;
    const double h = 1.0 / std::sqrt(2.0);
    switch (op.kind) {
        case GateKind::kH:
            m << h, h, h, -h;
            break;
        case GateKind::kX:
            m << 0, 1, 1, 0;
            break;
        case GateKind::kY:
            m << 0, -i, i, 0;
            break;
        case GateKind::kZ:
            m << 1, 0, 0, -1;
            break;
        case GateKind::kRX:
            m << std::cos(op.angle / 2), -i * std::sin(op.angle / 2), -i * std::sin(op.angle / 2),
                std::cos(op.angle / 2);
            break;
        case GateKind::kRZ:
            m << std::exp(-i * (op.angle / 2)), 0, 0, std::exp(i * (op.angle / 2));
            break;
        default:
            m.setIdentity();
    }
    return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

inline Eigen::MatrixXcd gate_unitary(const GateOp &op, int n) {
    if (op.kind == GateKind::kCNOT) {
        // Built from projectors: |0><0|_c (x) I + |1><1|_c (x) X_t.
        Eigen::Matrix2cd p0 = Eigen::Matrix2cd::Zero(), p1 = Eigen::Matrix2cd::Zero(), x;
        p0(0, 0) = 1.0;
        p1(1, 1) = 1.0;
        x << 0, 1, 1, 0;
        Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(1, 1), b = Eigen::MatrixXcd::Identity(1, 1);
        for (int q = 0; q < n; ++q) {
            const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
            a = kron(a, q == op.qubits[0] ? Eigen::MatrixXcd(p0) : Eigen::MatrixXcd(id));
            b = kron(b, q == op.qubits[0]   ? Eigen::MatrixXcd(p1)
                        : q == op.qubits[1] ? Eigen::MatrixXcd(x)
                                            : Eigen::MatrixXcd(id));
        }
        return a + b;
    }
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(1, 1);
    for (int q = 0; q < n; ++q) {
        u = kron(u, q == op.qubits[0] ? Eigen::MatrixXcd(single_qubit_matrix(op))
                                      : Eigen::MatrixXcd(Eigen::Matrix2cd::Identity()));
    }
    return u;
}

inline Eigen::MatrixXcd dense_unitary(const Circuit &circuit) {
    const Eigen::Index dim = Eigen::Index{1} << circuit.num_qubits;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto &op : circuit.ops) {
        u = gate_unitary(op, circuit.num_qubits) * u;
    }
    return u;
}

/// Mix of every gate kind, angles uniform in [0, 2 pi).
inline Circuit random_circuit(int n, int length, std::uint64_t seed) {
    CounterRng rng(seed, StreamTag::kDerive, 4242);
    Circuit c{n, {}};
    for (int k = 0; k < length; ++k) {
        const int q = static_cast<int>(rng.below(static_cast<std::uint32_t>(n)));
        const double angle = 2.0 * std::numbers::pi * rng.uniform();
        const auto pick = rng.below(n > 1 ? 7 : 6);
        switch (pick) {
            case 0:
                c.ops.push_back(GateOp::single(GateKind::kH, q));
                break;
            case 1:
                c.ops.push_back(GateOp::single(GateKind::kX, q));
                break;
            case 2:
                c.ops.push_back(GateOp::single(GateKind::kY, q));
                break;
            case 3:
                c.ops.push_back(GateOp::single(GateKind::kZ, q));
                break;
            case 4:
                c.ops.push_back(GateOp::rotation(GateKind::kRX, q, angle));
                break;
            case 5:
                c.ops.push_back(GateOp::rotation(GateKind::kRZ, q, angle));
                break;
            default: {
                const int t = (q + 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(n - 1)))) % n;
                c.ops.push_back(GateOp::cnot(q, t));
            }
        }
    }
    return c;
}

}  // namespace qaoa::testing_oracle

#endif
