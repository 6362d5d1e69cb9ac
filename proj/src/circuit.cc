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

#include "qaoa/circuit.h"

#include <algorithm>
#include <sstream>

#include "qaoa/error.h"

namespace qaoa {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::kH:
            return "H";
        case GateKind::kX:
            return "X";
        case GateKind::kY:
            return "Y";
        case GateKind::kZ:
            return "Z";
        case GateKind::kRX:
            return "RX";
        case GateKind::kRZ:
            return "RZ";
        case GateKind::kCNOT:
            return "CNOT";
        case GateKind::kDelay:
            return "DELAY";
    }
    return "?";
}

GateOp GateOp::single(GateKind kind, int q, std::optional<double> duration, GateOrigin origin) {
    if (kind == GateKind::kCNOT || kind == GateKind::kRX || kind == GateKind::kRZ) {
        throw InputError("GateOp::single does not build " + std::string(gate_name(kind)));
    }
    GateOp op;
    op.kind = kind;
    op.qubits = {q, -1};
    op.duration = duration;
    op.origin = origin;
    return op;
}

GateOp GateOp::rotation(GateKind kind, int q, double angle, std::optional<double> duration, GateOrigin origin) {
    if (kind != GateKind::kRX && kind != GateKind::kRZ) {
        throw InputError("GateOp::rotation needs RX or RZ");
    }
    GateOp op;
    op.kind = kind;
    op.qubits = {q, -1};
    op.angle = angle;
    op.duration = duration;
    op.origin = origin;
    return op;
}

GateOp GateOp::cnot(int control, int target, std::optional<double> duration, GateOrigin origin) {
    GateOp op;
    op.kind = GateKind::kCNOT;
    op.qubits = {control, target};
    op.duration = duration;
    op.origin = origin;
    return op;
}

GateOp GateOp::delay(int q, double duration, GateOrigin origin) {
    GateOp op;
    op.kind = GateKind::kDelay;
    op.qubits = {q, -1};
    op.duration = duration;
    op.origin = origin;
    return op;
}

void Circuit::validate() const {
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const auto &op = ops[i];
        for (int k = 0; k < op.arity(); ++k) {
            int q = op.qubits[static_cast<std::size_t>(k)];
            if (q < 0 || q >= num_qubits) {
                throw InputError("op " + std::to_string(i) + " (" + std::string(gate_name(op.kind)) + ") qubit " +
                                 std::to_string(q) + " out of range for " + std::to_string(num_qubits) + " qubits");
            }
        }
        if (op.arity() == 2 && op.qubits[0] == op.qubits[1]) {
            throw InputError("op " + std::to_string(i) + " uses the same qubit twice");
        }
        if (!op.has_angle() && op.angle != 0.0) {
            throw InputError("op " + std::to_string(i) + " carries an angle but is not a rotation");
        }
        if (op.duration && *op.duration < 0.0) {
            throw InputError("op " + std::to_string(i) + " has negative duration");
        }
    }
}

std::size_t Circuit::count(GateKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(ops.begin(), ops.end(), [kind](const GateOp &op) { return op.kind == kind; }));
}

std::string to_text(const Circuit &circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.num_qubits << '\n';
    for (const auto &op : circuit.ops) {
        out << gate_name(op.kind) << ' ' << op.qubits[0];
        if (op.arity() == 2) {
            out << ' ' << op.qubits[1];
        }
        if (op.has_angle()) {
            out << " angle=" << op.angle;
        }
        if (op.duration) {
            out << " t=" << *op.duration;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace qaoa
