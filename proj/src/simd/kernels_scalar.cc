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

#include "qaoa/simd/kernels.h"

namespace qaoa::simd {
namespace {

void apply_matrix_scalar(std::span<cplx> amps, std::uint64_t mask, const Mat2 &m) {
    const std::uint64_t size = amps.size();
    for (std::uint64_t block = 0; block < size; block += 2 * mask) {
        for (std::uint64_t i0 = block; i0 < block + mask; ++i0) {
            const std::uint64_t i1 = i0 | mask;
            const cplx a0 = amps[i0];
            const cplx a1 = amps[i1];
            amps[i0] = m.m00 * a0 + m.m01 * a1;
            amps[i1] = m.m10 * a0 + m.m11 * a1;
        }
    }
}

void apply_diagonal_scalar(std::span<cplx> amps, std::uint64_t mask, cplx d0, cplx d1) {
    const std::uint64_t size = amps.size();
    for (std::uint64_t i = 0; i < size; ++i) {
        amps[i] *= (i & mask) ? d1 : d0;
    }
}

void apply_cnot_scalar(std::span<cplx> amps, std::uint64_t control_mask, std::uint64_t target_mask) {
    const std::uint64_t size = amps.size();
    for (std::uint64_t i = 0; i < size; ++i) {
        if ((i & control_mask) && !(i & target_mask)) {
            std::swap(amps[i], amps[i | target_mask]);
        }
    }
}

void probabilities_scalar(std::span<const cplx> amps, std::span<double> out) {
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const double re = amps[i].real();
        const double im = amps[i].imag();
        out[i] = re * re + im * im;
    }
}

double dot_scalar(std::span<const double> a, std::span<const double> b) {
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        total += a[i] * b[i];
    }
    return total;
}

}  // namespace

const KernelTable &scalar_kernels() {
    static const KernelTable table{
        "scalar", apply_matrix_scalar, apply_diagonal_scalar, apply_cnot_scalar, probabilities_scalar, dot_scalar,
    };
    return table;
}

}  // namespace qaoa::simd
