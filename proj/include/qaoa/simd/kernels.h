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

#ifndef QAOA_SIMD_KERNELS_H
#define QAOA_SIMD_KERNELS_H

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

// Statevector inner loops. Each backend provides the same table of kernels;
// the scalar table is the reference and every other backend is tested
// against it. Masks are single-bit masks into the basis index
// (1 << position), never qubit numbers.

namespace qaoa::simd {

using cplx = std::complex<double>;

/// Row-major 2x2 complex matrix.
struct Mat2 {
    cplx m00, m01, m10, m11;
};

struct KernelTable {
    std::string_view name;
    /// (a_i, a_{i|mask}) <- M (a_i, a_{i|mask}) for every i with the mask bit clear.
    void (*apply_matrix)(std::span<cplx> amps, std::uint64_t mask, const Mat2 &m);
    /// a_i *= (i & mask) ? d1 : d0.
    void (*apply_diagonal)(std::span<cplx> amps, std::uint64_t mask, cplx d0, cplx d1);
    /// Swap a_i and a_{i^target} for every i with the control bit set and target bit clear.
    void (*apply_cnot)(std::span<cplx> amps, std::uint64_t control_mask, std::uint64_t target_mask);
    /// out_i = |a_i|^2.
    void (*probabilities)(std::span<const cplx> amps, std::span<double> out);
    /// Sum_i a_i * b_i.
    double (*dot)(std::span<const double> a, std::span<const double> b);
};

enum class Backend { kScalar, kAvx2 };

std::string_view backend_name(Backend backend);

const KernelTable &scalar_kernels();
/// nullptr when the AVX2 translation unit was not compiled in.
const KernelTable *avx2_kernels();

bool cpu_supports_avx2();

/// Backends both compiled in and supported by this CPU.
std::vector<Backend> available_backends();

const KernelTable &kernels_for(Backend backend);

/// Backend used by StateVector. Chosen once at startup (best available);
/// tests may switch it. Throws InputError for an unavailable backend.
const KernelTable &active_kernels();
Backend active_backend();
void set_active_backend(Backend backend);

}  // namespace qaoa::simd

#endif
