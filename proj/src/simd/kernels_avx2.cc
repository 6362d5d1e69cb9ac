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

// Compiled with -mavx2 -mfma. Nothing outside this file may call into it
// except through the table returned by avx2_kernels(), which dispatch.cc
// hands out only after a CPUID check.

#include <immintrin.h>

#include "qaoa/simd/kernels.h"

namespace qaoa::simd {
namespace {

// One __m256d holds two complex doubles: [re0, im0, re1, im1].

inline __m256d load2(const cplx *p) {
    return _mm256_loadu_pd(reinterpret_cast<const double *>(p));
}

inline void store2(cplx *p, __m256d v) {
    _mm256_storeu_pd(reinterpret_cast<double *>(p), v);
}

inline __m256d broadcast(cplx c) {
    return _mm256_setr_pd(c.real(), c.imag(), c.real(), c.imag());
}

// Lane-wise complex product of two packed vectors.
inline __m256d cmul(__m256d a, __m256d b) {
    const __m256d b_re = _mm256_movedup_pd(b);
    const __m256d b_im = _mm256_permute_pd(b, 0xF);
    const __m256d a_swap = _mm256_permute_pd(a, 0x5);
    return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_swap, b_im));
}

void apply_matrix_avx2(std::span<cplx> amps, std::uint64_t mask, const Mat2 &m) {
    const std::uint64_t size = amps.size();
    cplx *a = amps.data();
    if (size < 2) {
        return;
    }
    if (mask == 1) {
        // Pair partners are adjacent: v = [a0, a1], swapped = [a1, a0].
        const __m256d diag = _mm256_setr_pd(m.m00.real(), m.m00.imag(), m.m11.real(), m.m11.imag());
        const __m256d off = _mm256_setr_pd(m.m01.real(), m.m01.imag(), m.m10.real(), m.m10.imag());
        for (std::uint64_t i = 0; i < size; i += 2) {
            const __m256d v = load2(a + i);
            const __m256d swapped = _mm256_permute2f128_pd(v, v, 0x01);
            store2(a + i, _mm256_add_pd(cmul(v, diag), cmul(swapped, off)));
        }
        return;
    }
    const __m256d m00 = broadcast(m.m00);
    const __m256d m01 = broadcast(m.m01);
    const __m256d m10 = broadcast(m.m10);
    const __m256d m11 = broadcast(m.m11);
    for (std::uint64_t block = 0; block < size; block += 2 * mask) {
        for (std::uint64_t i0 = block; i0 < block + mask; i0 += 2) {
            const __m256d v0 = load2(a + i0);
            const __m256d v1 = load2(a + i0 + mask);
            store2(a + i0, _mm256_add_pd(cmul(v0, m00), cmul(v1, m01)));
            store2(a + i0 + mask, _mm256_add_pd(cmul(v0, m10), cmul(v1, m11)));
        }
    }
}

void apply_diagonal_avx2(std::span<cplx> amps, std::uint64_t mask, cplx d0, cplx d1) {
    const std::uint64_t size = amps.size();
    cplx *a = amps.data();
    if (size < 2) {
        amps[0] *= d0;
        return;
    }
    if (mask == 1) {
        const __m256d d = _mm256_setr_pd(d0.real(), d0.imag(), d1.real(), d1.imag());
        for (std::uint64_t i = 0; i < size; i += 2) {
            store2(a + i, cmul(load2(a + i), d));
        }
        return;
    }
    const __m256d v0 = broadcast(d0);
    const __m256d v1 = broadcast(d1);
    for (std::uint64_t block = 0; block < size; block += 2 * mask) {
        for (std::uint64_t i = block; i < block + mask; i += 2) {
            store2(a + i, cmul(load2(a + i), v0));
            store2(a + i + mask, cmul(load2(a + i + mask), v1));
        }
    }
}

void apply_cnot_avx2(std::span<cplx> amps, std::uint64_t control_mask, std::uint64_t target_mask) {
    const std::uint64_t size = amps.size();
    cplx *a = amps.data();
    if (control_mask == 1 || target_mask == 1) {
        // Partners interleave within one register; a plain swap loop is as
        // fast as any shuffle sequence here.
        for (std::uint64_t i = 0; i < size; ++i) {
            if ((i & control_mask) && !(i & target_mask)) {
                std::swap(a[i], a[i | target_mask]);
            }
        }
        return;
    }
    // Both masks >= 2, so indices i and i+1 agree on both bits.
    for (std::uint64_t i = 0; i < size; i += 2) {
        if ((i & control_mask) && !(i & target_mask)) {
            const __m256d v0 = load2(a + i);
            const __m256d v1 = load2(a + (i | target_mask));
            store2(a + i, v1);
            store2(a + (i | target_mask), v0);
        }
    }
}

void probabilities_avx2(std::span<const cplx> amps, std::span<double> out) {
    const std::size_t size = amps.size();
    const cplx *a = amps.data();
    std::size_t i = 0;
    for (; i + 4 <= size; i += 4) {
        const __m256d v0 = load2(a + i);
        const __m256d v1 = load2(a + i + 2);
        // hadd -> [p0, p2, p1, p3]; reorder to [p0, p1, p2, p3].
        const __m256d h = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
        _mm256_storeu_pd(out.data() + i, _mm256_permute4x64_pd(h, 0xD8));
    }
    for (; i < size; ++i) {
        const double re = a[i].real();
        const double im = a[i].imag();
        out[i] = re * re + im * im;
    }
}

double dot_avx2(std::span<const double> a, std::span<const double> b) {
    const std::size_t size = a.size();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= size; i += 4) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i), acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < size; ++i) {
        total += a[i] * b[i];
    }
    return total;
}

}  // namespace

const KernelTable *avx2_kernels() {
    static const KernelTable table{
        "avx2", apply_matrix_avx2, apply_diagonal_avx2, apply_cnot_avx2, probabilities_avx2, dot_avx2,
    };
    return &table;
}

}  // namespace qaoa::simd
