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

#include <gtest/gtest.h>

#include <ostream>
#include <vector>

#include "qaoa/rng.h"
#include "qaoa/statevec.h"

namespace qaoa::simd {

void PrintTo(Backend backend, std::ostream *os) {
    *os << backend_name(backend);
}

namespace {

std::vector<cplx> random_amplitudes(std::size_t size, std::uint64_t seed) {
    CounterRng rng(seed, StreamTag::kDerive, 100);
    std::vector<cplx> a(size);
    for (auto &z : a) {
        z = {rng.normal(), rng.normal()};
    }
    return a;
}

Mat2 random_matrix(std::uint64_t seed) {
    CounterRng rng(seed, StreamTag::kDerive, 200);
    auto c = [&] { return cplx(rng.normal(), rng.normal()); };
    return {c(), c(), c(), c()};
}

void expect_close(const std::vector<cplx> &a, const std::vector<cplx> &b, double tol) {
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        ASSERT_NEAR(a[i].real(), b[i].real(), tol) << "index " << i;
        ASSERT_NEAR(a[i].imag(), b[i].imag(), tol) << "index " << i;
    }
}

class BackendEquivalence : public ::testing::TestWithParam<Backend> {};

// Every available backend must agree with the scalar reference for every
// mask position, including the lowest bit where pairs share a vector lane.
TEST_P(BackendEquivalence, ApplyMatrix) {
    const auto &ref = scalar_kernels();
    const auto &k = kernels_for(GetParam());
    for (int n = 1; n <= 7; ++n) {
        const std::size_t size = std::size_t{1} << n;
        for (int bit = 0; bit < n; ++bit) {
            auto a = random_amplitudes(size, 17 * n + bit);
            auto b = a;
            const Mat2 m = random_matrix(n * 31 + bit);
            ref.apply_matrix(a, std::uint64_t{1} << bit, m);
            k.apply_matrix(b, std::uint64_t{1} << bit, m);
            expect_close(a, b, 1e-12);
        }
    }
}

TEST_P(BackendEquivalence, ApplyDiagonal) {
    const auto &ref = scalar_kernels();
    const auto &k = kernels_for(GetParam());
    for (int n = 1; n <= 7; ++n) {
        const std::size_t size = std::size_t{1} << n;
        for (int bit = 0; bit < n; ++bit) {
            auto a = random_amplitudes(size, 5 * n + bit);
            auto b = a;
            const cplx d0(0.3, -0.8), d1(-0.6, 0.1);
            ref.apply_diagonal(a, std::uint64_t{1} << bit, d0, d1);
            k.apply_diagonal(b, std::uint64_t{1} << bit, d0, d1);
            expect_close(a, b, 1e-12);
        }
    }
}

TEST_P(BackendEquivalence, ApplyCnot) {
    const auto &ref = scalar_kernels();
    const auto &k = kernels_for(GetParam());
    for (int n = 2; n <= 7; ++n) {
        const std::size_t size = std::size_t{1} << n;
        for (int c = 0; c < n; ++c) {
            for (int t = 0; t < n; ++t) {
                if (c == t) {
                    continue;
                }
                auto a = random_amplitudes(size, 100 * n + 10 * c + t);
                auto b = a;
                ref.apply_cnot(a, std::uint64_t{1} << c, std::uint64_t{1} << t);
                k.apply_cnot(b, std::uint64_t{1} << c, std::uint64_t{1} << t);
                expect_close(a, b, 0.0);
            }
        }
    }
}

TEST_P(BackendEquivalence, ProbabilitiesAndDot) {
    const auto &ref = scalar_kernels();
    const auto &k = kernels_for(GetParam());
    for (int n = 0; n <= 8; ++n) {
        const std::size_t size = std::size_t{1} << n;
        const auto a = random_amplitudes(size, 900 + n);
        std::vector<double> pa(size), pb(size);
        ref.probabilities(a, pa);
        k.probabilities(a, pb);
        for (std::size_t i = 0; i < size; ++i) {
            ASSERT_NEAR(pa[i], pb[i], 1e-12);
        }
        std::vector<double> w(size);
        for (std::size_t i = 0; i < size; ++i) {
            w[i] = static_cast<double>(i % 7) - 2.5;
        }
        EXPECT_NEAR(ref.dot(pa, w), k.dot(pa, w), 1e-9);
    }
}

// Statevector results must not depend on the active backend.
TEST_P(BackendEquivalence, StateVectorEndToEnd) {
    const Backend saved = active_backend();
    auto run = [](Backend backend) {
        set_active_backend(backend);
        StateVector s(6);
        for (int round = 0; round < 3; ++round) {
            for (int q = 0; q < 6; ++q) {
                s.apply(GateOp::single(GateKind::kH, q));
                s.apply(GateOp::rotation(GateKind::kRZ, q, 0.3 * (q + 1) + round));
            }
            for (int q = 0; q + 1 < 6; ++q) {
                s.apply(GateOp::cnot(q, q + 1));
            }
            for (int q = 0; q < 6; ++q) {
                s.apply(GateOp::rotation(GateKind::kRX, q, 0.7 - 0.1 * q));
                s.apply(GateOp::single(GateKind::kY, (q + round) % 6));
            }
        }
        return std::vector<cplx>(s.amplitudes().begin(), s.amplitudes().end());
    };
    const auto ref = run(Backend::kScalar);
    const auto got = run(GetParam());
    set_active_backend(saved);
    expect_close(ref, got, 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Available, BackendEquivalence, ::testing::ValuesIn(available_backends()),
                         [](const auto &info) { return std::string(backend_name(info.param)); });

TEST(Dispatch, ScalarAlwaysAvailable) {
    const auto backends = available_backends();
    ASSERT_FALSE(backends.empty());
    EXPECT_EQ(backends.front(), Backend::kScalar);
    EXPECT_EQ(scalar_kernels().name, "scalar");
}

TEST(Dispatch, ActiveIsBestAvailable) {
    EXPECT_EQ(active_backend(), available_backends().back());
}

TEST(Dispatch, Avx2MatchesCpu) {
    if (avx2_kernels() != nullptr && cpu_supports_avx2()) {
        EXPECT_EQ(available_backends().size(), 2u);
    } else {
        EXPECT_EQ(available_backends().size(), 1u);
    }
}

}  // namespace
}  // namespace qaoa::simd
