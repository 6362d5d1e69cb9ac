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

#include "qaoa/rng.h"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

namespace qaoa {
namespace {

// Known-answer vectors for Philox4x32-10 from the Random123 distribution.
TEST(Philox, KnownAnswerZero) {
    auto out = philox4x32({0, 0, 0, 0}, {0, 0});
    EXPECT_EQ(out, (std::array<std::uint32_t, 4>{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
}

TEST(Philox, KnownAnswerAllOnes) {
    auto out = philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff});
    EXPECT_EQ(out, (std::array<std::uint32_t, 4>{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
}

TEST(Philox, KnownAnswerPiDigits) {
    auto out = philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0});
    EXPECT_EQ(out, (std::array<std::uint32_t, 4>{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(CounterRng, SameKeySameSequence) {
    CounterRng a(42, StreamTag::kSample, 7);
    CounterRng b(42, StreamTag::kSample, 7);
    for (int i = 0; i < 100; ++i) {
        EXPECT_EQ(a.next_u64(), b.next_u64());
    }
}

TEST(CounterRng, StreamsDiffer) {
    std::set<std::uint64_t> firsts;
    for (std::uint64_t index = 0; index < 50; ++index) {
        firsts.insert(CounterRng(1, StreamTag::kSample, index).next_u64());
        firsts.insert(CounterRng(1, StreamTag::kReadout, index).next_u64());
        firsts.insert(CounterRng(2, StreamTag::kSample, index).next_u64());
    }
    EXPECT_EQ(firsts.size(), 150u);
}

TEST(CounterRng, UniformInUnitInterval) {
    CounterRng rng(3, StreamTag::kDerive, 0);
    double sum = 0.0;
    constexpr int kN = 100000;
    for (int i = 0; i < kN; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / kN, 0.5, 4.0 * std::sqrt(1.0 / 12.0 / kN));
}

TEST(CounterRng, BelowCoversRange) {
    CounterRng rng(5, StreamTag::kDerive, 1);
    std::array<int, 7> hist{};
    for (int i = 0; i < 7000; ++i) {
        const auto k = rng.below(7);
        ASSERT_LT(k, 7u);
        ++hist[k];
    }
    for (int h : hist) {
        EXPECT_GT(h, 800);
        EXPECT_LT(h, 1200);
    }
}

TEST(CounterRng, NormalMoments) {
    CounterRng rng(11, StreamTag::kDephase, 0);
    constexpr int kN = 200000;
    double s1 = 0.0, s2 = 0.0;
    for (int i = 0; i < kN; ++i) {
        const double z = rng.normal();
        s1 += z;
        s2 += z * z;
    }
    EXPECT_NEAR(s1 / kN, 0.0, 0.01);
    EXPECT_NEAR(s2 / kN, 1.0, 0.015);
}

TEST(CounterRng, BernoulliEdges) {
    CounterRng rng(0, StreamTag::kGateNoise, 0);
    for (int i = 0; i < 100; ++i) {
        EXPECT_FALSE(rng.bernoulli(0.0));
        EXPECT_TRUE(rng.bernoulli(1.0));
    }
}

TEST(DeriveSeed, DistinctAndDeterministic) {
    std::set<std::uint64_t> seeds;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        seeds.insert(derive_seed(9, i));
    }
    EXPECT_EQ(seeds.size(), 1000u);
    EXPECT_EQ(derive_seed(9, 3), derive_seed(9, 3));
    EXPECT_NE(derive_seed(9, 3), derive_seed(10, 3));
}

}  // namespace
}  // namespace qaoa
