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

#ifndef QAOA_RNG_H
#define QAOA_RNG_H

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace qaoa {

/// Philox4x32-10 block function (Salmon et al., SC'11). Pure function of
/// (counter, key); every random draw in the workbench is derived from it so
/// that results depend only on seeds and logical indices, never on thread
/// scheduling.
inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key) {
    constexpr std::uint32_t kMul0 = 0xD2511F53;
    constexpr std::uint32_t kMul1 = 0xCD9E8D57;
    constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
    constexpr std::uint32_t kWeyl1 = 0xBB67AE85;
    for (int round = 0; round < 10; ++round) {
        std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
        std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
        auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
        auto lo0 = static_cast<std::uint32_t>(p0);
        auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
        auto lo1 = static_cast<std::uint32_t>(p1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

/// Purpose tags keep independent consumers of one seed on disjoint streams.
enum class StreamTag : std::uint16_t {
    kSample = 1,
    kReadout = 2,
    kGateNoise = 3,
    kDephase = 4,
    kTwirl = 5,
    kDerive = 6,
    kRestart = 7,
};

/// Sequential generator over one Philox stream. Cheap to construct; intended
/// to be created per (seed, tag, index) at the point of use.
class CounterRng {
   public:
    CounterRng(std::uint64_t seed, StreamTag tag, std::uint64_t index)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_lo_(static_cast<std::uint32_t>(index)),
          stream_hi_(static_cast<std::uint32_t>((index >> 32) & 0xFFFF) |
                     (static_cast<std::uint32_t>(tag) << 16)) {
    }

    std::uint64_t next_u64() {
        if (lane_ == 2) {
            refill();
        }
        return buffer_[lane_++];
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound). Multiply-shift; bias < 2^-32 for the
    /// small bounds used here.
    std::uint32_t below(std::uint32_t bound) {
        return static_cast<std::uint32_t>(((next_u64() >> 32) * bound) >> 32);
    }

    bool bernoulli(double p) {
        return uniform() < p;
    }

    /// Standard normal via Box-Muller (one variate per call).
    double normal() {
        double u1 = 1.0 - uniform();  // (0, 1]
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

   private:
    void refill() {
        auto out = philox4x32({static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
                               stream_lo_, stream_hi_},
                              key_);
        buffer_[0] = (std::uint64_t{out[1]} << 32) | out[0];
        buffer_[1] = (std::uint64_t{out[3]} << 32) | out[2];
        ++block_;
        lane_ = 0;
    }

    std::array<std::uint32_t, 2> key_;
    std::uint32_t stream_lo_;
    std::uint32_t stream_hi_;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 2> buffer_{};
    int lane_ = 2;
};

/// Child seed for a logical sub-task (sweep cell, objective evaluation, ...).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return CounterRng(master, StreamTag::kDerive, index).next_u64();
}

}  // namespace qaoa

#endif
