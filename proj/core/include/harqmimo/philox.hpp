// SPDX-License-Identifier: Apache-2.0
//
// harqmimo: antenna dimensioning and outage analysis for MIMO-HARQ links
// Copyright (C) 2026 The harqmimo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace harqmimo {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
/// Every output block is a pure function of (counter, key).
struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    static constexpr Counter generate(Counter ctr, Key key) {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * ctr[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }

    static constexpr Key key_from_seed(std::uint64_t seed) {
        return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    }
};

/// Channel-entry addressing for the Monte Carlo streams. The counter words are
/// (sample low, sample high, realization, entry), so each complex Gaussian
/// entry of each realization of each packet sample has a fixed address.
struct EntryAddress {
    std::uint64_t sample = 0;
    std::uint32_t realization = 0;
    std::uint32_t entry = 0;

    constexpr Philox4x32::Counter counter() const {
        return {static_cast<std::uint32_t>(sample), static_cast<std::uint32_t>(sample >> 32), realization, entry};
    }
};

/// Uniform on (0, 1] from two words (53 bits).
inline double uniform_open_low(std::uint32_t hi, std::uint32_t lo) {
    const std::uint64_t bits = ((static_cast<std::uint64_t>(hi) << 32) | lo) >> 11;
    return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
}

/// Uniform on [0, 1) from two words (53 bits).
inline double uniform_closed_low(std::uint32_t hi, std::uint32_t lo) {
    const std::uint64_t bits = ((static_cast<std::uint64_t>(hi) << 32) | lo) >> 11;
    return static_cast<double>(bits) * 0x1.0p-53;
}

/// CN(0, 1) variate by Box-Muller: sqrt(-ln u1) (cos 2 pi u2, sin 2 pi u2),
/// u1 from words 0-1 and u2 from words 2-3 of one Philox block.
inline std::complex<double> complex_normal(const Philox4x32::Key& key, const EntryAddress& addr) {
    const Philox4x32::Counter block = Philox4x32::generate(addr.counter(), key);
    const double u1 = uniform_open_low(block[0], block[1]);
    const double u2 = uniform_closed_low(block[2], block[3]);
    const double radius = std::sqrt(-std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

} // namespace harqmimo
