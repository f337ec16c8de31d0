// SPDX-License-Identifier: Apache-2.0
//
// hybrid-irs: capacity and element-allocation simulator for hybrid active-passive IRS links
// Copyright (C) 2026 The hybrid-irs Authors
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


#ifndef HIRS_RNG_HPP
#define HIRS_RNG_HPP

#include <array>
#include <complex>
#include <cstdint>

namespace hirs
{
    // Philox4x32-10 counter-based generator (Salmon et al., Random123). A block of 128 random
    // bits is a pure function of (counter, key), so any sample can be regenerated without
    // replaying the ones before it.
    namespace philox
    {
        using Counter = std::array<std::uint32_t, 4>;
        using Key = std::array<std::uint32_t, 2>;

        constexpr std::uint32_t kMul0 = 0xD2511F53u;
        constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
        constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
        constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

        constexpr Counter round(const Counter &c, const Key &k)
        {
            const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c[0];
            const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c[2];
            const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
            const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
            return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
        }

        constexpr Counter generate(Counter c, Key k)
        {
            c = round(c, k);
            for (int r = 1; r < 10; ++r)
            {
                k[0] += kWeyl0;
                k[1] += kWeyl1;
                c = round(c, k);
            }
            return c;
        }
    }

    // Addressable random stream. (seed, stream_index) selects one Monte Carlo sample; substream
    // separates the independent draws needed inside that sample (one per channel link).
    struct RngStream
    {
        std::uint64_t seed = 0;
        std::uint64_t stream_index = 0;
        std::uint32_t substream = 0;

        constexpr RngStream sub(std::uint32_t id) const { return {seed, stream_index, id}; }

        constexpr philox::Counter block(std::uint32_t position) const
        {
            const philox::Counter ctr{position, substream, static_cast<std::uint32_t>(stream_index),
                                      static_cast<std::uint32_t>(stream_index >> 32)};
            const philox::Key key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
            return philox::generate(ctr, key);
        }

        // Two uniforms on the open interval (0, 1) with 53-bit resolution.
        std::array<double, 2> uniform_pair(std::uint32_t position) const;

        // Circularly-symmetric complex Gaussian CN(0, 1) at the given position (Box-Muller on one
        // Philox block).
        std::complex<double> complex_normal(std::uint32_t position) const;

        friend constexpr bool operator==(const RngStream &, const RngStream &) = default;
    };
}

#endif
