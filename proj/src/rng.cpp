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


#include "hirs/rng.hpp"

#include <cmath>
#include <numbers>

namespace hirs
{
    namespace
    {
        constexpr double to_open_unit(std::uint32_t hi, std::uint32_t lo)
        {
            const std::uint64_t bits = ((static_cast<std::uint64_t>(hi) << 32) | lo) >> 11;
            return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
        }
    }

    std::array<double, 2> RngStream::uniform_pair(std::uint32_t position) const
    {
        const auto b = block(position);
        return {to_open_unit(b[0], b[1]), to_open_unit(b[2], b[3])};
    }

    std::complex<double> RngStream::complex_normal(std::uint32_t position) const
    {
        const auto [u1, u2] = uniform_pair(position);
        // |z|^2 = -ln(u1) is Exp(1), so each component has variance 1/2.
        const double radius = std::sqrt(-std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }
}
