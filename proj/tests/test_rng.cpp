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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace hirs;

// Known-answer vectors published with the Random123 reference implementation.
TEST_CASE("philox4x32-10 known answers", "[rng]")
{
    using C = philox::Counter;
    CHECK(philox::generate(C{0, 0, 0, 0}, {0, 0}) == C{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
    CHECK(philox::generate(C{0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}) ==
          C{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
    CHECK(philox::generate(C{0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u}) ==
          C{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});

    static_assert(philox::generate(C{0, 0, 0, 0}, {0, 0})[0] == 0x6627e8d5u);
}

TEST_CASE("stream addressing", "[rng]")
{
    const RngStream s{42, 7, 0};
    CHECK(s.block(3) == s.block(3));
    CHECK(s.block(3) != s.block(4));
    CHECK(s.block(3) != s.sub(1).block(3));
    CHECK(s.block(3) != RngStream{42, 8, 0}.block(3));
    CHECK(s.block(3) != RngStream{43, 7, 0}.block(3));
    // high bits of the stream index and seed reach the counter and key
    CHECK(RngStream{1, 1ull << 32, 0}.block(0) != RngStream{1, 0, 0}.block(0));
    CHECK(RngStream{1ull << 32, 0, 0}.block(0) != RngStream{0, 0, 0}.block(0));
}

TEST_CASE("uniforms lie in the open unit interval", "[rng]")
{
    const RngStream s{2024, 0, 0};
    double sum = 0.0;
    const int n = 50000;
    for (int i = 0; i < n; ++i)
    {
        const auto u = s.uniform_pair(static_cast<std::uint32_t>(i));
        REQUIRE(u[0] > 0.0);
        REQUIRE(u[0] < 1.0);
        REQUIRE(u[1] > 0.0);
        REQUIRE(u[1] < 1.0);
        sum += u[0] + u[1];
    }
    // mean 1/2, variance 1/12 per uniform
    CHECK(std::abs(sum / (2.0 * n) - 0.5) < 4.0 * std::sqrt(1.0 / 12.0 / (2.0 * n)));
}

TEST_CASE("complex normal is the Box-Muller transform of the uniform pair", "[rng]")
{
    const RngStream s{5, 11, 2};
    for (std::uint32_t i = 0; i < 100; ++i)
    {
        const auto u = s.uniform_pair(i);
        const double r = std::sqrt(-std::log(u[0]));
        const double th = 2.0 * std::numbers::pi * u[1];
        const auto z = s.complex_normal(i);
        CHECK(std::abs(z - std::polar(r, th)) < 1e-14);
    }
}

TEST_CASE("complex normal moments", "[rng]")
{
    const RngStream s{99, 3, 1};
    const int n = 200000;
    std::complex<double> mean{0.0, 0.0}, pseudo{0.0, 0.0};
    double power = 0.0;
    for (int i = 0; i < n; ++i)
    {
        const auto z = s.complex_normal(static_cast<std::uint32_t>(i));
        mean += z;
        power += std::norm(z);
        pseudo += z * z;
    }
    mean /= static_cast<double>(n);
    pseudo /= static_cast<double>(n);
    power /= n;
    const double tol = 4.0 / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(mean) < tol);
    CHECK(std::abs(power - 1.0) < tol);
    // circular symmetry: E[z^2] = 0
    CHECK(std::abs(pseudo) < tol);
}
