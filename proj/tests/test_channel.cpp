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


#include "hirs/channel.hpp"
#include "hirs/error.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace hirs;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    constexpr double pi = std::numbers::pi;

    bool near(Complex a, Complex b, double tol = 1e-12) { return std::abs(a - b) < tol; }

    ArrayGeometry geometry(std::int64_t nx, std::int64_t ny, double spacing, double az, double el)
    {
        return {spacing, nx, ny, az, el, az, el};
    }
}

TEST_CASE("steering vector", "[channel]")
{
    const auto a = steering_vector(0.0, 4);
    REQUIRE(a.size() == 4);
    for (const auto &e : a)
        CHECK(near(e, 1.0));

    const auto b = steering_vector(1.0, 2);
    CHECK(near(b[0], 1.0));
    CHECK(near(b[1], -1.0));

    const auto c = steering_vector(0.5, 3);
    CHECK(near(c[0], 1.0));
    CHECK(near(c[1], Complex{0.0, -1.0}));
    CHECK(near(c[2], -1.0));

    CHECK_THROWS_AS(steering_vector(0.3, 0), Error);
}

TEST_CASE("steering vector entries have unit modulus", "[channel][property]")
{
    std::mt19937_64 g(1);
    std::uniform_real_distribution<double> zeta(-50.0, 50.0);
    for (int t = 0; t < 200; ++t)
    {
        const double z = zeta(g);
        const auto u = steering_vector(z, 64);
        for (std::size_t k = 0; k < u.size(); ++k)
        {
            REQUIRE(std::abs(std::abs(u[k]) - 1.0) < 1e-14);
            // phase -pi k zeta modulo 2 pi
            const Complex ref = std::exp(Complex{0.0, -pi * static_cast<double>(k) * z});
            REQUIRE(near(u[k], ref, 1e-9));
        }
    }
}

TEST_CASE("receive response", "[channel]")
{
    const double lambda = 0.05;
    const auto one = receive_response(geometry(1, 1, lambda / 4, 0.3, 1.0), lambda);
    REQUIRE(one.size() == 1);
    CHECK(near(one[0], 1.0));

    // zero elevation gives zero spatial frequency on both axes
    for (const auto &e : receive_response(geometry(3, 5, lambda / 4, 0.7, 0.0), lambda))
        CHECK(near(e, 1.0));

    // spacing lambda/4, azimuth 0, elevation pi/2: zeta_x = 0.5, zeta_y = 0
    const auto k = receive_response(geometry(2, 2, lambda / 4, 0.0, pi / 2), lambda);
    REQUIRE(k.size() == 4);
    CHECK(near(k[0], 1.0));
    CHECK(near(k[1], 1.0));
    CHECK(near(k[2], Complex{0.0, -1.0}));
    CHECK(near(k[3], Complex{0.0, -1.0}));

    CHECK_THROWS_AS(receive_response(geometry(2, 2, lambda / 4, 0.0, pi / 2), 0.0), Error);
    CHECK_THROWS_AS(receive_response(geometry(2, 2, lambda / 4, -0.1, pi / 2), lambda), Error);
    CHECK_THROWS_AS(receive_response(geometry(0, 2, lambda / 4, 0.1, pi / 2), lambda), Error);
}

TEST_CASE("receive response is the Kronecker product of the axis vectors", "[channel][property]")
{
    std::mt19937_64 g(2);
    std::uniform_real_distribution<double> ang(0.0, pi);
    for (int t = 0; t < 50; ++t)
    {
        const double az = ang(g), el = ang(g);
        const double lambda = 0.05, d = 0.0125;
        const auto geom = geometry(3, 4, d, az, el);
        const auto hop = t % 2 ? Hop::bs_to_irs : Hop::irs_to_user;
        const auto a = receive_response(geom, lambda, hop);
        for (std::int64_t i = 0; i < 3; ++i)
            for (std::int64_t j = 0; j < 4; ++j)
            {
                const double phase =
                    -pi * 2.0 * d / lambda * std::sin(el) * (static_cast<double>(i) * std::cos(az) + static_cast<double>(j) * std::sin(az));
                REQUIRE(near(a[static_cast<std::size_t>(i * 4 + j)], std::exp(Complex{0.0, phase}), 1e-12));
            }
    }
}

TEST_CASE("LoS channel", "[channel]")
{
    const double lambda = 0.05;
    const auto h = los_channel(1e-3, 60.0, lambda, geometry(1, 1, lambda / 4, 0.0, pi / 2), Hop::bs_to_irs);
    REQUIRE(h.size() == 1);
    CHECK(near(h[0], Complex{std::sqrt(1e-3) / 60.0, 0.0}, 1e-15));
    CHECK_THAT(std::abs(h[0]), WithinRel(5.270462766947299e-4, 1e-12));

    const auto unit = los_channel(1.0, 1.0, lambda, geometry(1, 1, lambda / 4, 0.0, pi / 2), Hop::bs_to_irs);
    CHECK_THAT(std::abs(unit[0]), WithinRel(1.0, 1e-15));

    const auto wide = los_channel(1e-3, 37.3, lambda, geometry(6, 7, lambda / 4, 0.4, 1.1), Hop::irs_to_user);
    for (const auto &e : wide)
        CHECK_THAT(std::abs(e), WithinRel(std::sqrt(1e-3) / 37.3, 1e-13));

    CHECK_THROWS_AS(los_channel(1e-3, 0.0, lambda, geometry(1, 1, lambda / 4, 0.0, pi / 2), Hop::bs_to_irs), Error);
}

TEST_CASE("element factorization", "[channel]")
{
    CHECK(factor_elements(0) == std::pair<std::int64_t, std::int64_t>{0, 0});
    CHECK(factor_elements(1) == std::pair<std::int64_t, std::int64_t>{1, 1});
    CHECK(factor_elements(100) == std::pair<std::int64_t, std::int64_t>{10, 10});
    CHECK(factor_elements(600) == std::pair<std::int64_t, std::int64_t>{24, 25});
    CHECK(factor_elements(13) == std::pair<std::int64_t, std::int64_t>{1, 13});
    for (std::int64_t n = 1; n < 2000; ++n)
    {
        const auto [x, y] = factor_elements(n);
        REQUIRE(x * y == n);
        REQUIRE(x <= y);
    }
}

TEST_CASE("default surface angles", "[channel]")
{
    const SurfaceConfig s = default_surface(default_params());
    // BS lies in -x from the IRS, the user along +y
    CHECK_THAT(s.azimuth_aoa, WithinAbs(pi, 1e-15));
    CHECK_THAT(s.azimuth_aod, WithinAbs(pi / 2, 1e-15));
    CHECK_THAT(s.elevation_aoa, WithinAbs(pi / 2, 1e-15));
    CHECK_THAT(s.elem_spacing, WithinRel(0.0125, 1e-15));
}

TEST_CASE("NLoS draws", "[channel]")
{
    const RngStream s{7, 0, 0};
    CHECK(sample_nlos(0, 1.0, 1.0, s).empty());
    CHECK(sample_nlos(16, 1e-3, 20.0, s) == sample_nlos(16, 1e-3, 20.0, s));
    CHECK(sample_nlos(16, 1e-3, 20.0, s) != sample_nlos(16, 1e-3, 20.0, s.sub(1)));

    const std::int64_t n = 100000;
    const auto h = sample_nlos(n, 1.0, 1.0, s);
    double power = 0.0;
    for (const auto &e : h)
        power += std::norm(e);
    CHECK(std::abs(power / static_cast<double>(n) - 1.0) < 3.0 / std::sqrt(static_cast<double>(n)));

    // variance scales with beta / dist^2
    const auto scaled = sample_nlos(8, 1e-3, 20.0, s);
    const auto unit = sample_nlos(8, 1.0, 1.0, s);
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(near(scaled[i], unit[i] * (std::sqrt(1e-3) / 20.0), 1e-15));
}

TEST_CASE("Rician assembly", "[channel]")
{
    const ComplexVector los{{1.0, 0.5}, {-0.2, 0.3}};
    const ComplexVector nlos{{0.1, -0.7}, {0.9, 0.4}};
    CHECK(assemble_rician(RicianFactor::los(), los, nlos) == los);
    CHECK(assemble_rician(RicianFactor::linear(0.0), los, nlos) == nlos);

    const auto h = assemble_rician(RicianFactor::linear(1.0), ComplexVector{1.0}, ComplexVector{1.0});
    CHECK_THAT(h[0].real(), WithinRel(std::sqrt(2.0), 1e-15));

    CHECK_THROWS_AS(assemble_rician(RicianFactor::linear(1.0), los, ComplexVector{1.0}), Error);
}

TEST_CASE("Rician assembly preserves average power", "[channel][property]")
{
    const double lambda = 0.05;
    const auto geom = geometry(4, 4, lambda / 4, 0.6, 1.2);
    const auto los = los_channel(1e-3, 30.0, lambda, geom, Hop::bs_to_irs);
    const double expected = 1e-3 / 900.0;
    for (double k : {1.0, 10.0})
    {
        double power = 0.0;
        const int trials = 20000;
        for (int t = 0; t < trials; ++t)
        {
            const auto h = assemble_rician(RicianFactor::linear(k), los,
                                           sample_nlos(16, 1e-3, 30.0, RngStream{11, static_cast<std::uint64_t>(t), 0}));
            for (const auto &e : h)
                power += std::norm(e);
        }
        power /= 16.0 * trials;
        CHECK_THAT(power, WithinRel(expected, 0.02));
    }
}

TEST_CASE("joint realization", "[channel]")
{
    SystemParams p = default_params();
    const SurfaceConfig surface = default_surface(p);

    const Allocation passive{0, 12};
    const auto layout = make_layout(surface, passive);
    const auto r = sample_realization(p, passive, layout, RngStream{1, 0, 0});
    CHECK(r.bi_act.empty());
    CHECK(r.iu_act.empty());
    CHECK(r.bi_pas.size() == 12);

    const Allocation mixed{6, 9};
    const auto csi = statistical_csi(p, make_layout(surface, mixed));
    const auto a = sample_realization(p, csi, RngStream{1, 0, 0});
    const auto b = sample_realization(p, csi, RngStream{1, 1, 0});
    CHECK(a.bi_act != b.bi_act);
    CHECK(a.iu_pas != b.iu_pas);
    // the four links use disjoint substreams
    CHECK(a.bi_pas != a.iu_pas);

    p.k1 = p.k2 = RicianFactor::los();
    const auto los_csi = statistical_csi(p, make_layout(surface, mixed));
    const auto c = sample_realization(p, los_csi, RngStream{1, 0, 0});
    const auto d = sample_realization(p, los_csi, RngStream{9, 3, 0});
    CHECK(c.bi_act == los_csi.los_bi_act);
    CHECK(c.iu_pas == los_csi.los_iu_pas);
    CHECK(c.bi_pas == d.bi_pas);

    CHECK_THROWS_AS(sample_realization(p, Allocation{5, 9}, make_layout(surface, mixed), RngStream{}), Error);
}
