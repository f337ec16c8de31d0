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


#include "hirs/error.hpp"
#include "hirs/params.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>

using namespace hirs;
using Catch::Matchers::WithinRel;

namespace
{
    ErrorKind kind_of(const SystemParams &p)
    {
        try
        {
            validate(p);
        }
        catch (const Error &e)
        {
            return e.kind();
        }
        FAIL("validate accepted invalid parameters");
        return ErrorKind::Internal;
    }
}

TEST_CASE("dBm to watt", "[params]")
{
    CHECK(dbm_to_watt(0.0) == 1e-3);
    CHECK_THAT(dbm_to_watt(15.0), WithinRel(0.031622776601683794, 1e-15));
    CHECK_THAT(dbm_to_watt(-80.0), WithinRel(1e-11, 1e-15));
    CHECK_THAT(watt_to_dbm(dbm_to_watt(-37.25)), WithinRel(-37.25, 1e-14));
    CHECK_THROWS_AS(dbm_to_watt(std::numeric_limits<double>::quiet_NaN()), Error);
    CHECK_THROWS_AS(watt_to_dbm(0.0), Error);
}

TEST_CASE("dB to linear", "[params]")
{
    CHECK(db_to_linear(0.0) == 1.0);
    CHECK_THAT(db_to_linear(-30.0), WithinRel(1e-3, 1e-15));
    CHECK_THAT(db_to_linear(14.0, DbKind::amplitude), WithinRel(5.011872336272722, 1e-15));
    CHECK_THAT(alpha_from_db(14.0, AlphaDbConvention::factor10), WithinRel(25.118864315095795, 1e-15));
    CHECK_THAT(alpha_from_db(14.0, AlphaDbConvention::factor20), WithinRel(5.011872336272722, 1e-15));
    CHECK_THROWS_AS(db_to_linear(std::numeric_limits<double>::infinity()), Error);
    CHECK(parse_convention("factor20") == AlphaDbConvention::factor20);
    CHECK_THROWS_AS(parse_convention("factor30"), Error);
}

TEST_CASE("Rician factor weights", "[params]")
{
    const auto los = RicianFactor::from_db(std::numeric_limits<double>::infinity());
    CHECK(los.is_los());
    CHECK(los.los_weight() == 1.0);
    CHECK(los.nlos_weight() == 0.0);
    CHECK(std::isinf(los.value()));

    const auto ray = RicianFactor::linear(0.0);
    CHECK(ray.is_rayleigh());
    CHECK(ray.los_weight() == 0.0);
    CHECK(ray.nlos_weight() == 1.0);

    const auto k10 = RicianFactor::from_db(10.0);
    CHECK_THAT(k10.value(), WithinRel(10.0, 1e-15));
    CHECK_THAT(k10.los_weight() + k10.nlos_weight(), WithinRel(1.0, 1e-15));
    CHECK_THAT(k10.los_weight(), WithinRel(10.0 / 11.0, 1e-15));

    CHECK_THROWS_AS(RicianFactor::linear(-0.1), Error);
}

TEST_CASE("reference scenario", "[params]")
{
    const SystemParams p = default_params();
    CHECK_NOTHROW(validate(p));
    CHECK(p.w_act == 5.0);
    CHECK(p.w_pas == 1.0);
    CHECK(p.w0 == 3000.0);
    CHECK(p.d_bi == 60.0);
    CHECK(p.d_iu == 20.0);
    CHECK(p.alpha_min == 1.0);
    CHECK_THAT(p.alpha_max, WithinRel(25.118864315095795, 1e-15));
    CHECK_THAT(p.p_irs, WithinRel(3.1622776601683794e-3, 1e-15));
    CHECK_THAT(p.sigma2_rx, WithinRel(1e-11, 1e-15));

    // P_B beta / D^2 + sigma_I^2 and the derived gains
    CHECK_THAT(amplification_draw(p), WithinRel(0.031622776601683794 * 1e-3 / 3600.0 + 1e-11, 1e-14));
    CHECK_THAT(amp_noise_gain(p), WithinRel(1e-11 * 1e-3 / 400.0, 1e-14));
    CHECK_THAT(cascaded_gain(p), WithinRel(0.031622776601683794 * 1e-6 / (3600.0 * 400.0), 1e-14));
}

TEST_CASE("validation names the violated invariant", "[params]")
{
    SystemParams p = default_params();

    p.alpha_min = 0.5;
    CHECK(kind_of(p) == ErrorKind::AlphaMinBelowOne);
    p = default_params();
    p.alpha_max = p.alpha_min;
    CHECK(kind_of(p) == ErrorKind::AlphaBoundsInverted);
    p = default_params();
    p.w0 = -1.0;
    CHECK(kind_of(p) == ErrorKind::NegativeBudget);
    p = default_params();
    p.p_bs = 0.0;
    CHECK(kind_of(p) == ErrorKind::NonPositivePower);
    p = default_params();
    p.sigma2_amp = -1.0;
    CHECK(kind_of(p) == ErrorKind::NonPositivePower);
    p = default_params();
    p.d_iu = 0.0;
    CHECK(kind_of(p) == ErrorKind::NonPositiveQuantity);
    p = default_params();
    p.w_pas = 0.0;
    CHECK(kind_of(p) == ErrorKind::NonPositiveCost);
    p = default_params();
    p.beta = std::numeric_limits<double>::infinity();
    CHECK(kind_of(p) == ErrorKind::NonFinite);
}

TEST_CASE("budget arithmetic", "[params]")
{
    SystemParams p = default_params();
    CHECK(fits_budget({600, 0}, p));
    CHECK(fits_budget({0, 3000}, p));
    CHECK_FALSE(fits_budget({600, 1}, p));
    CHECK_FALSE(fits_budget({-1, 0}, p));
    CHECK(passive_fill(p, 210) == 1950);
    CHECK(passive_fill(p, 600) == 0);

    CHECK(floor_count(2.9999999999999996) == 3);
    CHECK(floor_count(2.5) == 2);
    CHECK(floor_count(-4.0) == 0);

    // costs that are not exactly representable
    p.w_pas = 0.1;
    p.w_act = 0.3;
    p.w0 = 0.9;
    CHECK(passive_fill(p, 0) == 9);
    CHECK(fits_budget({3, 0}, p));
    CHECK_FALSE(fits_budget({3, 1}, p));
}
