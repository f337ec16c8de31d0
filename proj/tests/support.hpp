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


#ifndef HIRS_TESTS_SUPPORT_HPP
#define HIRS_TESTS_SUPPORT_HPP

#include "hirs/allocation.hpp"
#include "hirs/params.hpp"

#include <cmath>
#include <random>

namespace hirs::testing
{
    inline double uniform(std::mt19937_64 &g, double lo, double hi)
    {
        return std::uniform_real_distribution<double>(lo, hi)(g);
    }

    inline double log_uniform(std::mt19937_64 &g, double lo, double hi)
    {
        return std::exp(uniform(g, std::log(lo), std::log(hi)));
    }

    // Link, noise and cost parameters drawn over a wide valid range. P_I and W_0 are left at
    // the defaults for the caller to set.
    inline SystemParams draw_link(std::mt19937_64 &g)
    {
        SystemParams p = default_params();
        p.p_bs = dbm_to_watt(uniform(g, 0.0, 30.0));
        p.sigma2_amp = dbm_to_watt(uniform(g, -100.0, -70.0));
        p.sigma2_rx = dbm_to_watt(uniform(g, -100.0, -70.0));
        p.beta = db_to_linear(uniform(g, -40.0, -20.0));
        p.d_bi = uniform(g, 20.0, 200.0);
        p.d_iu = uniform(g, 5.0, 50.0);
        p.w_pas = uniform(g, 0.5, 2.0);
        p.w_act = p.w_pas * static_cast<double>(std::uniform_int_distribution<int>(2, 10)(g));
        p.alpha_min = 1.0;
        p.alpha_max = alpha_from_db(uniform(g, 14.0, 30.0), AlphaDbConvention::factor10);
        return p;
    }

    // Favorable draw where a single active element can spend the whole amplification budget
    // without exceeding alpha_max, so the power-limited alpha is within bounds for every
    // affordable n_act that reaches alpha_min.
    inline SystemParams draw_favorable(std::mt19937_64 &g, RicianFactor k)
    {
        for (;;)
        {
            SystemParams p = draw_link(g);
            p.k1 = p.k2 = k;
            const double x = amplification_draw(p);
            p.p_irs = x * log_uniform(g, 4.0 * p.alpha_min * p.alpha_min, p.alpha_max * p.alpha_max);
            const double w_sat = p.p_irs * p.w_act / (p.alpha_max * p.alpha_max * x);
            const double w_ah = thresholds(p).w_ah;
            p.w0 = log_uniform(g, std::max(w_sat, p.w_act) * 1.01, std::max(w_sat, w_ah) * 30.0);
            if (p.w0 / p.w_act > 2e5 || power_regime(p) != PowerRegime::Favorable)
                continue;
            return validate(p);
        }
    }
}

#endif
