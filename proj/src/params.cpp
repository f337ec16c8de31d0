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


#include "hirs/params.hpp"

#include "hirs/error.hpp"

#include <cmath>
#include <string>

namespace hirs
{
    namespace
    {
        void require_finite(double x, const char *what)
        {
            if (!std::isfinite(x))
                throw Error(ErrorKind::NonFinite, std::string(what) + " must be finite");
        }

        void require_positive(double x, const char *what, ErrorKind kind)
        {
            require_finite(x, what);
            if (x <= 0.0)
                throw Error(kind, std::string(what) + " must be > 0, got " + std::to_string(x));
        }
    }

    RicianFactor RicianFactor::linear(double k)
    {
        if (std::isinf(k) && k > 0.0)
            return los();
        if (std::isnan(k))
            throw Error(ErrorKind::NonFinite, "Rician factor is NaN");
        if (k < 0.0)
            throw Error(ErrorKind::NegativeRicianFactor, "Rician factor must be >= 0, got " + std::to_string(k));
        RicianFactor r;
        r.k_ = k;
        return r;
    }

    RicianFactor RicianFactor::from_db(double k_db)
    {
        if (std::isinf(k_db) && k_db > 0.0)
            return los();
        require_finite(k_db, "Rician factor [dB]");
        return linear(std::pow(10.0, k_db / 10.0));
    }

    double dbm_to_watt(double dbm)
    {
        require_finite(dbm, "power [dBm]");
        return std::pow(10.0, dbm / 10.0) * 1e-3;
    }

    double watt_to_dbm(double watt)
    {
        require_positive(watt, "power [W]", ErrorKind::NonPositivePower);
        return 10.0 * std::log10(watt / 1e-3);
    }

    double db_to_linear(double db, DbKind kind)
    {
        require_finite(db, "ratio [dB]");
        return std::pow(10.0, db / (kind == DbKind::power ? 10.0 : 20.0));
    }

    double alpha_from_db(double db, AlphaDbConvention convention)
    {
        return db_to_linear(db, convention == AlphaDbConvention::factor10 ? DbKind::power : DbKind::amplitude);
    }

    std::string_view convention_name(AlphaDbConvention convention)
    {
        return convention == AlphaDbConvention::factor10 ? "factor10" : "factor20";
    }

    AlphaDbConvention parse_convention(std::string_view name)
    {
        if (name == "factor10")
            return AlphaDbConvention::factor10;
        if (name == "factor20")
            return AlphaDbConvention::factor20;
        throw Error(ErrorKind::InvalidValue, "alpha_db_convention must be factor10 or factor20, got '" + std::string(name) + "'");
    }

    SystemParams default_params(AlphaDbConvention convention)
    {
        SystemParams p;
        p.p_bs = dbm_to_watt(15.0);
        p.p_irs = dbm_to_watt(5.0);
        p.sigma2_amp = dbm_to_watt(-80.0);
        p.sigma2_rx = dbm_to_watt(-80.0);
        p.beta = db_to_linear(-30.0);
        p.wavelength = 0.05;
        p.d_bi = 60.0;
        p.d_iu = 20.0;
        p.k1 = RicianFactor::from_db(10.0);
        p.k2 = RicianFactor::from_db(10.0);
        p.alpha_min = alpha_from_db(0.0, convention);
        p.alpha_max = alpha_from_db(14.0, convention);
        p.w_act = 5.0;
        p.w_pas = 1.0;
        p.w0 = 3000.0;
        return p;
    }

    const SystemParams &validate(const SystemParams &p)
    {
        require_positive(p.p_bs, "p_bs", ErrorKind::NonPositivePower);
        require_positive(p.p_irs, "p_irs", ErrorKind::NonPositivePower);
        require_positive(p.sigma2_amp, "sigma2_amp", ErrorKind::NonPositivePower);
        require_positive(p.sigma2_rx, "sigma2_rx", ErrorKind::NonPositivePower);
        require_positive(p.beta, "beta", ErrorKind::NonPositiveQuantity);
        require_positive(p.wavelength, "wavelength", ErrorKind::NonPositiveQuantity);
        require_positive(p.d_bi, "d_bi", ErrorKind::NonPositiveQuantity);
        require_positive(p.d_iu, "d_iu", ErrorKind::NonPositiveQuantity);

        require_finite(p.alpha_min, "alpha_min");
        require_finite(p.alpha_max, "alpha_max");
        if (p.alpha_min < 1.0)
            throw Error(ErrorKind::AlphaMinBelowOne, "alpha_min must be >= 1, got " + std::to_string(p.alpha_min));
        if (!(p.alpha_min < p.alpha_max))
            throw Error(ErrorKind::AlphaBoundsInverted, "alpha_min must be < alpha_max");

        require_positive(p.w_act, "w_act", ErrorKind::NonPositiveCost);
        require_positive(p.w_pas, "w_pas", ErrorKind::NonPositiveCost);
        require_finite(p.w0, "w0");
        if (p.w0 < 0.0)
            throw Error(ErrorKind::NegativeBudget, "w0 must be >= 0, got " + std::to_string(p.w0));

        if (p.k1.value() < 0.0 || p.k2.value() < 0.0)
            throw Error(ErrorKind::NegativeRicianFactor, "Rician factors must be >= 0");
        return p;
    }

    bool fits_budget(const Allocation &alloc, const SystemParams &p)
    {
        if (alloc.n_act < 0 || alloc.n_pas < 0)
            return false;
        return alloc.cost(p) <= p.w0 * (1.0 + 1e-9) + 1e-12;
    }

    std::int64_t floor_count(double x)
    {
        if (x <= 0.0)
            return 0;
        return static_cast<std::int64_t>(std::floor(x * (1.0 + 1e-12) + 1e-9));
    }

    std::int64_t passive_fill(const SystemParams &p, std::int64_t n_act)
    {
        return floor_count((p.w0 - static_cast<double>(n_act) * p.w_act) / p.w_pas);
    }
}
