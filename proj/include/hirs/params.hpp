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


#ifndef HIRS_PARAMS_HPP
#define HIRS_PARAMS_HPP

#include <cstdint>
#include <limits>
#include <string_view>

namespace hirs
{
    // Rician K factor. Pure line-of-sight is a distinguished state rather than a large number, so
    // the LoS/NLoS power weights come out as exactly 1 and 0.
    class RicianFactor
    {
    public:
        constexpr RicianFactor() = default;

        static RicianFactor linear(double k);
        static RicianFactor from_db(double k_db);
        static constexpr RicianFactor los()
        {
            RicianFactor r;
            r.los_ = true;
            return r;
        }

        constexpr bool is_los() const { return los_; }
        constexpr bool is_rayleigh() const { return !los_ && k_ == 0.0; }

        // +inf for LoS
        constexpr double value() const { return los_ ? std::numeric_limits<double>::infinity() : k_; }

        // K/(K+1)
        constexpr double los_weight() const { return los_ ? 1.0 : k_ / (k_ + 1.0); }
        // 1/(K+1)
        constexpr double nlos_weight() const { return los_ ? 0.0 : 1.0 / (k_ + 1.0); }

        friend constexpr bool operator==(const RicianFactor &, const RicianFactor &) = default;

    private:
        double k_ = 0.0;
        bool los_ = false;
    };

    enum class DbKind
    {
        power,
        amplitude
    };

    // How "[alpha_min, alpha_max] in dB" maps to the amplitude factor alpha.
    // factor10: alpha = 10^(dB/10); factor20: alpha = 10^(dB/20).
    enum class AlphaDbConvention
    {
        factor10,
        factor20
    };

    double dbm_to_watt(double dbm);
    double watt_to_dbm(double watt);
    double db_to_linear(double db, DbKind kind = DbKind::power);
    double alpha_from_db(double db, AlphaDbConvention convention);

    std::string_view convention_name(AlphaDbConvention convention);
    AlphaDbConvention parse_convention(std::string_view name);

    // Scalar system parameters, linear SI units throughout.
    struct SystemParams
    {
        double p_bs = 0.0;       // BS transmit power [W]
        double p_irs = 0.0;      // amplification power budget of the active sub-surface [W]
        double sigma2_amp = 0.0; // amplification noise power [W]
        double sigma2_rx = 0.0;  // receiver noise power [W]
        double beta = 0.0;       // channel power gain at 1 m
        double wavelength = 0.0; // [m]
        double d_bi = 0.0;       // BS-IRS distance [m]
        double d_iu = 0.0;       // IRS-user distance [m]
        RicianFactor k1;         // BS->IRS
        RicianFactor k2;         // IRS->user
        double alpha_min = 1.0;  // amplitude amplification bounds
        double alpha_max = 1.0;
        double w_act = 0.0; // cost per active element
        double w_pas = 0.0; // cost per passive element
        double w0 = 0.0;    // deployment budget
    };

    // Reference scenario: BS (0,0), IRS (60,0), user (60,20); 6 GHz; W_act = 5, W_pas = 1;
    // [alpha_min, alpha_max] = [0, 14] dB; beta = -30 dB; noise -80 dBm; P_B = 15 dBm;
    // P_I = 5 dBm; K = 10 dB on both hops; W_0 = 3000.
    SystemParams default_params(AlphaDbConvention convention = AlphaDbConvention::factor10);

    // Throws Error naming the first violated invariant; returns the input unchanged otherwise.
    const SystemParams &validate(const SystemParams &params);

    // beta / D_BI^2 and beta / d_IU^2
    inline double bs_irs_gain(const SystemParams &p) { return p.beta / (p.d_bi * p.d_bi); }
    inline double irs_user_gain(const SystemParams &p) { return p.beta / (p.d_iu * p.d_iu); }

    // P_B beta^2 / (D_BI^2 d_IU^2): received power through one unit-gain reflecting element.
    inline double cascaded_gain(const SystemParams &p) { return p.p_bs * bs_irs_gain(p) * irs_user_gain(p); }

    // Amplification power drawn per unit of alpha^2: P_B beta / D_BI^2 + sigma_I^2.
    inline double amplification_draw(const SystemParams &p) { return p.p_bs * bs_irs_gain(p) + p.sigma2_amp; }

    // sigma_I^2 beta / d_IU^2: amplification noise reaching the user per unit of alpha^2.
    inline double amp_noise_gain(const SystemParams &p) { return p.sigma2_amp * irs_user_gain(p); }

    struct Allocation
    {
        std::int64_t n_act = 0;
        std::int64_t n_pas = 0;

        double cost(const SystemParams &p) const
        {
            return static_cast<double>(n_act) * p.w_act + static_cast<double>(n_pas) * p.w_pas;
        }

        friend bool operator==(const Allocation &, const Allocation &) = default;
    };

    // Budget check with a relative slack of 1e-9 so that costs like 0.1 do not reject exact fits.
    bool fits_budget(const Allocation &alloc, const SystemParams &p);

    // floor(x) that tolerates x landing a few ulps below an integer
    std::int64_t floor_count(double x);

    // Largest passive count affordable after n_act active elements.
    std::int64_t passive_fill(const SystemParams &p, std::int64_t n_act);
}

#endif
