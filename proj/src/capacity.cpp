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


#include "hirs/capacity.hpp"

#include "hirs/error.hpp"

#include <cmath>
#include <string>

namespace hirs
{
    namespace
    {
        constexpr double kAlphaSlack = 1e-12;

        // Reflection coefficients alpha_n e^{j phi_n} (alpha = 1 for passive elements).
        struct Coefficients
        {
            ComplexVector act;
            ComplexVector pas;
        };

        Coefficients coefficients(const ReflectionConfig &cfg)
        {
            Coefficients c;
            c.act.resize(cfg.phases_act.size());
            c.pas.resize(cfg.phases_pas.size());
            for (std::size_t n = 0; n < c.act.size(); ++n)
                c.act[n] = std::polar(cfg.alphas[n], cfg.phases_act[n]);
            for (std::size_t n = 0; n < c.pas.size(); ++n)
                c.pas[n] = std::polar(1.0, cfg.phases_pas[n]);
            return c;
        }

        void require_lengths(const ReflectionConfig &cfg)
        {
            if (cfg.alphas.size() != cfg.phases_act.size())
                throw Error(ErrorKind::DimensionMismatch, "alphas and active phases differ in length");
        }

        void require_match(std::size_t channel, std::size_t config, const char *what)
        {
            if (channel != config)
                throw Error(ErrorKind::DimensionMismatch,
                            std::string(what) + ": channel has " + std::to_string(channel) + " entries, configuration " +
                                std::to_string(config));
        }

        // sum_n conj(iu_n) c_n bi_n
        Complex cascade(const ComplexVector &iu, const ComplexVector &c, const ComplexVector &bi)
        {
            Complex s{0.0, 0.0};
            for (std::size_t n = 0; n < c.size(); ++n)
                s += std::conj(iu[n]) * c[n] * bi[n];
            return s;
        }

        double snr_with(const ChannelRealization &r, const Coefficients &c, const SystemParams &p)
        {
            const Complex signal = cascade(r.iu_act, c.act, r.bi_act) + cascade(r.iu_pas, c.pas, r.bi_pas);
            double amp_noise = 0.0;
            for (std::size_t n = 0; n < c.act.size(); ++n)
                amp_noise += std::norm(r.iu_act[n]) * std::norm(c.act[n]);
            return p.p_bs * std::norm(signal) / (p.sigma2_amp * amp_noise + p.sigma2_rx);
        }

        void check_csi(const StatisticalCsi &csi, const ReflectionConfig &cfg)
        {
            require_lengths(cfg);
            require_match(csi.los_bi_act.size(), cfg.phases_act.size(), "BS->IRS active");
            require_match(csi.los_iu_act.size(), cfg.phases_act.size(), "IRS->user active");
            require_match(csi.los_bi_pas.size(), cfg.phases_pas.size(), "BS->IRS passive");
            require_match(csi.los_iu_pas.size(), cfg.phases_pas.size(), "IRS->user passive");
        }

        double sample_capacity(const SystemParams &p, const StatisticalCsi &csi, const Coefficients &c,
                               std::uint64_t seed, std::int64_t i)
        {
            const auto real = sample_realization(p, csi, RngStream{seed, static_cast<std::uint64_t>(i), 0});
            return std::log2(1.0 + snr_with(real, c, p));
        }

        double sum_alpha2(const ReflectionConfig &cfg)
        {
            double s = 0.0;
            for (double a : cfg.alphas)
                s += a * a;
            return s;
        }
    }

    void check_reflection(const ReflectionConfig &cfg, const SystemParams &p)
    {
        require_lengths(cfg);
        for (double a : cfg.alphas)
        {
            if (!std::isfinite(a) || a < p.alpha_min * (1.0 - kAlphaSlack) || a > p.alpha_max * (1.0 + kAlphaSlack))
                throw Error(ErrorKind::InvalidValue, "amplification factor " + std::to_string(a) + " outside [" +
                                                         std::to_string(p.alpha_min) + ", " +
                                                         std::to_string(p.alpha_max) + "]");
        }
    }

    CapacityEstimate summarize(std::span<const double> samples)
    {
        CapacityEstimate est;
        est.n_samples = static_cast<std::int64_t>(samples.size());
        if (samples.empty())
            return est;
        const double ref = samples[0];
        double sum = 0.0, sum_sq = 0.0;
        for (double x : samples)
        {
            const double d = x - ref;
            sum += d;
            sum_sq += d * d;
        }
        const auto n = static_cast<double>(samples.size());
        est.mean = ref + sum / n;
        if (samples.size() > 1)
        {
            const double var = std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0));
            est.std_error = std::sqrt(var / n);
        }
        return est;
    }

    double receiver_snr(const ChannelRealization &real, const ReflectionConfig &cfg, const SystemParams &p)
    {
        require_lengths(cfg);
        require_match(real.bi_act.size(), cfg.phases_act.size(), "BS->IRS active");
        require_match(real.iu_act.size(), cfg.phases_act.size(), "IRS->user active");
        require_match(real.bi_pas.size(), cfg.phases_pas.size(), "BS->IRS passive");
        require_match(real.iu_pas.size(), cfg.phases_pas.size(), "IRS->user passive");
        return snr_with(real, coefficients(cfg), p);
    }

    CapacityEstimate mc_ergodic_capacity(const SystemParams &p, const StatisticalCsi &csi, const ReflectionConfig &cfg,
                                         std::int64_t n_samples, std::uint64_t seed, Execution exec)
    {
        if (n_samples < 1)
            throw Error(ErrorKind::InvalidValue, "Monte Carlo needs at least one sample");
        check_csi(csi, cfg);
        const Coefficients c = coefficients(cfg);

        std::vector<double> values(static_cast<std::size_t>(n_samples));
        if (exec == Execution::parallel)
        {
#pragma omp parallel for schedule(static)
            for (std::int64_t i = 0; i < n_samples; ++i)
                values[static_cast<std::size_t>(i)] = sample_capacity(p, csi, c, seed, i);
        }
        else
        {
            for (std::int64_t i = 0; i < n_samples; ++i)
                values[static_cast<std::size_t>(i)] = sample_capacity(p, csi, c, seed, i);
        }
        return summarize(values);
    }

    CapacityEstimate mc_ergodic_capacity(const SystemParams &p, const Allocation &alloc, const SurfaceConfig &surface,
                                         const ReflectionConfig &cfg, std::int64_t n_samples, std::uint64_t seed,
                                         Execution exec)
    {
        return mc_ergodic_capacity(p, statistical_csi(p, make_layout(surface, alloc)), cfg, n_samples, seed, exec);
    }

    ApproxTerms approx_terms(const SystemParams &p, const ReflectionConfig &cfg, const StatisticalCsi &csi)
    {
        check_csi(csi, cfg);
        const Coefficients c = coefficients(cfg);

        const double a1 = csi.k1.los_weight(), b1 = csi.k1.nlos_weight();
        const double a2 = csi.k2.los_weight(), b2 = csi.k2.nlos_weight();
        const double g_bi = bs_irs_gain(p), g_iu = irs_user_gain(p);

        const Complex los = cascade(csi.los_iu_act, c.act, csi.los_bi_act) + cascade(csi.los_iu_pas, c.pas, csi.los_bi_pas);

        // ||Psi h_BI||^2, ||h_IU^H Psi||^2 and sum(alpha^2), per sub-surface
        double bi_act = 0.0, iu_act = 0.0, bi_pas = 0.0, iu_pas = 0.0;
        for (std::size_t n = 0; n < c.act.size(); ++n)
        {
            const double g = std::norm(c.act[n]);
            bi_act += g * std::norm(csi.los_bi_act[n]);
            iu_act += g * std::norm(csi.los_iu_act[n]);
        }
        for (std::size_t n = 0; n < c.pas.size(); ++n)
        {
            bi_pas += std::norm(csi.los_bi_pas[n]);
            iu_pas += std::norm(csi.los_iu_pas[n]);
        }
        const double a2_sum = sum_alpha2(cfg);
        const auto n_pas = static_cast<double>(c.pas.size());

        ApproxTerms t;
        t.x_l = p.p_bs * a1 * a2 * std::norm(los);
        t.x_nl_act = p.p_bs * (a1 * b2 * g_iu * bi_act + b1 * a2 * g_bi * iu_act + b1 * b2 * g_bi * g_iu * a2_sum);
        t.x_nl_pas = p.p_bs * (a1 * b2 * g_iu * bi_pas + b1 * a2 * g_bi * iu_pas + b1 * b2 * g_bi * g_iu * n_pas);
        t.z_l_act = p.sigma2_amp * a2 * iu_act;
        t.z_nl_act = p.sigma2_amp * b2 * a2_sum * g_iu;
        return t;
    }

    double approx_capacity(const ApproxTerms &t, const SystemParams &p)
    {
        const double signal = t.x_l + t.x_nl_act + t.x_nl_pas;
        const double noise = t.z_l_act + t.z_nl_act + p.sigma2_rx;
        return std::log2(1.0 + signal / noise);
    }

    AlignedGains aligned_gains(const SystemParams &p)
    {
        const double a1 = p.k1.los_weight(), b1 = p.k1.nlos_weight();
        const double a2 = p.k2.los_weight(), b2 = p.k2.nlos_weight();
        return {a1 * a2, a1 * b2 + b1 * a2 + b1 * b2};
    }

    double aligned_snr(const SystemParams &p, double sum_alpha, double sum_alpha2, double n_pas)
    {
        const AlignedGains g = aligned_gains(p);
        const double coherent = sum_alpha + n_pas;
        const double signal = (g.los * coherent * coherent + g.nlos * (sum_alpha2 + n_pas)) * cascaded_gain(p);
        return signal / (sum_alpha2 * amp_noise_gain(p) + p.sigma2_rx);
    }

    double aligned_capacity(const SystemParams &p, std::int64_t n_act, std::int64_t n_pas, double alpha)
    {
        if (n_act < 0 || n_pas < 0)
            throw Error(ErrorKind::InvalidValue, "element counts must be non-negative");
        if (n_act > 0 && (!std::isfinite(alpha) || alpha < p.alpha_min * (1.0 - kAlphaSlack) ||
                          alpha > p.alpha_max * (1.0 + kAlphaSlack)))
            throw Error(ErrorKind::InvalidValue, "amplification factor " + std::to_string(alpha) + " outside bounds");
        const auto n = static_cast<double>(n_act);
        const double a = n_act > 0 ? alpha : 0.0;
        return std::log2(1.0 + aligned_snr(p, n * a, n * a * a, static_cast<double>(n_pas)));
    }

    double mean_amplification_power(const SystemParams &p, const ReflectionConfig &cfg, const StatisticalCsi &csi)
    {
        require_lengths(cfg);
        require_match(csi.los_bi_act.size(), cfg.phases_act.size(), "BS->IRS active");
        if (cfg.alphas.empty())
            return 0.0;
        // E||Psi h_BI||^2 splits into the LoS part and the NLoS expectation sum(alpha^2) beta/D^2.
        double los = 0.0;
        for (std::size_t n = 0; n < cfg.alphas.size(); ++n)
            los += cfg.alphas[n] * cfg.alphas[n] * std::norm(csi.los_bi_act[n]);
        const double a2_sum = sum_alpha2(cfg);
        const double signal = csi.k1.los_weight() * los + csi.k1.nlos_weight() * a2_sum * bs_irs_gain(p);
        return p.p_bs * signal + p.sigma2_amp * a2_sum;
    }
}
