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


#include "hirs/allocation.hpp"

#include "hirs/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hirs
{
    namespace
    {
        constexpr double two_pi = 2.0 * std::numbers::pi;
        constexpr double kRelSlack = 1e-12;

        void require_los(const SystemParams &p, const char *what)
        {
            if (!p.k1.is_los() || !p.k2.is_los())
                throw Error(ErrorKind::ChannelModelViolation, std::string(what) + " requires pure LoS on both hops");
        }

        void require_favorable(const SystemParams &p, const char *what)
        {
            const PowerRegime r = power_regime(p);
            if (r != PowerRegime::Favorable)
                throw Error(ErrorKind::RegimeViolation,
                            std::string(what) + " requires the Favorable regime, got " + std::string(regime_name(r)));
        }

        double fold_phase(double x)
        {
            double phi = std::fmod(x, two_pi);
            if (phi <= 0.0)
                phi += two_pi;
            return phi;
        }

        std::vector<double> aligned_phases(const ComplexVector &iu, const ComplexVector &bi)
        {
            if (iu.size() != bi.size())
                throw Error(ErrorKind::DimensionMismatch, "LoS vectors of one sub-surface differ in length");
            std::vector<double> phases(iu.size());
            for (std::size_t n = 0; n < iu.size(); ++n)
                phases[n] = fold_phase(std::arg(iu[n]) - std::arg(bi[n]));
            return phases;
        }

        // Power-limited alpha for n_act elements and how it sits against the hardware range.
        AlphaChoice choose_alpha(const SystemParams &p, std::int64_t n_act)
        {
            AlphaChoice c;
            c.unclamped = std::sqrt(a_sum_budget(p) / static_cast<double>(n_act));
            if (c.unclamped < p.alpha_min * (1.0 - kRelSlack))
            {
                c.alpha = p.alpha_min;
                c.clamp = AlphaClamp::below_min;
            }
            else if (c.unclamped > p.alpha_max)
            {
                c.alpha = p.alpha_max;
                c.clamp = AlphaClamp::to_max;
            }
            else
                c.alpha = std::max(c.unclamped, p.alpha_min);
            return c;
        }

        double log_snr(double snr) { return std::log2(1.0 + snr); }

        OptimalDesign design_from(const SystemParams &p, const Allocation &alloc, const AllocationEval &e)
        {
            OptimalDesign d;
            d.alloc = alloc;
            d.alpha = e.alpha;
            d.capacity = e.capacity;
            d.regime = power_regime(p);
            d.a_sum = e.a_sum;
            d.alpha_clamped = e.clamp == AlphaClamp::to_max;
            return d;
        }

        double search_value(const SystemParams &p, std::int64_t n_act)
        {
            const AllocationEval e = evaluate_allocation(p, {n_act, passive_fill(p, n_act)});
            return e.feasible ? e.capacity : -std::numeric_limits<double>::infinity();
        }
    }

    std::string_view regime_name(PowerRegime regime)
    {
        switch (regime)
        {
        case PowerRegime::PassiveOnly:
            return "PassiveOnly";
        case PowerRegime::Favorable:
            return "Favorable";
        case PowerRegime::Saturated:
            return "Saturated";
        }
        return "unknown";
    }

    std::string_view branch_name(LosBranch branch)
    {
        switch (branch)
        {
        case LosBranch::none:
            return "none";
        case LosBranch::all_active:
            return "all_active";
        case LosBranch::interior:
            return "interior";
        case LosBranch::all_passive:
            return "all_passive";
        }
        return "unknown";
    }

    std::string_view architecture_name(Architecture a)
    {
        switch (a)
        {
        case Architecture::Active:
            return "Active";
        case Architecture::Hybrid:
            return "Hybrid";
        case Architecture::Passive:
            return "Passive";
        }
        return "unknown";
    }

    PowerRegime power_regime(const SystemParams &p)
    {
        const double x = amplification_draw(p);
        if (p.p_irs < p.alpha_min * p.alpha_min * x)
            return PowerRegime::PassiveOnly;
        if (p.p_irs >= p.w0 * p.alpha_max * p.alpha_max * x / p.w_act)
            return PowerRegime::Saturated;
        return PowerRegime::Favorable;
    }

    double a_sum_budget(const SystemParams &p) { return p.p_irs / amplification_draw(p); }

    AlphaChoice optimal_alpha(const SystemParams &p, std::int64_t n_act)
    {
        if (n_act < 1)
            throw Error(ErrorKind::InvalidValue, "optimal alpha needs n_act >= 1");
        if (power_regime(p) == PowerRegime::PassiveOnly)
            throw Error(ErrorKind::RegimeViolation, "amplification power cannot reach alpha_min");
        return choose_alpha(p, n_act);
    }

    PhasePair optimal_phases(const StatisticalCsi &csi)
    {
        return {aligned_phases(csi.los_iu_act, csi.los_bi_act), aligned_phases(csi.los_iu_pas, csi.los_bi_pas)};
    }

    ReflectionConfig aligned_reflection(const StatisticalCsi &csi, double alpha)
    {
        PhasePair ph = optimal_phases(csi);
        ReflectionConfig cfg;
        cfg.alphas.assign(ph.act.size(), alpha);
        cfg.phases_act = std::move(ph.act);
        cfg.phases_pas = std::move(ph.pas);
        return cfg;
    }

    double amp_noise_power(const SystemParams &p, std::int64_t n_act)
    {
        if (n_act < 0)
            throw Error(ErrorKind::InvalidValue, "n_act must be non-negative");
        return n_act > 0 ? a_sum_budget(p) * amp_noise_gain(p) : 0.0;
    }

    AllocationEval evaluate_allocation(const SystemParams &p, const Allocation &alloc)
    {
        if (alloc.n_act < 0 || alloc.n_pas < 0)
            throw Error(ErrorKind::InfeasibleAllocation, "element counts must be non-negative");
        if (!fits_budget(alloc, p))
            throw Error(ErrorKind::InfeasibleAllocation, "allocation (" + std::to_string(alloc.n_act) + ", " +
                                                             std::to_string(alloc.n_pas) + ") exceeds the budget");
        AllocationEval e;
        if (alloc.n_act == 0)
        {
            e.feasible = true;
            e.capacity = aligned_capacity(p, 0, alloc.n_pas, 0.0);
            return e;
        }
        const AlphaChoice c = choose_alpha(p, alloc.n_act);
        e.clamp = c.clamp;
        if (c.clamp == AlphaClamp::below_min)
            return e;
        e.feasible = true;
        e.alpha = c.alpha;
        e.a_sum = static_cast<double>(alloc.n_act) * c.alpha * c.alpha;
        e.capacity = aligned_capacity(p, alloc.n_act, alloc.n_pas, c.alpha);
        return e;
    }

    double capacity_opt(const SystemParams &p, std::int64_t n_act, std::int64_t n_pas)
    {
        const AllocationEval e = evaluate_allocation(p, {n_act, n_pas});
        if (!e.feasible)
            throw Error(ErrorKind::InfeasibleAllocation,
                        std::to_string(n_act) + " active elements cannot all reach alpha_min");
        return e.capacity;
    }

    double capacity_opt_continuous(const SystemParams &p, double n_act, double n_pas)
    {
        if (!(n_act >= 0.0) || !(n_pas >= 0.0))
            throw Error(ErrorKind::InvalidValue, "element counts must be non-negative");
        const double a = n_act > 0.0 ? a_sum_budget(p) : 0.0;
        return log_snr(aligned_snr(p, std::sqrt(a * n_act), a, n_pas));
    }

    OptimalDesign allocate_search(const SystemParams &p, Execution exec)
    {
        const std::int64_t n_max = power_regime(p) == PowerRegime::PassiveOnly ? 0 : floor_count(p.w0 / p.w_act);
        std::vector<double> values(static_cast<std::size_t>(n_max + 1));
        if (exec == Execution::parallel)
        {
#pragma omp parallel for schedule(static)
            for (std::int64_t n = 0; n <= n_max; ++n)
                values[static_cast<std::size_t>(n)] = search_value(p, n);
        }
        else
        {
            for (std::int64_t n = 0; n <= n_max; ++n)
                values[static_cast<std::size_t>(n)] = search_value(p, n);
        }

        std::int64_t best = 0;
        for (std::int64_t n = 1; n <= n_max; ++n)
            if (values[static_cast<std::size_t>(n)] > values[static_cast<std::size_t>(best)])
                best = n;

        const Allocation alloc{best, passive_fill(p, best)};
        return design_from(p, alloc, evaluate_allocation(p, alloc));
    }

    XiCoefficients xi_coefficients(const SystemParams &p)
    {
        const double a = a_sum_budget(p);
        const double r = p.w_act / p.w_pas;
        XiCoefficients xi;
        xi.xi1 = cascaded_gain(p) * r * r / (a * amp_noise_gain(p) + p.sigma2_rx);
        xi.xi2 = std::sqrt(a) / r;
        xi.xi3 = p.w0 / p.w_act;
        return xi;
    }

    double xi_objective(const XiCoefficients &xi, double n_act)
    {
        const double v = -n_act + xi.xi2 * std::sqrt(n_act) + xi.xi3;
        return xi.xi1 * v * v;
    }

    LosCapacities capacity_los_variants(const SystemParams &p)
    {
        require_los(p, "capacity_los_variants");
        const double a = a_sum_budget(p);
        const double n_pas = p.w0 / p.w_pas;
        const double n_act = p.w0 / p.w_act;
        const XiCoefficients xi = xi_coefficients(p);

        LosCapacities c;
        c.c_pas = log_snr(n_pas * n_pas * cascaded_gain(p) / p.sigma2_rx);
        c.c_act = log_snr(a * n_act * cascaded_gain(p) / (a * amp_noise_gain(p) + p.sigma2_rx));
        const double v = xi.xi2 * xi.xi2 / 4.0 + xi.xi3;
        c.c_hyb_interior = log_snr(xi.xi1 * v * v);
        const double w_ah = a * p.w_pas * p.w_pas / (4.0 * p.w_act);
        c.c_hyb = std::max(p.w0 < w_ah ? c.c_act : c.c_hyb_interior, c.c_pas);
        return c;
    }

    OptimalDesign allocate_los(const SystemParams &p)
    {
        require_los(p, "allocate_los");
        require_favorable(p, "allocate_los");

        const double a = a_sum_budget(p);
        const double w_ah = a * p.w_pas * p.w_pas / (4.0 * p.w_act);
        const LosCapacities c = capacity_los_variants(p);

        LosBranch branch;
        double n_act, n_pas, cap;
        if (p.w0 < w_ah)
        {
            branch = LosBranch::all_active;
            n_act = p.w0 / p.w_act;
            n_pas = 0.0;
            cap = c.c_act;
        }
        else
        {
            branch = LosBranch::interior;
            n_act = a * p.w_pas * p.w_pas / (4.0 * p.w_act * p.w_act);
            n_pas = p.w0 / p.w_pas - a * p.w_pas / (4.0 * p.w_act);
            cap = c.c_hyb_interior;
        }
        if (c.c_pas > cap)
        {
            branch = LosBranch::all_passive;
            n_act = 0.0;
            n_pas = p.w0 / p.w_pas;
            cap = c.c_pas;
        }

        const std::int64_t n_max = floor_count(p.w0 / p.w_act);
        const std::int64_t lo = std::min(floor_count(n_act), n_max);
        const std::int64_t candidates[] = {0, lo, std::min(lo + 1, n_max)};

        Allocation best_alloc{0, passive_fill(p, 0)};
        AllocationEval best = evaluate_allocation(p, best_alloc);
        for (std::int64_t n : candidates)
        {
            const Allocation alloc{n, passive_fill(p, n)};
            const AllocationEval e = evaluate_allocation(p, alloc);
            if (e.feasible && (e.capacity > best.capacity || (e.capacity == best.capacity && n < best_alloc.n_act)))
            {
                best = e;
                best_alloc = alloc;
            }
        }

        OptimalDesign d = design_from(p, best_alloc, best);
        d.branch = branch;
        d.n_act_continuous = n_act;
        d.n_pas_continuous = n_pas;
        d.capacity_continuous = cap;
        return d;
    }

    double amp_noise_ratio(const SystemParams &p) { return a_sum_budget(p) * amp_noise_gain(p) / p.sigma2_rx; }

    Thresholds thresholds(const SystemParams &p)
    {
        const double x = amplification_draw(p);
        const double scale = p.w_pas * p.w_pas / p.w_act;
        const double s0 = std::sqrt(p.sigma2_rx), si = std::sqrt(p.sigma2_amp);
        const double d = p.d_iu;

        Thresholds t;
        t.w_ah = scale * p.p_irs / (4.0 * x);
        t.w_ap = scale / (p.beta * p.sigma2_amp / (d * d * p.sigma2_rx) + x / p.p_irs);
        const double root = std::sqrt(p.sigma2_rx * d * d / (p.sigma2_amp * p.beta * p.beta) +
                                      p.p_irs / (p.p_bs * p.beta * p.beta / (p.d_bi * p.d_bi) + p.sigma2_amp * p.beta));
        t.w_hp = scale * p.sigma2_rx * d * d / (4.0 * p.sigma2_amp * p.beta) + scale * s0 * d / (4.0 * si) * root;
        return t;
    }

    Architecture select_architecture(const SystemParams &p, double w0)
    {
        require_los(p, "select_architecture");
        if (!std::isfinite(w0) || w0 < 0.0)
            throw Error(ErrorKind::NegativeBudget, "budget must be finite and >= 0");
        const Thresholds t = thresholds(p);
        if (!t.ordered())
            return w0 < t.w_ap ? Architecture::Active : Architecture::Passive;
        if (w0 < t.w_ah)
            return Architecture::Active;
        if (w0 <= t.w_hp)
            return Architecture::Hybrid;
        return Architecture::Passive;
    }

    double rayleigh_budget_threshold(const SystemParams &p)
    {
        const double a = a_sum_budget(p);
        return (a * p.w_pas * p.sigma2_rx - p.w_act * p.sigma2_rx) / (a * amp_noise_gain(p));
    }

    OptimalDesign allocate_rayleigh(const SystemParams &p)
    {
        if (!p.k1.is_rayleigh() || !p.k2.is_rayleigh())
            throw Error(ErrorKind::ChannelModelViolation, "allocate_rayleigh requires K = 0 on both hops");
        require_favorable(p, "allocate_rayleigh");

        const double a = a_sum_budget(p);
        const bool hybrid = p.w0 >= p.w_act && p.w0 < rayleigh_budget_threshold(p);
        const Allocation alloc{hybrid ? 1 : 0, passive_fill(p, hybrid ? 1 : 0)};

        AllocationEval e = evaluate_allocation(p, alloc);
        if (!e.feasible)
            throw Error(ErrorKind::Internal, "single active element infeasible in the Favorable regime");
        OptimalDesign d = design_from(p, alloc, e);
        d.n_act_continuous = static_cast<double>(alloc.n_act);
        d.n_pas_continuous = static_cast<double>(alloc.n_pas);
        d.capacity_continuous =
            hybrid ? log_snr((a + static_cast<double>(alloc.n_pas)) * cascaded_gain(p) / (a * amp_noise_gain(p) + p.sigma2_rx))
                   : log_snr(p.w0 / p.w_pas * cascaded_gain(p) / p.sigma2_rx);
        return d;
    }
}
