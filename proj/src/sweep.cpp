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


#include "hirs/sweep.hpp"

#include "hirs/error.hpp"

#include <cmath>
#include <string>

namespace hirs
{
    namespace
    {
        std::optional<double> scheme_capacity(const SystemParams &p, const Allocation &alloc)
        {
            const AllocationEval e = evaluate_allocation(p, alloc);
            if (!e.feasible)
                return std::nullopt;
            return e.capacity;
        }

        std::int64_t whole(double v, const char *what)
        {
            if (!std::isfinite(v) || v < 0.0 || v != std::floor(v))
                throw Error(ErrorKind::InvalidValue, std::string(what) + " values must be non-negative integers");
            return static_cast<std::int64_t>(v);
        }

        // The evaluation allocation is not required to fit the budget (n_elements sweeps).
        std::optional<double> eval_alpha(const SystemParams &p, std::int64_t n_act)
        {
            if (n_act == 0)
                return 0.0;
            const double a = std::sqrt(a_sum_budget(p) / static_cast<double>(n_act));
            if (a < p.alpha_min * (1.0 - 1e-12))
                return std::nullopt;
            return std::clamp(a, p.alpha_min, p.alpha_max);
        }
    }

    SystemParams point_params(const ScenarioConfig &cfg, double v)
    {
        SystemParams p = cfg.params;
        switch (cfg.sweep_axis)
        {
        case SweepAxis::budget:
            p.w0 = v;
            break;
        case SweepAxis::rician_db:
            p.k1 = p.k2 = RicianFactor::from_db(v);
            break;
        case SweepAxis::p_irs_dbm:
            p.p_irs = dbm_to_watt(v);
            break;
        case SweepAxis::cost_ratio:
            p.w_act = v * p.w_pas;
            break;
        case SweepAxis::rho:
            if (!(v >= 0.0 && v <= 1.0))
                throw Error(ErrorKind::InvalidValue, "rho values must lie in [0, 1]");
            break;
        case SweepAxis::n_elements:
            whole(v, "n_elements");
            break;
        case SweepAxis::none:
            throw Error(ErrorKind::InvalidValue, "no sweep axis configured");
        }
        return validate(p);
    }

    Allocation rho_allocation(const SystemParams &p, double rho)
    {
        const std::int64_t n_act = floor_count(rho * p.w0 / p.w_act);
        return {n_act, passive_fill(p, n_act)};
    }

    SweepRow evaluate_point(const ScenarioConfig &cfg, double v, Execution exec)
    {
        const SystemParams p = point_params(cfg, v);
        SweepRow row;
        row.axis = cfg.sweep_axis;
        row.value = v;

        const OptimalDesign opt = allocate_search(p, exec);
        row.cap_hybrid_opt = opt.capacity;
        row.n_act_opt = opt.alloc.n_act;
        row.n_pas_opt = opt.alloc.n_pas;
        if (opt.alloc.n_act > 0)
            row.alpha_opt = opt.alpha;
        row.regime = opt.regime;

        row.cap_hybrid_equal = scheme_capacity(p, {floor_count(p.w0 / 2.0 / p.w_act), floor_count(p.w0 / 2.0 / p.w_pas)});
        row.cap_all_active = scheme_capacity(p, {floor_count(p.w0 / p.w_act), 0});
        row.cap_all_passive = scheme_capacity(p, {0, floor_count(p.w0 / p.w_pas)});

        Allocation eval = opt.alloc;
        if (cfg.sweep_axis == SweepAxis::rho)
            eval = rho_allocation(p, v);
        else if (cfg.sweep_axis == SweepAxis::n_elements)
            eval = {whole(v, "n_elements"), whole(v, "n_elements")};
        row.eval_n_act = eval.n_act;
        row.eval_n_pas = eval.n_pas;

        const std::optional<double> alpha = eval_alpha(p, eval.n_act);
        if (!alpha)
            return row;
        if (eval.n_act > 0)
            row.eval_alpha = *alpha;

        const StatisticalCsi csi = statistical_csi(p, make_layout(cfg.surface, eval));
        const ReflectionConfig refl = aligned_reflection(csi, *alpha);
        row.cap_eval_approx = approx_capacity(approx_terms(p, refl, csi), p);

        if (cfg.mc_samples > 0)
        {
            const CapacityEstimate est = mc_ergodic_capacity(p, csi, refl, cfg.mc_samples, cfg.seed, exec);
            row.mc_mean = est.mean;
            row.mc_std_error = est.std_error;
            row.mc_samples = est.n_samples;
        }
        return row;
    }

    std::vector<SweepRow> run_sweep(const ScenarioConfig &cfg, Execution exec)
    {
        if (cfg.sweep_axis == SweepAxis::none)
            throw Error(ErrorKind::InvalidValue, "no sweep axis configured");
        std::vector<SweepRow> rows;
        rows.reserve(cfg.sweep_values.size());
        for (double v : cfg.sweep_values)
            rows.push_back(evaluate_point(cfg, v, exec));
        return rows;
    }
}
