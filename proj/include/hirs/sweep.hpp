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


#ifndef HIRS_SWEEP_HPP
#define HIRS_SWEEP_HPP

#include "hirs/allocation.hpp"
#include "hirs/capacity.hpp"
#include "hirs/config.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hirs
{
    // One sweep point. Empty optionals are written as NA (CSV) or null (JSON).
    struct SweepRow
    {
        SweepAxis axis = SweepAxis::none;
        double value = 0.0;

        std::optional<double> cap_hybrid_opt;
        std::optional<double> cap_hybrid_equal;
        std::optional<double> cap_all_active;
        std::optional<double> cap_all_passive;

        std::int64_t n_act_opt = 0;
        std::int64_t n_pas_opt = 0;
        std::optional<double> alpha_opt;
        PowerRegime regime = PowerRegime::Favorable;

        // allocation at which the approximation and Monte Carlo are evaluated
        std::int64_t eval_n_act = 0;
        std::int64_t eval_n_pas = 0;
        std::optional<double> eval_alpha;
        std::optional<double> cap_eval_approx;

        std::optional<double> mc_mean;
        std::optional<double> mc_std_error;
        std::optional<std::int64_t> mc_samples;
    };

    // Parameters of the scenario with the sweep axis set to value.
    SystemParams point_params(const ScenarioConfig &cfg, double value);

    // Allocation of a rho point: floor(rho W_0 / W_act) active elements, the rest passive.
    Allocation rho_allocation(const SystemParams &p, double rho);

    SweepRow evaluate_point(const ScenarioConfig &cfg, double value, Execution exec = Execution::parallel);

    // One row per sweep value, in order.
    std::vector<SweepRow> run_sweep(const ScenarioConfig &cfg, Execution exec = Execution::parallel);
}

#endif
