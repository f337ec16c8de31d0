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


#ifndef HIRS_ALLOCATION_HPP
#define HIRS_ALLOCATION_HPP

#include "hirs/capacity.hpp"
#include "hirs/channel.hpp"
#include "hirs/params.hpp"

#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

namespace hirs
{
    // Where P_I sits relative to what the active elements can use.
    //   PassiveOnly: P_I < alpha_min^2 (P_B beta/D^2 + sigma_I^2), no element can reach alpha_min.
    //   Saturated:   P_I >= W_0 alpha_max^2 (P_B beta/D^2 + sigma_I^2) / W_act, every affordable
    //                element runs at alpha_max with power to spare.
    //   Favorable:   everything in between.
    enum class PowerRegime
    {
        PassiveOnly,
        Favorable,
        Saturated
    };

    std::string_view regime_name(PowerRegime regime);
    PowerRegime power_regime(const SystemParams &p);

    // P_I / (P_B beta/D^2 + sigma_I^2): the sum of alpha^2 the power budget supports.
    double a_sum_budget(const SystemParams &p);

    enum class AlphaClamp
    {
        none,
        to_max,   // power would allow more than alpha_max
        below_min // power cannot drive every element to alpha_min; allocation infeasible
    };

    struct AlphaChoice
    {
        double alpha = 0.0;     // within [alpha_min, alpha_max]
        double unclamped = 0.0; // sqrt(P_I / n_act / (P_B beta/D^2 + sigma_I^2))
        AlphaClamp clamp = AlphaClamp::none;
    };

    // Common amplitude factor that spends the whole power budget, clamped into the hardware range.
    // Throws for n_act < 1 and in the PassiveOnly regime.
    AlphaChoice optimal_alpha(const SystemParams &p, std::int64_t n_act);

    struct PhasePair
    {
        std::vector<double> act;
        std::vector<double> pas;
    };

    // arg([h_IU]_n) - arg([h_BI]_n) per element, folded into (0, 2pi].
    PhasePair optimal_phases(const StatisticalCsi &csi);

    // Aligned phases plus the same alpha on every active element.
    ReflectionConfig aligned_reflection(const StatisticalCsi &csi, double alpha);

    // Amplification noise at the user when alpha spends P_I exactly; zero without active elements.
    double amp_noise_power(const SystemParams &p, std::int64_t n_act);

    // Aligned capacity of one allocation under the clamped optimal alpha.
    struct AllocationEval
    {
        bool feasible = false;
        double capacity = 0.0;
        double alpha = 0.0; // 0 when n_act = 0
        double a_sum = 0.0; // n_act alpha^2
        AlphaClamp clamp = AlphaClamp::none;
    };

    // Throws InfeasibleAllocation when the allocation exceeds the budget. An allocation whose
    // active elements cannot reach alpha_min comes back with feasible = false.
    AllocationEval evaluate_allocation(const SystemParams &p, const Allocation &alloc);

    // Capacity with optimal phases and amplification. Throws InfeasibleAllocation for allocations
    // over budget or unable to reach alpha_min.
    double capacity_opt(const SystemParams &p, std::int64_t n_act, std::int64_t n_pas);

    // Same capacity on real-valued counts with sum(alpha^2) = A_sum held at the budget and no
    // per-element clamping; this is the relaxation the closed forms optimise.
    double capacity_opt_continuous(const SystemParams &p, double n_act, double n_pas);

    enum class LosBranch
    {
        none,
        all_active,
        interior,
        all_passive
    };

    std::string_view branch_name(LosBranch branch);

    struct OptimalDesign
    {
        Allocation alloc;
        double alpha = 0.0;
        double capacity = 0.0;
        PowerRegime regime = PowerRegime::Favorable;
        double a_sum = 0.0;
        bool alpha_clamped = false;

        // continuous optimum, when a closed form produced the design
        LosBranch branch = LosBranch::none;
        double n_act_continuous = std::numeric_limits<double>::quiet_NaN();
        double n_pas_continuous = std::numeric_limits<double>::quiet_NaN();
        double capacity_continuous = std::numeric_limits<double>::quiet_NaN();
    };

    // Exhaustive search over n_act = 0..floor(W_0/W_act) with the leftover budget filled by
    // passive elements. Ties go to the smaller n_act.
    OptimalDesign allocate_search(const SystemParams &p, Execution exec = Execution::parallel);

    struct XiCoefficients
    {
        double xi1 = 0.0;
        double xi2 = 0.0;
        double xi3 = 0.0;
    };

    XiCoefficients xi_coefficients(const SystemParams &p);

    // xi1 (-n + xi2 sqrt(n) + xi3)^2, the LoS SNR along the budget line.
    double xi_objective(const XiCoefficients &xi, double n_act);

    // Closed-form LoS allocation. The continuous optimum is the all-active or interior solution,
    // replaced by all-passive when that has the higher capacity; the integer design is the best
    // of {0, floor(n), floor(n) + 1} active elements.
    OptimalDesign allocate_los(const SystemParams &p);

    struct LosCapacities
    {
        double c_pas = 0.0;          // all budget on passive elements
        double c_act = 0.0;          // all budget on active elements
        double c_hyb_interior = 0.0; // interior stationary point of the budget line
        double c_hyb = 0.0;          // best over the whole budget line, passive end included
    };

    LosCapacities capacity_los_variants(const SystemParams &p);

    // Budget thresholds: below w_ah all-active beats any mix, above w_hp all-passive beats the
    // interior mix, and w_ap is where all-active and all-passive tie.
    struct Thresholds
    {
        double w_ah = 0.0;
        double w_ap = 0.0;
        double w_hp = 0.0;

        bool ordered() const { return w_ah < w_ap && w_ap < w_hp; }
    };

    Thresholds thresholds(const SystemParams &p);

    // A_sum sigma_I^2 beta / (d_IU^2 sigma_0^2). The thresholds satisfy w_ah < w_ap < w_hp
    // exactly when this is below 3; above 3 the order reverses and no mix beats both ends.
    double amp_noise_ratio(const SystemParams &p);

    enum class Architecture
    {
        Active,
        Hybrid,
        Passive
    };

    std::string_view architecture_name(Architecture a);

    // Best LoS architecture for budget w0 (the budget stored in p is ignored).
    Architecture select_architecture(const SystemParams &p, double w0);

    // Budget below which one active element plus passive fill beats all-passive under Rayleigh
    // fading.
    double rayleigh_budget_threshold(const SystemParams &p);

    OptimalDesign allocate_rayleigh(const SystemParams &p);
}

#endif
