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


#ifndef HIRS_CAPACITY_HPP
#define HIRS_CAPACITY_HPP

#include "hirs/channel.hpp"
#include "hirs/params.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace hirs
{
    // Phase shifts in (0, 2pi] for both sub-surfaces and the amplitude factor of every active
    // element.
    struct ReflectionConfig
    {
        std::vector<double> phases_act;
        std::vector<double> phases_pas;
        std::vector<double> alphas;

        std::int64_t n_act() const { return static_cast<std::int64_t>(phases_act.size()); }
        std::int64_t n_pas() const { return static_cast<std::int64_t>(phases_pas.size()); }
    };

    // Throws if the lengths disagree or an alpha falls outside [alpha_min, alpha_max].
    void check_reflection(const ReflectionConfig &cfg, const SystemParams &p);

    struct CapacityEstimate
    {
        double mean = 0.0;      // bits/s/Hz
        double std_error = 0.0; // bits/s/Hz
        std::int64_t n_samples = 0;
    };

    // Mean and standard error of per-sample capacities, summed in index order. Deviations are
    // taken from the first sample so that identical samples give exactly zero spread.
    CapacityEstimate summarize(std::span<const double> samples);

    // Signal and noise components of the closed-form capacity approximation [W].
    struct ApproxTerms
    {
        double x_l = 0.0;
        double x_nl_act = 0.0;
        double x_nl_pas = 0.0;
        double z_l_act = 0.0;
        double z_nl_act = 0.0;
    };

    // P_B |h_IU,act^H Psi_act h_BI,act + h_IU,pas^H Psi_pas h_BI,pas|^2 /
    //     (sigma_I^2 ||h_IU,act^H Psi_act||^2 + sigma_0^2)
    double receiver_snr(const ChannelRealization &real, const ReflectionConfig &cfg, const SystemParams &p);

    enum class Execution
    {
        serial,
        parallel
    };

    // E{log2(1 + snr)} over n_samples draws; sample i uses RngStream{seed, i}. The parallel and
    // serial paths produce bitwise-identical results for any thread count.
    CapacityEstimate mc_ergodic_capacity(const SystemParams &p, const StatisticalCsi &csi, const ReflectionConfig &cfg,
                                         std::int64_t n_samples, std::uint64_t seed,
                                         Execution exec = Execution::parallel);

    CapacityEstimate mc_ergodic_capacity(const SystemParams &p, const Allocation &alloc, const SurfaceConfig &surface,
                                         const ReflectionConfig &cfg, std::int64_t n_samples, std::uint64_t seed,
                                         Execution exec = Execution::parallel);

    // Closed-form evaluation, the NLoS expectations included; no sampling.
    ApproxTerms approx_terms(const SystemParams &p, const ReflectionConfig &cfg, const StatisticalCsi &csi);

    double approx_capacity(const ApproxTerms &terms, const SystemParams &p);

    // K-dependent coefficients after phase alignment:
    // los = K1 K2 / ((K1+1)(K2+1)), nlos = (K1+K2+1) / ((K1+1)(K2+1)).
    struct AlignedGains
    {
        double los = 0.0;
        double nlos = 0.0;
    };
    AlignedGains aligned_gains(const SystemParams &p);

    // SNR with aligned phases, written in terms of sum(alpha), sum(alpha^2) and the passive
    // count. All three may be non-integer, which is how the continuous relaxation is evaluated.
    double aligned_snr(const SystemParams &p, double sum_alpha, double sum_alpha2, double n_pas);

    // Capacity with aligned phases and a common amplitude factor on every active element.
    double aligned_capacity(const SystemParams &p, std::int64_t n_act, std::int64_t n_pas, double alpha);

    // Average power drawn by the active elements [W]; zero without active elements.
    double mean_amplification_power(const SystemParams &p, const ReflectionConfig &cfg, const StatisticalCsi &csi);
}

#endif
