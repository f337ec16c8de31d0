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


#ifndef HIRS_CONFIG_HPP
#define HIRS_CONFIG_HPP

#include "hirs/channel.hpp"
#include "hirs/params.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hirs
{
    enum class OutputFormat
    {
        csv,
        json
    };

    std::string_view format_name(OutputFormat f);
    OutputFormat parse_format(std::string_view name);

    enum class SweepAxis
    {
        none,
        budget,     // W_0
        rho,        // share of the budget spent on active elements
        rician_db,  // K on both hops [dB], "inf" for pure LoS
        p_irs_dbm,  // amplification power [dBm]
        cost_ratio, // W_act / W_pas with W_pas held fixed
        n_elements  // N active plus N passive, budget ignored at the evaluation point
    };

    std::string_view axis_name(SweepAxis a);
    SweepAxis parse_axis(std::string_view name);

    // A complete scenario: system parameters, surface geometry, sweep, Monte Carlo and output
    // settings.
    struct ScenarioConfig
    {
        AlphaDbConvention convention = AlphaDbConvention::factor10;
        SystemParams params;
        SurfaceConfig surface;

        SweepAxis sweep_axis = SweepAxis::none;
        std::vector<double> sweep_values;

        std::int64_t mc_samples = 0; // 0 disables Monte Carlo
        std::uint64_t seed = 1;

        std::string output_path; // empty writes to stdout
        OutputFormat output_format = OutputFormat::csv;
    };

    ScenarioConfig default_config();

    // Flat JSON object. Keys are the SystemParams field names; powers also accept *_dbm and
    // ratios *_db variants, Rician factors accept "inf". Positions (bs_pos, irs_pos, user_pos as
    // [x, y]) set both the distances and the angles. An empty document gives the default scenario.
    ScenarioConfig parse_config(std::string_view text);

    ScenarioConfig load_config(const std::filesystem::path &path);

    // Directory holding the fig3..fig9 presets: $HIRS_PRESET_DIR if set, else the build-time
    // location.
    std::filesystem::path preset_dir();
    std::filesystem::path preset_path(std::string_view name);
}

#endif
