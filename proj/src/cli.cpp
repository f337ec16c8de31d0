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


#include "hirs/cli.hpp"

#include "hirs/allocation.hpp"
#include "hirs/config.hpp"
#include "hirs/error.hpp"
#include "hirs/output.hpp"
#include "hirs/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hirs
{
    namespace
    {
        struct Common
        {
            std::string config;
            std::string preset;
            std::string out;
            std::string format;
            std::optional<std::uint64_t> seed;
            std::optional<std::int64_t> samples;
            int threads = 0;
        };

        void add_common(CLI::App *cmd, Common &c)
        {
            auto *config = cmd->add_option("--config", c.config, "scenario config (JSON)");
            auto *preset = cmd->add_option("--preset", c.preset, "named preset fig3..fig9");
            config->excludes(preset);
            cmd->add_option("--out", c.out, "output path (default stdout)");
            cmd->add_option("--format", c.format, "csv|json for sweep, text|json otherwise");
            cmd->add_option("--seed", c.seed, "Monte Carlo seed");
            cmd->add_option("--samples", c.samples, "Monte Carlo samples")->check(CLI::NonNegativeNumber);
            cmd->add_option("--threads", c.threads, "OpenMP threads (0 keeps the runtime default)")
                ->check(CLI::NonNegativeNumber);
        }

        ScenarioConfig resolve(const Common &c)
        {
            ScenarioConfig cfg = default_config();
            if (!c.preset.empty())
                cfg = load_config(preset_path(c.preset));
            else if (!c.config.empty())
                cfg = load_config(c.config);
            if (c.seed)
                cfg.seed = *c.seed;
            if (c.samples)
                cfg.mc_samples = *c.samples;
            if (!c.out.empty())
                cfg.output_path = c.out;
            if (c.threads > 0)
                omp_set_num_threads(c.threads);
            return cfg;
        }

        std::string num(double v)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }

        // Ordered key/value report printed as key=value lines or one JSON object.
        class Report
        {
        public:
            using Value = std::variant<double, std::int64_t, bool, std::string>;

            void add(std::string key, Value v) { items_.emplace_back(std::move(key), std::move(v)); }

            void print(std::ostream &os, bool as_json) const
            {
                if (as_json)
                {
                    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
                    for (const auto &[k, v] : items_)
                        std::visit([&](const auto &x) { obj[k] = x; }, v);
                    os << obj.dump(2) << '\n';
                    return;
                }
                for (const auto &[k, v] : items_)
                {
                    os << k << '=';
                    std::visit(
                        [&](const auto &x) {
                            using T = std::decay_t<decltype(x)>;
                            if constexpr (std::is_same_v<T, double>)
                                os << num(x);
                            else if constexpr (std::is_same_v<T, bool>)
                                os << (x ? "true" : "false");
                            else
                                os << x;
                        },
                        v);
                    os << '\n';
                }
            }

        private:
            std::vector<std::pair<std::string, Value>> items_;
        };

        bool report_json(const Common &c)
        {
            if (c.format.empty() || c.format == "text")
                return false;
            if (c.format == "json")
                return true;
            throw Error(ErrorKind::InvalidValue, "format must be text or json, got '" + c.format + "'");
        }

        void add_design(Report &r, const std::string &prefix, const OptimalDesign &d)
        {
            r.add(prefix + "n_act", d.alloc.n_act);
            r.add(prefix + "n_pas", d.alloc.n_pas);
            r.add(prefix + "alpha", d.alpha);
            r.add(prefix + "capacity", d.capacity);
            r.add(prefix + "a_sum", d.a_sum);
            r.add(prefix + "alpha_clamped", d.alpha_clamped);
        }

        void emit(const Report &r, const Common &c, const ScenarioConfig &cfg, std::ostream &out)
        {
            const bool as_json = report_json(c);
            if (cfg.output_path.empty())
            {
                r.print(out, as_json);
                return;
            }
            std::ofstream f(cfg.output_path, std::ios::binary | std::ios::trunc);
            if (!f)
                throw Error(ErrorKind::IoError, "cannot open '" + cfg.output_path + "' for writing");
            r.print(f, as_json);
        }

        void run_solve(const Common &c, std::ostream &out)
        {
            const ScenarioConfig cfg = resolve(c);
            const SystemParams &p = cfg.params;
            Report r;
            r.add("regime", std::string(regime_name(power_regime(p))));
            add_design(r, "", allocate_search(p));

            const bool favorable = power_regime(p) == PowerRegime::Favorable;
            if (p.k1.is_los() && p.k2.is_los() && favorable)
            {
                const OptimalDesign d = allocate_los(p);
                r.add("closed_form_branch", std::string(branch_name(d.branch)));
                r.add("closed_form_n_act_continuous", d.n_act_continuous);
                r.add("closed_form_n_pas_continuous", d.n_pas_continuous);
                r.add("closed_form_capacity_continuous", d.capacity_continuous);
                add_design(r, "closed_form_", d);
            }
            else if (p.k1.is_rayleigh() && p.k2.is_rayleigh() && favorable)
            {
                const OptimalDesign d = allocate_rayleigh(p);
                r.add("closed_form_capacity_continuous", d.capacity_continuous);
                add_design(r, "closed_form_", d);
            }
            emit(r, c, cfg, out);
        }

        void run_thresholds(const Common &c, std::ostream &out)
        {
            const ScenarioConfig cfg = resolve(c);
            const SystemParams &p = cfg.params;
            const Thresholds t = thresholds(p);
            Report r;
            r.add("w_ah", t.w_ah);
            r.add("w_ap", t.w_ap);
            r.add("w_hp", t.w_hp);
            r.add("ordered", t.ordered());
            r.add("amp_noise_ratio", amp_noise_ratio(p));
            r.add("regime", std::string(regime_name(power_regime(p))));
            if (p.k1.is_los() && p.k2.is_los())
                r.add("architecture", std::string(architecture_name(select_architecture(p, p.w0))));
            emit(r, c, cfg, out);
        }

        void run_capacity(const Common &c, std::optional<std::int64_t> n_act, std::optional<std::int64_t> n_pas,
                          std::ostream &out)
        {
            ScenarioConfig cfg = resolve(c);
            const SystemParams &p = cfg.params;
            Allocation alloc = allocate_search(p).alloc;
            if (n_act)
                alloc.n_act = *n_act;
            if (n_pas)
                alloc.n_pas = *n_pas;
            else if (n_act)
                alloc.n_pas = passive_fill(p, alloc.n_act);

            const AllocationEval e = evaluate_allocation(p, alloc);
            if (!e.feasible)
                throw Error(ErrorKind::InfeasibleAllocation,
                            std::to_string(alloc.n_act) + " active elements cannot all reach alpha_min");

            const StatisticalCsi csi = statistical_csi(p, make_layout(cfg.surface, alloc));
            const ReflectionConfig refl = aligned_reflection(csi, e.alpha);
            const std::int64_t samples = cfg.mc_samples > 0 ? cfg.mc_samples : 1000;
            const CapacityEstimate est = mc_ergodic_capacity(p, csi, refl, samples, cfg.seed);

            Report r;
            r.add("n_act", alloc.n_act);
            r.add("n_pas", alloc.n_pas);
            r.add("alpha", e.alpha);
            r.add("cap_approx", approx_capacity(approx_terms(p, refl, csi), p));
            r.add("mc_mean", est.mean);
            r.add("mc_std_error", est.std_error);
            r.add("mc_samples", est.n_samples);
            r.add("seed", static_cast<std::int64_t>(cfg.seed));
            emit(r, c, cfg, out);
        }

        void run_sweep_cmd(const Common &c)
        {
            ScenarioConfig cfg = resolve(c);
            if (!c.format.empty())
                cfg.output_format = parse_format(c.format);
            const auto rows = run_sweep(cfg);
            write_output(rows, cfg.output_path, cfg.output_format);
        }

        std::string strip_kind(const Error &e)
        {
            const std::string msg = e.what();
            const std::string prefix = std::string(kind_name(e.kind())) + ": ";
            return msg.rfind(prefix, 0) == 0 ? msg.substr(prefix.size()) : msg;
        }
    }

    int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Capacity and element-allocation simulator for hybrid active-passive IRS links", "hirs"};
        app.require_subcommand(1);

        Common common;
        std::optional<std::int64_t> n_act, n_pas;

        auto *solve = app.add_subcommand("solve", "optimal allocation for a scenario");
        auto *sweep = app.add_subcommand("sweep", "run a parameter sweep and write plot data");
        auto *capacity = app.add_subcommand("capacity", "Monte Carlo vs closed-form capacity at one allocation");
        auto *thr = app.add_subcommand("thresholds", "budget thresholds and power regime");
        for (auto *cmd : {solve, sweep, capacity, thr})
            add_common(cmd, common);
        capacity->add_option("--n-act", n_act, "active elements (default: search optimum)")
            ->check(CLI::NonNegativeNumber);
        capacity->add_option("--n-pas", n_pas, "passive elements (default: fill the budget)")
            ->check(CLI::NonNegativeNumber);

        if (argc <= 1)
        {
            err << app.help();
            return 2;
        }
        try
        {
            app.parse(argc, argv);
        }
        catch (const CLI::CallForHelp &)
        {
            out << app.help();
            return 0;
        }
        catch (const CLI::CallForAllHelp &)
        {
            out << app.help("", CLI::AppFormatMode::All);
            return 0;
        }
        catch (const CLI::ParseError &e)
        {
            err << "error: kind=UsageError message=" << e.what() << '\n' << app.help();
            return 2;
        }

        try
        {
            if (*solve)
                run_solve(common, out);
            else if (*sweep)
                run_sweep_cmd(common);
            else if (*capacity)
                run_capacity(common, n_act, n_pas, out);
            else
                run_thresholds(common, out);
        }
        catch (const Error &e)
        {
            err << "error: kind=" << kind_name(e.kind()) << " message=" << strip_kind(e) << '\n';
            return 1;
        }
        catch (const std::exception &e)
        {
            err << "error: kind=Internal message=" << e.what() << '\n';
            return 1;
        }
        return 0;
    }
}
