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


#include "hirs/output.hpp"

#include "hirs/error.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <variant>

namespace hirs
{
    namespace
    {
        using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

        Cell opt(const std::optional<double> &v) { return v ? Cell{*v} : Cell{}; }

        std::vector<Cell> cells(const SweepRow &r)
        {
            return {std::string(axis_name(r.axis)),
                    r.value,
                    opt(r.cap_hybrid_opt),
                    opt(r.cap_hybrid_equal),
                    opt(r.cap_all_active),
                    opt(r.cap_all_passive),
                    r.n_act_opt,
                    r.n_pas_opt,
                    opt(r.alpha_opt),
                    std::string(regime_name(r.regime)),
                    r.eval_n_act,
                    r.eval_n_pas,
                    opt(r.eval_alpha),
                    opt(r.cap_eval_approx),
                    opt(r.mc_mean),
                    opt(r.mc_std_error),
                    r.mc_samples ? Cell{*r.mc_samples} : Cell{}};
        }

        std::string format_double(double v)
        {
            if (std::isinf(v))
                return v > 0 ? "inf" : "-inf";
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return buf;
        }

        std::string csv_cell(const Cell &c)
        {
            struct Visitor
            {
                std::string operator()(std::monostate) const { return "NA"; }
                std::string operator()(double v) const { return format_double(v); }
                std::string operator()(std::int64_t v) const { return std::to_string(v); }
                std::string operator()(const std::string &s) const { return s; }
            };
            return std::visit(Visitor{}, c);
        }

        nlohmann::json json_cell(const Cell &c)
        {
            struct Visitor
            {
                nlohmann::json operator()(std::monostate) const { return nullptr; }
                // JSON has no infinity; the axis value of a pure-LoS point is written as "inf"
                nlohmann::json operator()(double v) const { return std::isinf(v) ? nlohmann::json(format_double(v)) : nlohmann::json(v); }
                nlohmann::json operator()(std::int64_t v) const { return v; }
                nlohmann::json operator()(const std::string &s) const { return s; }
            };
            return std::visit(Visitor{}, c);
        }
    }

    const std::vector<std::string> &sweep_columns()
    {
        static const std::vector<std::string> cols = {
            "axis",           "value",      "cap_hybrid_opt", "cap_hybrid_equal", "cap_all_active", "cap_all_passive",
            "n_act_opt",      "n_pas_opt",  "alpha_opt",      "regime",           "eval_n_act",     "eval_n_pas",
            "eval_alpha",     "cap_eval_approx", "mc_mean",   "mc_std_error",     "mc_samples"};
        return cols;
    }

    void write_csv(std::span<const SweepRow> rows, std::ostream &out)
    {
        const auto &cols = sweep_columns();
        for (std::size_t i = 0; i < cols.size(); ++i)
            out << (i ? "," : "") << cols[i];
        out << '\n';
        for (const auto &r : rows)
        {
            const auto cs = cells(r);
            for (std::size_t i = 0; i < cs.size(); ++i)
                out << (i ? "," : "") << csv_cell(cs[i]);
            out << '\n';
        }
    }

    void write_json(std::span<const SweepRow> rows, std::ostream &out)
    {
        const auto &cols = sweep_columns();
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto &r : rows)
        {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            const auto cs = cells(r);
            for (std::size_t i = 0; i < cs.size(); ++i)
                obj[cols[i]] = json_cell(cs[i]);
            arr.push_back(std::move(obj));
        }
        out << arr.dump(2) << '\n';
    }

    void write_rows(std::span<const SweepRow> rows, OutputFormat format, std::ostream &out)
    {
        if (format == OutputFormat::csv)
            write_csv(rows, out);
        else
            write_json(rows, out);
    }

    void write_output(std::span<const SweepRow> rows, const std::string &path, OutputFormat format)
    {
        if (path.empty())
        {
            write_rows(rows, format, std::cout);
            std::cout.flush();
            return;
        }
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
        write_rows(rows, format, out);
        out.flush();
        if (!out)
            throw Error(ErrorKind::IoError, "write to '" + path + "' failed");
    }
}
