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


#include "hirs/config.hpp"

#include "hirs/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#ifndef HIRS_DEFAULT_PRESET_DIR
#define HIRS_DEFAULT_PRESET_DIR "presets"
#endif

namespace hirs
{
    namespace
    {
        using json = nlohmann::json;

        std::string describe(const json &v) { return v.dump(); }

        double number(const json &v, const std::string &key)
        {
            if (!v.is_number())
                throw Error(ErrorKind::InvalidValue, key + " must be a number, got " + describe(v));
            return v.get<double>();
        }

        // number or the string "inf"
        double extended_number(const json &v, const std::string &key)
        {
            if (v.is_string() && (v.get<std::string>() == "inf" || v.get<std::string>() == "Infinity"))
                return std::numeric_limits<double>::infinity();
            if (!v.is_number())
                throw Error(ErrorKind::InvalidValue, key + " must be a number or \"inf\", got " + describe(v));
            return v.get<double>();
        }

        std::string text(const json &v, const std::string &key)
        {
            if (!v.is_string())
                throw Error(ErrorKind::InvalidValue, key + " must be a string, got " + describe(v));
            return v.get<std::string>();
        }

        Point2 point(const json &v, const std::string &key)
        {
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
                throw Error(ErrorKind::InvalidValue, key + " must be [x, y], got " + describe(v));
            return {v[0].get<double>(), v[1].get<double>()};
        }

        std::int64_t count(const json &v, const std::string &key)
        {
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
                throw Error(ErrorKind::InvalidValue, key + " must be a non-negative integer, got " + describe(v));
            return v.get<std::int64_t>();
        }

        std::size_t line_of(std::string_view src, std::size_t byte)
        {
            byte = std::min(byte, src.size());
            return 1 + static_cast<std::size_t>(std::count(src.begin(), src.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
        }

        double distance(Point2 a, Point2 b) { return std::hypot(b.x - a.x, b.y - a.y); }

        // Parameter keys that come in a linear and a logarithmic spelling.
        struct PairedKey
        {
            const char *linear;
            const char *log;
            double SystemParams::*field;
            double (*from_log)(double);
        };

        double from_dbm(double v) { return dbm_to_watt(v); }
        double from_db(double v) { return db_to_linear(v); }

        constexpr PairedKey kPaired[] = {
            {"p_bs", "p_bs_dbm", &SystemParams::p_bs, from_dbm},
            {"p_irs", "p_irs_dbm", &SystemParams::p_irs, from_dbm},
            {"sigma2_amp", "sigma2_amp_dbm", &SystemParams::sigma2_amp, from_dbm},
            {"sigma2_rx", "sigma2_rx_dbm", &SystemParams::sigma2_rx, from_dbm},
            {"beta", "beta_db", &SystemParams::beta, from_db},
        };

        struct PlainKey
        {
            const char *name;
            double SystemParams::*field;
        };

        constexpr PlainKey kPlain[] = {
            {"wavelength", &SystemParams::wavelength}, {"d_bi", &SystemParams::d_bi}, {"d_iu", &SystemParams::d_iu},
            {"w_act", &SystemParams::w_act},           {"w_pas", &SystemParams::w_pas}, {"w0", &SystemParams::w0},
        };

        struct AngleKey
        {
            const char *name;
            double SurfaceConfig::*field;
        };

        constexpr AngleKey kAngles[] = {
            {"azimuth_aoa", &SurfaceConfig::azimuth_aoa},
            {"elevation_aoa", &SurfaceConfig::elevation_aoa},
            {"azimuth_aod", &SurfaceConfig::azimuth_aod},
            {"elevation_aod", &SurfaceConfig::elevation_aod},
        };

        class KeyReader
        {
        public:
            explicit KeyReader(const json &doc) : doc_(doc) {}

            const json *take(const std::string &key)
            {
                auto it = doc_.find(key);
                if (it == doc_.end())
                    return nullptr;
                used_.push_back(key);
                return &*it;
            }

            // at most one of the two spellings
            std::pair<const json *, const json *> take_pair(const std::string &a, const std::string &b)
            {
                const json *x = take(a);
                const json *y = take(b);
                if (x && y)
                    throw Error(ErrorKind::InvalidValue, "both " + a + " and " + b + " given");
                return {x, y};
            }

            void reject_unused() const
            {
                for (auto it = doc_.begin(); it != doc_.end(); ++it)
                    if (std::find(used_.begin(), used_.end(), it.key()) == used_.end())
                        throw Error(ErrorKind::UnknownKey, "unknown config key '" + it.key() + "'");
            }

        private:
            const json &doc_;
            std::vector<std::string> used_;
        };

        RicianFactor rician(const json &v, const std::string &key, bool in_db)
        {
            const double x = extended_number(v, key);
            return in_db ? RicianFactor::from_db(x) : RicianFactor::linear(x);
        }

        std::optional<RicianFactor> read_rician(KeyReader &r, const std::string &base)
        {
            auto [lin, db] = r.take_pair(base, base + "_db");
            if (lin)
                return rician(*lin, base, false);
            if (db)
                return rician(*db, base + "_db", true);
            return std::nullopt;
        }

        ScenarioConfig from_document(const json &doc)
        {
            if (!doc.is_object())
                throw Error(ErrorKind::ParseError, "config must be a JSON object");
            KeyReader r(doc);

            ScenarioConfig cfg = default_config();
            if (const json *v = r.take("alpha_db_convention"))
                cfg.convention = parse_convention(text(*v, "alpha_db_convention"));
            cfg.params = default_params(cfg.convention);
            SystemParams &p = cfg.params;

            for (const auto &k : kPaired)
            {
                auto [lin, log] = r.take_pair(k.linear, k.log);
                if (lin)
                    p.*k.field = number(*lin, k.linear);
                if (log)
                    p.*k.field = k.from_log(number(*log, k.log));
            }

            for (const char *name : {"alpha_min", "alpha_max"})
            {
                const std::string base = name;
                auto [lin, db] = r.take_pair(base, base + "_db");
                double SystemParams::*field = base == "alpha_min" ? &SystemParams::alpha_min : &SystemParams::alpha_max;
                if (lin)
                    p.*field = number(*lin, base);
                if (db)
                    p.*field = alpha_from_db(number(*db, base + "_db"), cfg.convention);
            }

            // positions first so that explicit distances and angles override them
            const json *bs = r.take("bs_pos");
            const json *irs = r.take("irs_pos");
            const json *user = r.take("user_pos");
            if (bs || irs || user)
            {
                const Point2 b = bs ? point(*bs, "bs_pos") : Point2{0.0, 0.0};
                const Point2 i = irs ? point(*irs, "irs_pos") : Point2{60.0, 0.0};
                const Point2 u = user ? point(*user, "user_pos") : Point2{60.0, 20.0};
                p.d_bi = distance(b, i);
                p.d_iu = distance(i, u);
                cfg.surface = surface_from_positions(b, i, u, cfg.surface.elem_spacing);
            }

            for (const auto &k : kPlain)
                if (const json *v = r.take(k.name))
                    p.*k.field = number(*v, k.name);

            if (auto k = read_rician(r, "k"))
                p.k1 = p.k2 = *k;
            if (auto k = read_rician(r, "k1"))
                p.k1 = *k;
            if (auto k = read_rician(r, "k2"))
                p.k2 = *k;

            const json *spacing = r.take("elem_spacing");
            cfg.surface.elem_spacing = spacing ? number(*spacing, "elem_spacing") : p.wavelength / 4.0;
            if (!(cfg.surface.elem_spacing > 0.0) || !std::isfinite(cfg.surface.elem_spacing))
                throw Error(ErrorKind::NonPositiveQuantity, "elem_spacing must be > 0");
            for (const auto &k : kAngles)
                if (const json *v = r.take(k.name))
                    cfg.surface.*k.field = number(*v, k.name);

            if (const json *v = r.take("sweep_axis"))
                cfg.sweep_axis = parse_axis(text(*v, "sweep_axis"));
            if (const json *v = r.take("sweep_values"))
            {
                if (!v->is_array())
                    throw Error(ErrorKind::InvalidValue, "sweep_values must be an array");
                for (const auto &x : *v)
                    cfg.sweep_values.push_back(extended_number(x, "sweep_values"));
            }
            if (cfg.sweep_axis == SweepAxis::none && !cfg.sweep_values.empty())
                throw Error(ErrorKind::InvalidValue, "sweep_values given without sweep_axis");

            if (const json *v = r.take("mc_samples"))
                cfg.mc_samples = count(*v, "mc_samples");
            if (const json *v = r.take("seed"))
            {
                if (!v->is_number_unsigned() && !(v->is_number_integer() && v->get<std::int64_t>() >= 0))
                    throw Error(ErrorKind::InvalidValue, "seed must be a non-negative integer");
                cfg.seed = v->get<std::uint64_t>();
            }
            if (const json *v = r.take("output_path"))
                cfg.output_path = text(*v, "output_path");
            if (const json *v = r.take("output_format"))
                cfg.output_format = parse_format(text(*v, "output_format"));

            r.reject_unused();
            validate(p);
            return cfg;
        }
    }

    std::string_view format_name(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

    OutputFormat parse_format(std::string_view name)
    {
        if (name == "csv")
            return OutputFormat::csv;
        if (name == "json")
            return OutputFormat::json;
        throw Error(ErrorKind::InvalidValue, "output format must be csv or json, got '" + std::string(name) + "'");
    }

    std::string_view axis_name(SweepAxis a)
    {
        switch (a)
        {
        case SweepAxis::none: return "none";
        case SweepAxis::budget: return "budget";
        case SweepAxis::rho: return "rho";
        case SweepAxis::rician_db: return "rician_db";
        case SweepAxis::p_irs_dbm: return "p_irs_dbm";
        case SweepAxis::cost_ratio: return "cost_ratio";
        case SweepAxis::n_elements: return "n_elements";
        }
        return "unknown";
    }

    SweepAxis parse_axis(std::string_view name)
    {
        for (SweepAxis a : {SweepAxis::budget, SweepAxis::rho, SweepAxis::rician_db, SweepAxis::p_irs_dbm,
                            SweepAxis::cost_ratio, SweepAxis::n_elements})
            if (axis_name(a) == name)
                return a;
        throw Error(ErrorKind::InvalidValue, "unknown sweep axis '" + std::string(name) +
                                                 "' (budget, rho, rician_db, p_irs_dbm, cost_ratio, n_elements)");
    }

    ScenarioConfig default_config()
    {
        ScenarioConfig cfg;
        cfg.params = default_params(cfg.convention);
        cfg.surface = default_surface(cfg.params);
        return cfg;
    }

    ScenarioConfig parse_config(std::string_view src)
    {
        if (std::all_of(src.begin(), src.end(), [](unsigned char c) { return std::isspace(c); }))
            return default_config();
        json doc;
        try
        {
            doc = json::parse(src.begin(), src.end());
        }
        catch (const json::parse_error &e)
        {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_of(src, e.byte == 0 ? 0 : e.byte - 1)) +
                                                   ": " + e.what());
        }
        return from_document(doc);
    }

    ScenarioConfig load_config(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw Error(ErrorKind::IoError, "cannot read config '" + path.string() + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        try
        {
            return parse_config(buf.str());
        }
        catch (const Error &e)
        {
            throw Error(e.kind(), path.string() + ": " + std::string(e.what()).substr(kind_name(e.kind()).size() + 2));
        }
    }

    std::filesystem::path preset_dir()
    {
        if (const char *env = std::getenv("HIRS_PRESET_DIR"); env && *env)
            return env;
        return HIRS_DEFAULT_PRESET_DIR;
    }

    std::filesystem::path preset_path(std::string_view name)
    {
        static constexpr std::string_view known[] = {"fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9"};
        if (std::find(std::begin(known), std::end(known), name) == std::end(known))
            throw Error(ErrorKind::InvalidValue, "unknown preset '" + std::string(name) + "' (fig3..fig9)");
        return preset_dir() / (std::string(name) + ".json");
    }
}
