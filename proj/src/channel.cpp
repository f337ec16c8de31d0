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


#include "hirs/channel.hpp"

#include "hirs/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace hirs
{
    namespace
    {
        constexpr double pi = std::numbers::pi;

        void check_angle(double a, const char *what)
        {
            if (!std::isfinite(a) || a < 0.0 || a > pi)
                throw Error(ErrorKind::InvalidAngle, std::string(what) + " must lie in [0, pi]");
        }

        double folded_azimuth(Point2 from, Point2 to)
        {
            return std::abs(std::atan2(to.y - from.y, to.x - from.x));
        }

        ComplexVector draw_link(RicianFactor k, const ComplexVector &los, double beta, double dist, const RngStream &s)
        {
            if (k.is_los())
                return los;
            return assemble_rician(k, los, sample_nlos(static_cast<std::int64_t>(los.size()), beta, dist, s));
        }
    }

    SurfaceConfig surface_from_positions(Point2 bs, Point2 irs, Point2 user, double elem_spacing)
    {
        SurfaceConfig s;
        s.elem_spacing = elem_spacing;
        s.azimuth_aoa = folded_azimuth(irs, bs);
        s.elevation_aoa = pi / 2.0;
        s.azimuth_aod = folded_azimuth(irs, user);
        s.elevation_aod = pi / 2.0;
        return s;
    }

    SurfaceConfig default_surface(const SystemParams &p)
    {
        return surface_from_positions({0.0, 0.0}, {60.0, 0.0}, {60.0, 20.0}, p.wavelength / 4.0);
    }

    std::pair<std::int64_t, std::int64_t> factor_elements(std::int64_t n)
    {
        if (n <= 0)
            return {0, 0};
        auto n_x = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
        while (n_x * n_x > n)
            --n_x;
        while (n_x > 1 && n % n_x != 0)
            --n_x;
        return {n_x, n / n_x};
    }

    ArrayGeometry make_geometry(const SurfaceConfig &surface, std::int64_t n)
    {
        const auto [n_x, n_y] = factor_elements(n);
        return {surface.elem_spacing, n_x, n_y, surface.azimuth_aoa, surface.elevation_aoa, surface.azimuth_aod,
                surface.elevation_aod};
    }

    SurfaceLayout make_layout(const SurfaceConfig &surface, const Allocation &alloc)
    {
        return {make_geometry(surface, alloc.n_act), make_geometry(surface, alloc.n_pas)};
    }

    ComplexVector steering_vector(double zeta, std::int64_t m)
    {
        if (m < 1)
            throw Error(ErrorKind::EmptyArray, "steering vector needs m >= 1");
        if (!std::isfinite(zeta))
            throw Error(ErrorKind::NonFinite, "spatial frequency must be finite");
        ComplexVector u(static_cast<std::size_t>(m));
        for (std::int64_t k = 0; k < m; ++k)
            u[static_cast<std::size_t>(k)] = std::polar(1.0, -pi * std::fmod(static_cast<double>(k) * zeta, 2.0));
        return u;
    }

    ComplexVector receive_response(const ArrayGeometry &geom, double wavelength, Hop hop)
    {
        if (!(wavelength > 0.0) || !std::isfinite(wavelength))
            throw Error(ErrorKind::NonPositiveQuantity, "wavelength must be > 0");
        if (geom.n_x < 1 || geom.n_y < 1)
            throw Error(ErrorKind::EmptyArray, "array response needs n_x, n_y >= 1");

        const bool arrival = hop == Hop::bs_to_irs;
        const double az = arrival ? geom.azimuth_aoa : geom.azimuth_aod;
        const double el = arrival ? geom.elevation_aoa : geom.elevation_aod;
        check_angle(az, "azimuth");
        check_angle(el, "elevation");

        const double scale = 2.0 * geom.elem_spacing / wavelength * std::sin(el);
        const auto ux = steering_vector(scale * std::cos(az), geom.n_x);
        const auto uy = steering_vector(scale * std::sin(az), geom.n_y);

        ComplexVector a;
        a.reserve(ux.size() * uy.size());
        for (const auto &x : ux)
            for (const auto &y : uy)
                a.push_back(x * y);
        return a;
    }

    ComplexVector los_channel(double beta, double dist, double wavelength, const ArrayGeometry &geom, Hop hop)
    {
        if (!(dist > 0.0) || !std::isfinite(dist))
            throw Error(ErrorKind::NonPositiveQuantity, "link distance must be > 0");
        if (!(beta > 0.0))
            throw Error(ErrorKind::NonPositiveQuantity, "beta must be > 0");
        auto h = receive_response(geom, wavelength, hop);
        // reduce the propagation phase before scaling, D/lambda is typically in the thousands
        const Complex gain = std::polar(std::sqrt(beta) / dist, -2.0 * pi * std::fmod(dist / wavelength, 1.0));
        for (auto &e : h)
            e *= gain;
        return h;
    }

    ComplexVector sample_nlos(std::int64_t n, double beta, double dist, const RngStream &stream)
    {
        ComplexVector h(static_cast<std::size_t>(n > 0 ? n : 0));
        const double scale = std::sqrt(beta) / dist;
        for (std::size_t i = 0; i < h.size(); ++i)
            h[i] = scale * stream.complex_normal(static_cast<std::uint32_t>(i));
        return h;
    }

    ComplexVector assemble_rician(RicianFactor k, const ComplexVector &los, const ComplexVector &nlos)
    {
        if (los.size() != nlos.size())
            throw Error(ErrorKind::DimensionMismatch, "LoS and NLoS components differ in length");
        if (k.is_los())
            return los;
        if (k.is_rayleigh())
            return nlos;
        const double a = std::sqrt(k.los_weight());
        const double b = std::sqrt(k.nlos_weight());
        ComplexVector h(los.size());
        for (std::size_t i = 0; i < h.size(); ++i)
            h[i] = a * los[i] + b * nlos[i];
        return h;
    }

    StatisticalCsi statistical_csi(const SystemParams &p, const SurfaceLayout &layout)
    {
        StatisticalCsi csi;
        csi.k1 = p.k1;
        csi.k2 = p.k2;
        if (layout.active.size() > 0)
        {
            csi.los_bi_act = los_channel(p.beta, p.d_bi, p.wavelength, layout.active, Hop::bs_to_irs);
            csi.los_iu_act = los_channel(p.beta, p.d_iu, p.wavelength, layout.active, Hop::irs_to_user);
        }
        if (layout.passive.size() > 0)
        {
            csi.los_bi_pas = los_channel(p.beta, p.d_bi, p.wavelength, layout.passive, Hop::bs_to_irs);
            csi.los_iu_pas = los_channel(p.beta, p.d_iu, p.wavelength, layout.passive, Hop::irs_to_user);
        }
        return csi;
    }

    ChannelRealization sample_realization(const SystemParams &p, const StatisticalCsi &csi, const RngStream &stream)
    {
        ChannelRealization r;
        r.bi_act = draw_link(csi.k1, csi.los_bi_act, p.beta, p.d_bi, stream.sub(kStreamBiAct));
        r.iu_act = draw_link(csi.k2, csi.los_iu_act, p.beta, p.d_iu, stream.sub(kStreamIuAct));
        r.bi_pas = draw_link(csi.k1, csi.los_bi_pas, p.beta, p.d_bi, stream.sub(kStreamBiPas));
        r.iu_pas = draw_link(csi.k2, csi.los_iu_pas, p.beta, p.d_iu, stream.sub(kStreamIuPas));
        return r;
    }

    ChannelRealization sample_realization(const SystemParams &p, const Allocation &alloc, const SurfaceLayout &layout,
                                          const RngStream &stream)
    {
        if (layout.active.size() != alloc.n_act || layout.passive.size() != alloc.n_pas)
            throw Error(ErrorKind::DimensionMismatch, "layout element counts do not match the allocation");
        return sample_realization(p, statistical_csi(p, layout), stream);
    }
}
