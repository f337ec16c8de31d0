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


#ifndef HIRS_CHANNEL_HPP
#define HIRS_CHANNEL_HPP

#include "hirs/params.hpp"
#include "hirs/rng.hpp"

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace hirs
{
    using Complex = std::complex<double>;
    using ComplexVector = std::vector<Complex>;

    enum class Hop
    {
        bs_to_irs,  // uses the angle of arrival
        irs_to_user // uses the angle of departure
    };

    // Uniform planar sub-surface. Angles in radians, all within [0, pi].
    struct ArrayGeometry
    {
        double elem_spacing = 0.0;
        std::int64_t n_x = 0;
        std::int64_t n_y = 0;
        double azimuth_aoa = 0.0;
        double elevation_aoa = 0.0;
        double azimuth_aod = 0.0;
        double elevation_aod = 0.0;

        std::int64_t size() const { return n_x * n_y; }
    };

    // Element spacing and link angles shared by both sub-surfaces (they are co-located).
    struct SurfaceConfig
    {
        double elem_spacing = 0.0;
        double azimuth_aoa = 0.0;
        double elevation_aoa = 0.0;
        double azimuth_aod = 0.0;
        double elevation_aod = 0.0;
    };

    struct Point2
    {
        double x = 0.0;
        double y = 0.0;
    };

    // Angles seen from the IRS towards the BS (arrival) and the user (departure) in the plane,
    // folded into [0, pi]; elevation fixed at pi/2.
    SurfaceConfig surface_from_positions(Point2 bs, Point2 irs, Point2 user, double elem_spacing);

    // lambda/4 spacing, BS (0,0), IRS (60,0), user (60,20).
    SurfaceConfig default_surface(const SystemParams &p);

    // n = n_x * n_y with n_x = floor(sqrt(n)) lowered until it divides n; (0, 0) for n = 0.
    std::pair<std::int64_t, std::int64_t> factor_elements(std::int64_t n);

    ArrayGeometry make_geometry(const SurfaceConfig &surface, std::int64_t n);

    struct SurfaceLayout
    {
        ArrayGeometry active;
        ArrayGeometry passive;
    };

    SurfaceLayout make_layout(const SurfaceConfig &surface, const Allocation &alloc);

    // [1, e^{-j pi zeta}, ..., e^{-j (m-1) pi zeta}]
    ComplexVector steering_vector(double zeta, std::int64_t m);

    // u(2 d/lambda cos(az) sin(el), n_x) kron u(2 d/lambda sin(az) sin(el), n_y)
    ComplexVector receive_response(const ArrayGeometry &geom, double wavelength, Hop hop = Hop::bs_to_irs);

    // sqrt(beta)/dist * e^{-j 2 pi dist/lambda} times the array response.
    ComplexVector los_channel(double beta, double dist, double wavelength, const ArrayGeometry &geom,
                              Hop hop = Hop::bs_to_irs);

    // n i.i.d. entries ~ sqrt(beta)/dist * CN(0, 1), entry i taken from position i of the stream.
    ComplexVector sample_nlos(std::int64_t n, double beta, double dist, const RngStream &stream);

    // sqrt(K/(K+1)) los + sqrt(1/(K+1)) nlos. LoS returns los untouched, K = 0 returns nlos.
    ComplexVector assemble_rician(RicianFactor k, const ComplexVector &los, const ComplexVector &nlos);

    struct StatisticalCsi
    {
        ComplexVector los_bi_act;
        ComplexVector los_iu_act;
        ComplexVector los_bi_pas;
        ComplexVector los_iu_pas;
        RicianFactor k1;
        RicianFactor k2;

        std::int64_t n_act() const { return static_cast<std::int64_t>(los_bi_act.size()); }
        std::int64_t n_pas() const { return static_cast<std::int64_t>(los_bi_pas.size()); }
    };

    StatisticalCsi statistical_csi(const SystemParams &p, const SurfaceLayout &layout);

    struct ChannelRealization
    {
        ComplexVector bi_act;
        ComplexVector iu_act;
        ComplexVector bi_pas;
        ComplexVector iu_pas;
    };

    // Substreams used by sample_realization, one per link.
    enum LinkStream : std::uint32_t
    {
        kStreamBiAct = 0,
        kStreamIuAct = 1,
        kStreamBiPas = 2,
        kStreamIuPas = 3
    };

    // One joint Rician draw of all four links around the given LoS components.
    ChannelRealization sample_realization(const SystemParams &p, const StatisticalCsi &csi, const RngStream &stream);

    ChannelRealization sample_realization(const SystemParams &p, const Allocation &alloc, const SurfaceLayout &layout,
                                          const RngStream &stream);
}

#endif
