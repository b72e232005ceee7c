// SPDX-License-Identifier: Apache-2.0
//
// sarshare: IMT / EESS (active) aggregate interference simulator
// Copyright (C) 2026 The sarshare authors
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

#include "sarshare/propagation.hpp"

#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sarshare
{
    namespace p2108
    {
        // Rec. ITU-R P.2108-1 Earth-space and aeronautical statistical model:
        //   L = {-K1 ln(1 - p/100) cot[A1 (1 - theta/90) + pi theta/180]}^(0.5 (90 - theta)/90)
        //       - 1 - 0.6 Q^-1(p/100)
        //   K1 = 93 f^0.175, A1 = 0.05, f in GHz, theta elevation in degrees.
        constexpr double kK1Scale = 93.0;
        constexpr double kK1Exponent = 0.175;
        constexpr double kA1 = 0.05;
        constexpr double kQCoefficient = 0.6;
        constexpr double kMinFreqGhz = 10.0;
        constexpr double kMaxFreqGhz = 100.0;
    }

    double fspl(double distance_km, double freq_ghz)
    {
        if (!(distance_km > 0.0) || !(freq_ghz > 0.0))
            throw std::invalid_argument("free-space loss needs positive distance and frequency");
        return 92.45 + 20.0 * std::log10(freq_ghz) + 20.0 * std::log10(distance_km);
    }

    double clutter_loss_sample(double freq_ghz, double elevation_deg, double location_pct)
    {
        using namespace p2108;
        if (!(elevation_deg >= 0.0 && elevation_deg <= 90.0))
            throw std::domain_error("clutter model elevation must lie in [0, 90] deg; got " + std::to_string(elevation_deg));
        if (!(location_pct > 0.0 && location_pct < 100.0))
            throw std::domain_error("location percentage must lie in (0, 100)");
        if (!(freq_ghz >= kMinFreqGhz && freq_ghz <= kMaxFreqGhz))
            throw std::domain_error("Earth-space clutter model is defined for 10-100 GHz");

        const double p = location_pct / 100.0;
        const double k1 = kK1Scale * std::pow(freq_ghz, kK1Exponent);
        const double arg = kA1 * (1.0 - elevation_deg / 90.0) + constants::kPi * elevation_deg / 180.0;
        const double cot = std::cos(arg) / std::sin(arg);
        const double base = std::max(-k1 * std::log1p(-p) * cot, 0.0);
        const double q_inv = boost::math::quantile(boost::math::complement(boost::math::normal(), p));
        return std::pow(base, 0.5 * (90.0 - elevation_deg) / 90.0) - 1.0 - kQCoefficient * q_inv;
    }

    PathLossBreakdown path_loss(double slant_range_km, double freq_ghz, double elevation_deg, double location_pct,
                                const PathLossOptions &opt)
    {
        PathLossBreakdown b;
        b.fspl_db = fspl(slant_range_km, freq_ghz);
        b.clutter_db = opt.clutter_enabled ? clutter_loss_sample(freq_ghz, elevation_deg, location_pct) : 0.0;
        b.polarization_db = opt.polarization_db;
        b.total_db = b.fspl_db + b.clutter_db + b.polarization_db;
        return b;
    }

    PathLossBreakdown path_loss(const GeodeticPosition &bs, const SatelliteState &sat, double freq_ghz,
                                double location_pct, const PathLossOptions &opt)
    {
        const LookAngles look = slant_range_and_look(bs, sat);
        return path_loss(look.range_km, freq_ghz, look.elevation_deg, location_pct, opt);
    }
}
