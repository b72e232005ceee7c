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

#ifndef SARSHARE_PROPAGATION_HPP
#define SARSHARE_PROPAGATION_HPP

#include "sarshare/geometry.hpp"

namespace sarshare
{
    struct PathLossBreakdown
    {
        double fspl_db = 0.0;
        double clutter_db = 0.0;
        double polarization_db = 3.0;
        double total_db = 0.0;
    };

    struct PathLossOptions
    {
        bool clutter_enabled = true;
        double polarization_db = 3.0;
    };

    // Rec. ITU-R P.525 free-space loss.
    double fspl(double distance_km, double freq_ghz);

    // Rec. ITU-R P.2108 Earth-space clutter loss not exceeded for location_pct of locations.
    // Valid for 10-100 GHz, elevation 0-90 deg, 0 < location_pct < 100.
    double clutter_loss_sample(double freq_ghz, double elevation_deg, double location_pct);

    PathLossBreakdown path_loss(double slant_range_km, double freq_ghz, double elevation_deg, double location_pct,
                                const PathLossOptions &opt = {});
    PathLossBreakdown path_loss(const GeodeticPosition &bs, const SatelliteState &sat, double freq_ghz,
                                double location_pct, const PathLossOptions &opt = {});
}

#endif
