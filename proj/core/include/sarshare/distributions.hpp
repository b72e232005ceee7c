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

#ifndef SARSHARE_DISTRIBUTIONS_HPP
#define SARSHARE_DISTRIBUTIONS_HPP

#include "sarshare/deployment.hpp"
#include "sarshare/imt_antenna.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace sarshare
{
    struct ClutterCdfRow
    {
        double location_pct;
        double loss_db;
    };

    // Clutter loss against location percentage at a fixed elevation.
    std::vector<ClutterCdfRow> clutter_cdf(double freq_ghz, double elevation_deg, double step_pct = 0.5);

    // Beam steering of independent UE drops, as drawn by the engine.
    std::vector<SteeringAngles> sample_steering(std::uint64_t n, const DeploymentParams &p = {}, std::uint64_t seed = 1);

    // Gain of each beam in its own pointing direction (theta = 90 + tilt, phi = scan).
    std::vector<double> steered_gain_samples(const CompositeAntenna &antenna, std::span<const SteeringAngles> beams);

    // Gain toward GCS elevation `elevation_deg` (azimuth 0) for each beam, with the panel bearing
    // drawn uniformly in [-180, 180) per beam.
    std::vector<double> gain_toward_elevation_samples(const CompositeAntenna &antenna, std::span<const SteeringAngles> beams,
                                                      double elevation_deg, double mech_downtilt_deg = 10.0,
                                                      std::uint64_t seed = 1);

    // Total integrated gain per beam; with a normalizer, of the normalized pattern.
    std::vector<double> tig_samples(const WeightMatrix &w, const ArrayConfig &cfg, std::span<const SteeringAngles> beams,
                                    const DirectivityNormalizer *normalizer = nullptr, QuadratureSpec quad = {});

    struct Histogram
    {
        double lo = 0.0;
        double width = 1.0;
        std::vector<std::uint64_t> counts;

        double mode_center() const;
    };

    // Bins aligned to integer multiples of width.
    Histogram histogram(std::span<const double> values, double width);
}

#endif
