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

#ifndef SARSHARE_DEPLOYMENT_HPP
#define SARSHARE_DEPLOYMENT_HPP

#include "sarshare/geometry.hpp"
#include "sarshare/imt_antenna.hpp"
#include "sarshare/random.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sarshare
{
    enum class Environment
    {
        urban,
        suburban
    };

    const char *to_string(Environment env);

    // Concentric disc (zone 1) and annuli (zones 2, 3) around the SAR footprint center.
    struct ZonePlan
    {
        double z1_km2 = 200.0;
        double z2_km2 = 800.0;
        double z3_km2 = 1000.0;
        GeodeticPosition center;

        double outer_radius_km(int zone) const; // zone 1..3
        double inner_radius_km(int zone) const;
        void validate() const;
    };

    struct DeploymentParams
    {
        double bs_af = 0.75;  // TDD activity factor
        double bs_nlf = 0.20; // network loading factor
        double ra_u = 0.07;
        double ra_su = 0.03;
        double rb_z3 = 0.05;
        double d_bs_u = 30.0;  // BS / km^2
        double d_bs_su = 10.0; // BS / km^2
        int operators = 4;
        double bs_height_m = 6.0;
        double mech_downtilt_deg = 10.0;
        double min_ue_ground_m = 5.0;
        double ue_azimuth_sd_deg = 30.0;
        double ue_azimuth_limit_deg = 60.0;
        double ue_distance_sigma_m = 32.0; // Rayleigh scale
        double min_steering_elevation_deg = -30.0;
        std::optional<int> z3_count_override;

        void validate() const;
    };

    struct BsCounts
    {
        int n1 = 0, n2 = 0, n3 = 0;
        double n3_formula = 0.0; // unrounded zone-3 formula value, reported even when overridden

        int total() const { return n1 + n2 + n3; }
        BsCounts scaled(int operators) const;
    };

    // Simultaneously transmitting BSs of one operator in each zone.
    BsCounts active_bs_counts(const ZonePlan &zones, const DeploymentParams &p);

    struct BaseStation
    {
        GeodeticPosition position;
        PanelOrientation panel;
        Environment environment = Environment::urban;
        int zone = 1;
    };

    // Uniform-in-area drop per zone with independent uniform bearings.
    std::vector<BaseStation> drop_base_stations(const ZonePlan &zones, const BsCounts &counts,
                                                const DeploymentParams &p, RandomStream &rng);

    struct UeDrop
    {
        double azimuth_deg = 0.0;
        double ground_distance_m = 0.0;
        double elevation_deg = 0.0;          // geometric, seen from the BS antenna
        double steering_elevation_deg = 0.0; // after the coverage clamp
        bool clamped = false;
        SteeringAngles steering;
    };

    // Beam steering that serves a UE at the given azimuth and ground distance.
    UeDrop ue_drop_from(double azimuth_deg, double ground_distance_m, double bs_height_m, double mech_downtilt_deg,
                        double min_steering_elevation_deg = -30.0);

    UeDrop sample_ue_drop(const BaseStation &bs, const DeploymentParams &p, RandomStream &rng);

    struct SteeringHistogram
    {
        double azimuth_bin_deg = 5.0;
        double vertical_bin_deg = 1.0;
        double azimuth_min_deg = -60.0;
        double vertical_min_deg = 90.0; // GCS, 90 = horizon
        int n_azimuth = 0, n_vertical = 0;
        std::vector<std::uint64_t> counts; // azimuth-major
        std::uint64_t samples = 0;
        double mean_azimuth_deg = 0.0;
        double min_azimuth_deg = 0.0, max_azimuth_deg = 0.0;
        double min_vertical_deg = 0.0, max_vertical_deg = 0.0;
        double vertical_mode_deg = 0.0; // center of the most populated vertical bin

        std::uint64_t count(int az_bin, int v_bin) const { return counts[static_cast<std::size_t>(az_bin * n_vertical + v_bin)]; }
    };

    // Empirical joint distribution of (phi_scan, total GCS vertical pointing) of UE-serving beams.
    SteeringHistogram steering_distribution_report(std::uint64_t n_samples, const DeploymentParams &p = {},
                                                   std::uint64_t seed = 1);
}

#endif
