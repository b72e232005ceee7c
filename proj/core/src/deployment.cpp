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

#include "sarshare/deployment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sarshare
{
    namespace
    {
        void require(bool ok, const char *what)
        {
            if (!ok)
                throw std::invalid_argument(what);
        }

        bool is_ratio(double x) { return x >= 0.0 && x <= 1.0; }

        int nearest_count(double x) { return static_cast<int>(std::lround(x)); }

        void drop_ring(const ZonePlan &zones, int zone, int n, Environment env, double urban_fraction,
                       const DeploymentParams &p, RandomStream &rng, std::vector<BaseStation> &out)
        {
            const double ri = zones.inner_radius_km(zone), ro = zones.outer_radius_km(zone);
            const double ri2 = ri * ri, span = ro * ro - ri2;
            for (int k = 0; k < n; ++k)
            {
                const double r = std::sqrt(ri2 + span * rng.uniform());
                const double a = 2.0 * constants::kPi * rng.uniform();
                BaseStation bs;
                bs.position = offset_position(zones.center, r * std::sin(a), r * std::cos(a));
                bs.position.altitude_km = p.bs_height_m / 1000.0;
                bs.panel.bearing_deg = rng.uniform(-180.0, 180.0);
                bs.panel.mech_downtilt_deg = p.mech_downtilt_deg;
                bs.zone = zone;
                bs.environment = env;
                if (urban_fraction >= 0.0)
                    bs.environment = rng.uniform() < urban_fraction ? Environment::urban : Environment::suburban;
                out.push_back(bs);
            }
        }
    }

    const char *to_string(Environment env) { return env == Environment::urban ? "urban" : "suburban"; }

    double ZonePlan::outer_radius_km(int zone) const
    {
        double area = 0.0;
        switch (zone)
        {
        case 1: area = z1_km2; break;
        case 2: area = z1_km2 + z2_km2; break;
        case 3: area = z1_km2 + z2_km2 + z3_km2; break;
        default: throw std::out_of_range("zone index must be 1, 2 or 3");
        }
        return std::sqrt(area / constants::kPi);
    }

    double ZonePlan::inner_radius_km(int zone) const { return zone == 1 ? 0.0 : outer_radius_km(zone - 1); }

    void ZonePlan::validate() const
    {
        require(z1_km2 > 0.0 && z2_km2 >= 0.0 && z3_km2 >= 0.0, "zone surfaces must be non-negative (zone 1 positive)");
    }

    void DeploymentParams::validate() const
    {
        require(is_ratio(bs_af) && is_ratio(bs_nlf) && is_ratio(ra_u) && is_ratio(ra_su) && is_ratio(rb_z3),
                "deployment ratios must lie in [0, 1]");
        require(d_bs_u > 0.0 && d_bs_su > 0.0, "BS densities must be positive");
        require(operators >= 1, "operators must be at least 1");
        require(bs_height_m > 0.0, "BS height must be positive");
        require(min_ue_ground_m >= 0.0 && ue_distance_sigma_m > 0.0, "UE distance parameters must be positive");
        require(ue_azimuth_sd_deg > 0.0 && ue_azimuth_limit_deg > 0.0 && ue_azimuth_limit_deg <= 180.0,
                "UE azimuth parameters out of range");
        require(min_steering_elevation_deg < 0.0 && min_steering_elevation_deg > -90.0,
                "minimum steering elevation must lie in (-90, 0)");
        require(!z3_count_override || *z3_count_override >= 0, "z3 count override must be non-negative");
    }

    BsCounts BsCounts::scaled(int operators) const
    {
        BsCounts c = *this;
        c.n1 *= operators;
        c.n2 *= operators;
        c.n3 *= operators;
        c.n3_formula *= operators;
        return c;
    }

    BsCounts active_bs_counts(const ZonePlan &zones, const DeploymentParams &p)
    {
        zones.validate();
        p.validate();
        const double active = p.bs_af * p.bs_nlf;
        BsCounts c;
        c.n1 = nearest_count(zones.z1_km2 * active * p.ra_u * p.d_bs_u);
        c.n2 = nearest_count(zones.z2_km2 * active * p.ra_su * p.d_bs_su);
        c.n3_formula = zones.z3_km2 * active * p.rb_z3 * (p.ra_su * p.d_bs_su + p.ra_u * p.d_bs_u);
        c.n3 = p.z3_count_override ? *p.z3_count_override : nearest_count(c.n3_formula);
        return c;
    }

    std::vector<BaseStation> drop_base_stations(const ZonePlan &zones, const BsCounts &counts,
                                                const DeploymentParams &p, RandomStream &rng)
    {
        if (counts.n1 < 0 || counts.n2 < 0 || counts.n3 < 0)
            throw std::invalid_argument("BS counts must be non-negative");
        std::vector<BaseStation> out;
        out.reserve(static_cast<std::size_t>(counts.total()));
        const double urban = p.ra_u * p.d_bs_u, suburban = p.ra_su * p.d_bs_su;
        drop_ring(zones, 1, counts.n1, Environment::urban, -1.0, p, rng, out);
        drop_ring(zones, 2, counts.n2, Environment::suburban, -1.0, p, rng, out);
        drop_ring(zones, 3, counts.n3, Environment::urban, urban / (urban + suburban), p, rng, out);
        return out;
    }

    UeDrop ue_drop_from(double azimuth_deg, double ground_distance_m, double bs_height_m, double mech_downtilt_deg,
                        double min_steering_elevation_deg)
    {
        UeDrop u;
        u.azimuth_deg = azimuth_deg;
        u.ground_distance_m = ground_distance_m;
        u.elevation_deg = -rad_to_deg(std::atan2(bs_height_m, ground_distance_m));
        u.clamped = u.elevation_deg < min_steering_elevation_deg;
        u.steering_elevation_deg = u.clamped ? min_steering_elevation_deg : u.elevation_deg;
        // Electrical tilt is positive downwards and excludes the mechanical part.
        u.steering.theta_etilt_deg = -u.steering_elevation_deg - mech_downtilt_deg;
        u.steering.phi_scan_deg = azimuth_deg;
        return u;
    }

    UeDrop sample_ue_drop(const BaseStation &bs, const DeploymentParams &p, RandomStream &rng)
    {
        const double az = rng.truncated_normal(0.0, p.ue_azimuth_sd_deg, p.ue_azimuth_limit_deg);
        double d = rng.rayleigh(p.ue_distance_sigma_m);
        while (d < p.min_ue_ground_m)
            d = rng.rayleigh(p.ue_distance_sigma_m);
        return ue_drop_from(az, d, p.bs_height_m, bs.panel.mech_downtilt_deg, p.min_steering_elevation_deg);
    }

    SteeringHistogram steering_distribution_report(std::uint64_t n_samples, const DeploymentParams &p,
                                                   std::uint64_t seed)
    {
        if (n_samples < 1)
            throw std::invalid_argument("steering report needs at least one sample");
        p.validate();
        SteeringHistogram h;
        h.azimuth_min_deg = -p.ue_azimuth_limit_deg;
        h.vertical_min_deg = 90.0;
        h.n_azimuth = static_cast<int>(std::ceil(2.0 * p.ue_azimuth_limit_deg / h.azimuth_bin_deg));
        h.n_vertical = static_cast<int>(std::ceil(-p.min_steering_elevation_deg / h.vertical_bin_deg)) + 1;
        h.counts.assign(static_cast<std::size_t>(h.n_azimuth * h.n_vertical), 0);
        h.min_azimuth_deg = h.min_vertical_deg = 1e300;
        h.max_azimuth_deg = h.max_vertical_deg = -1e300;

        RandomStream rng(seed);
        BaseStation bs;
        bs.panel.mech_downtilt_deg = p.mech_downtilt_deg;
        double sum_az = 0.0;
        for (std::uint64_t k = 0; k < n_samples; ++k)
        {
            const UeDrop u = sample_ue_drop(bs, p, rng);
            const double vertical = 90.0 - u.steering_elevation_deg; // GCS zenith angle
            const int ia = std::clamp(static_cast<int>((u.azimuth_deg - h.azimuth_min_deg) / h.azimuth_bin_deg), 0,
                                      h.n_azimuth - 1);
            const int iv = std::clamp(static_cast<int>((vertical - h.vertical_min_deg) / h.vertical_bin_deg), 0,
                                      h.n_vertical - 1);
            ++h.counts[static_cast<std::size_t>(ia * h.n_vertical + iv)];
            sum_az += u.azimuth_deg;
            h.min_azimuth_deg = std::min(h.min_azimuth_deg, u.azimuth_deg);
            h.max_azimuth_deg = std::max(h.max_azimuth_deg, u.azimuth_deg);
            h.min_vertical_deg = std::min(h.min_vertical_deg, vertical);
            h.max_vertical_deg = std::max(h.max_vertical_deg, vertical);
        }
        h.samples = n_samples;
        h.mean_azimuth_deg = sum_az / static_cast<double>(n_samples);

        std::uint64_t best = 0;
        for (int iv = 0; iv < h.n_vertical; ++iv)
        {
            std::uint64_t col = 0;
            for (int ia = 0; ia < h.n_azimuth; ++ia)
                col += h.count(ia, iv);
            if (col > best)
            {
                best = col;
                h.vertical_mode_deg = h.vertical_min_deg + (iv + 0.5) * h.vertical_bin_deg;
            }
        }
        return h;
    }
}
