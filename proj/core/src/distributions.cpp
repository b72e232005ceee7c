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

#include "sarshare/distributions.hpp"

#include "sarshare/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sarshare
{
    std::vector<ClutterCdfRow> clutter_cdf(double freq_ghz, double elevation_deg, double step_pct)
    {
        if (!(step_pct > 0.0 && step_pct < 50.0))
            throw std::invalid_argument("clutter CDF step must lie in (0, 50)");
        std::vector<ClutterCdfRow> rows;
        for (int k = 1;; ++k)
        {
            const double p = k * step_pct;
            if (p >= 100.0 - 1e-9)
                break;
            rows.push_back({p, clutter_loss_sample(freq_ghz, elevation_deg, p)});
        }
        return rows;
    }

    std::vector<SteeringAngles> sample_steering(std::uint64_t n, const DeploymentParams &p, std::uint64_t seed)
    {
        RandomStream rng(seed);
        BaseStation bs;
        bs.panel.mech_downtilt_deg = p.mech_downtilt_deg;
        std::vector<SteeringAngles> out;
        out.reserve(n);
        for (std::uint64_t k = 0; k < n; ++k)
            out.push_back(sample_ue_drop(bs, p, rng).steering);
        return out;
    }

    std::vector<double> steered_gain_samples(const CompositeAntenna &antenna, std::span<const SteeringAngles> beams)
    {
        std::vector<double> out;
        out.reserve(beams.size());
        for (const SteeringAngles &s : beams)
            out.push_back(antenna.gain_dbi({90.0 + s.theta_etilt_deg, s.phi_scan_deg}, s));
        return out;
    }

    std::vector<double> gain_toward_elevation_samples(const CompositeAntenna &antenna, std::span<const SteeringAngles> beams,
                                                      double elevation_deg, double mech_downtilt_deg, std::uint64_t seed)
    {
        RandomStream rng(seed);
        std::vector<double> out;
        out.reserve(beams.size());
        for (const SteeringAngles &s : beams)
        {
            const PanelOrientation panel{rng.uniform(-180.0, 180.0), mech_downtilt_deg};
            out.push_back(antenna.gain_dbi(gcs_to_lcs(elevation_deg, 0.0, panel), s));
        }
        return out;
    }

    std::vector<double> tig_samples(const WeightMatrix &w, const ArrayConfig &cfg, std::span<const SteeringAngles> beams,
                                    const DirectivityNormalizer *normalizer, QuadratureSpec quad)
    {
        std::vector<double> out;
        out.reserve(beams.size());
        for (const SteeringAngles &s : beams)
        {
            const double raw = total_integrated_gain(s, w, cfg, quad);
            out.push_back(normalizer ? raw - normalizer->tig_db(s) : raw);
        }
        return out;
    }

    double Histogram::mode_center() const
    {
        if (counts.empty())
            throw std::logic_error("empty histogram");
        const auto it = std::max_element(counts.begin(), counts.end());
        return lo + (static_cast<double>(it - counts.begin()) + 0.5) * width;
    }

    Histogram histogram(std::span<const double> values, double width)
    {
        if (values.empty() || !(width > 0.0))
            throw std::invalid_argument("histogram needs values and a positive width");
        const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
        Histogram h;
        h.width = width;
        h.lo = std::floor(*mn / width) * width;
        const auto n = static_cast<std::size_t>(std::floor((*mx - h.lo) / width)) + 1;
        h.counts.assign(n, 0);
        for (double v : values)
            ++h.counts[std::min(n - 1, static_cast<std::size_t>(std::floor((v - h.lo) / width)))];
        return h;
    }
}
