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

#ifndef SARSHARE_SAR_ANTENNA_HPP
#define SARSHARE_SAR_ANTENNA_HPP

#include "sarshare/geometry.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sarshare
{
    struct SarSensor
    {
        double peak_gain_dbi = 47.0;
        double elev_bw_deg = 1.13;
        double az_bw_deg = 0.53;
        double noise_figure_db = 3.0;
        double rf_bandwidth_mhz = 1200.0;
        double center_freq_mhz = 9800.0;
        double tig_db = 0.25;
        double efficiency = 0.70;

        void validate() const;
        // Pattern correction for areas outside the main beam: 10 log10(efficiency) - TIG.
        double outside_beam_correction_db() const;
    };

    // Zone 1 is the main-beam (3 dB footprint) area; zones 2 and 3 receive the efficiency/TIG
    // correction.
    enum class SarZone : int
    {
        main_beam = 1,
        zone2 = 2,
        zone3 = 3
    };

    // Gain table on a rectilinear (v, h) grid. CSV schema: header `v_deg,h_deg,gain_dbi`, one
    // row per grid point, both axes strictly increasing.
    class SarGainTable
    {
    public:
        static SarGainTable read_csv(std::istream &in);
        static SarGainTable load_csv(const std::string &path);

        // Bilinear inside the grid, nearest edge value outside.
        double gain_dbi(double h_deg, double v_deg) const;
        double peak_gain_dbi() const;
        const std::vector<double> &v_axis() const { return v_; }
        const std::vector<double> &h_axis() const { return h_; }

    private:
        std::vector<double> v_, h_;
        std::vector<double> gain_; // v-major
    };

    // Separable sinc^2 principal cuts with the sensor beamwidths, floored at floor_dbi.
    struct ParametricSarPattern
    {
        SarSensor sensor;
        double floor_dbi = -10.0;

        double gain_dbi(double h_deg, double v_deg) const;
    };

    class SarGainModel
    {
    public:
        static SarGainModel parametric(const SarSensor &sensor, double floor_dbi = -10.0);
        static SarGainModel tabulated(const SarSensor &sensor, SarGainTable table);

        bool is_fallback() const { return !table_.has_value(); }
        const SarSensor &sensor() const { return sensor_; }

        // Pattern gain before any zone correction.
        double pattern_dbi(double h_deg, double v_deg) const;

    private:
        SarGainModel(const SarSensor &sensor) : sensor_(sensor), fallback_{sensor, -10.0} {}
        SarSensor sensor_;
        ParametricSarPattern fallback_;
        std::optional<SarGainTable> table_;
    };

    double sar_gain(double off_axis_h_deg, double off_axis_v_deg, const SarGainModel &model, SarZone zone);

    // kTB + NF in dBW.
    double sar_noise_power(double bandwidth_mhz, double nf_db);

    struct SarOffAxis
    {
        double h_deg = 0.0;
        double v_deg = 0.0;
        SarZone zone = SarZone::main_beam;
    };

    // Antenna frame at the satellite: boresight b, vertical axis in the plane containing b and
    // nadir, horizontal axis completing the triad. v is the angle within the vertical plane,
    // h the angle out of it.
    struct SarAntennaFrame
    {
        Vec3 origin_km;
        Vec3 boresight, vertical, horizontal;

        static SarAntennaFrame make(const SatelliteState &sat, const BeamPointing &pointing);
        SarOffAxis off_axis(const Vec3 &target_ecef, const SarSensor &sensor) const;
    };

    SarOffAxis off_axis_of_bs(const SatelliteState &sat, const BeamPointing &pointing, const GeodeticPosition &bs,
                              const SarSensor &sensor = {});
}

#endif
