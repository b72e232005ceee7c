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

#include "sarshare/sar_antenna.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <stdexcept>
#include <utility>

namespace sarshare
{
    namespace
    {
        // sinc^2(u) = 1/2 at u = 0.442946, so the half-power point maps to bw/2.
        constexpr double kSincHalfPowerArg = 0.4429462;

        double sinc2_db(double x_deg, double bw_deg)
        {
            const double u = 2.0 * kSincHalfPowerArg * x_deg / bw_deg;
            if (std::abs(u) < 1e-12)
                return 0.0;
            const double s = std::sin(constants::kPi * u) / (constants::kPi * u);
            return linear_to_db(std::max(s * s, 1e-30));
        }

        // Index i with axis[i] <= x < axis[i+1]; clamps to the edge cell.
        std::pair<std::size_t, double> locate(const std::vector<double> &axis, double x)
        {
            if (axis.size() == 1 || x <= axis.front())
                return {0, 0.0};
            if (x >= axis.back())
                return {axis.size() - 2, 1.0};
            const auto it = std::upper_bound(axis.begin(), axis.end(), x);
            const std::size_t i = static_cast<std::size_t>(it - axis.begin()) - 1;
            return {i, (x - axis[i]) / (axis[i + 1] - axis[i])};
        }

        double parse_field(std::string_view f, int line_no)
        {
            while (!f.empty() && (f.front() == ' ' || f.front() == '\t'))
                f.remove_prefix(1);
            while (!f.empty() && (f.back() == ' ' || f.back() == '\t' || f.back() == '\r'))
                f.remove_suffix(1);
            double v = 0.0;
            const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
            if (res.ec != std::errc() || res.ptr != f.data() + f.size())
                throw std::invalid_argument("SAR gain table line " + std::to_string(line_no) + ": bad number '" +
                                            std::string(f) + "'");
            return v;
        }
    }

    void SarSensor::validate() const
    {
        if (!(peak_gain_dbi > 0.0 && elev_bw_deg > 0.0 && az_bw_deg > 0.0 && rf_bandwidth_mhz > 0.0 &&
              center_freq_mhz > 0.0 && noise_figure_db >= 0.0))
            throw std::invalid_argument("SAR sensor parameters must be positive");
        if (!(efficiency > 0.0 && efficiency <= 1.0))
            throw std::invalid_argument("SAR antenna efficiency must lie in (0, 1]");
    }

    double SarSensor::outside_beam_correction_db() const { return linear_to_db(efficiency) - tig_db; }

    // ---------------------------------------------------------------------------------------

    SarGainTable SarGainTable::read_csv(std::istream &in)
    {
        std::string line;
        int line_no = 0;
        while (std::getline(in, line))
        {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                break;
        }
        std::string header = line;
        header.erase(std::remove_if(header.begin(), header.end(), [](char c) { return c == ' ' || c == '\r'; }), header.end());
        if (header != "v_deg,h_deg,gain_dbi")
            throw std::invalid_argument("SAR gain table header must be 'v_deg,h_deg,gain_dbi'");

        std::map<std::pair<double, double>, double> points;
        std::vector<double> vs, hs;
        while (std::getline(in, line))
        {
            ++line_no;
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            const std::size_t c1 = line.find(',');
            const std::size_t c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
            if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos)
                throw std::invalid_argument("SAR gain table line " + std::to_string(line_no) + ": expected 3 fields");
            const std::string_view sv(line);
            const double v = parse_field(sv.substr(0, c1), line_no);
            const double h = parse_field(sv.substr(c1 + 1, c2 - c1 - 1), line_no);
            const double g = parse_field(sv.substr(c2 + 1), line_no);
            if (!points.emplace(std::make_pair(v, h), g).second)
                throw std::invalid_argument("SAR gain table line " + std::to_string(line_no) + ": duplicate grid point");
            vs.push_back(v);
            hs.push_back(h);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        std::sort(hs.begin(), hs.end());
        hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
        if (vs.empty() || points.size() != vs.size() * hs.size())
            throw std::invalid_argument("SAR gain table must be a complete rectilinear grid");

        SarGainTable t;
        t.v_ = std::move(vs);
        t.h_ = std::move(hs);
        t.gain_.reserve(points.size());
        for (double v : t.v_)
            for (double h : t.h_)
                t.gain_.push_back(points.at({v, h}));
        return t;
    }

    SarGainTable SarGainTable::load_csv(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open SAR gain table '" + path + "'");
        return read_csv(in);
    }

    double SarGainTable::gain_dbi(double h_deg, double v_deg) const
    {
        const auto [iv, fv] = locate(v_, v_deg);
        const std::size_t nh = h_.size();
        if (nh == 1 && v_.size() == 1)
            return gain_.front();
        const auto [ih, fh] = locate(h_, h_deg);
        auto at = [&](std::size_t i, std::size_t j) {
            i = std::min(i, v_.size() - 1);
            j = std::min(j, nh - 1);
            return gain_[i * nh + j];
        };
        const double g0 = at(iv, ih) * (1.0 - fh) + at(iv, ih + 1) * fh;
        const double g1 = at(iv + 1, ih) * (1.0 - fh) + at(iv + 1, ih + 1) * fh;
        return g0 * (1.0 - fv) + g1 * fv;
    }

    double SarGainTable::peak_gain_dbi() const { return *std::max_element(gain_.begin(), gain_.end()); }

    double ParametricSarPattern::gain_dbi(double h_deg, double v_deg) const
    {
        if (std::abs(v_deg) >= 90.0 || std::abs(h_deg) >= 90.0)
            return floor_dbi;
        const double g = sensor.peak_gain_dbi + sinc2_db(v_deg, sensor.elev_bw_deg) + sinc2_db(h_deg, sensor.az_bw_deg);
        return std::max(g, floor_dbi);
    }

    SarGainModel SarGainModel::parametric(const SarSensor &sensor, double floor_dbi)
    {
        sensor.validate();
        SarGainModel m(sensor);
        m.fallback_.floor_dbi = floor_dbi;
        return m;
    }

    SarGainModel SarGainModel::tabulated(const SarSensor &sensor, SarGainTable table)
    {
        sensor.validate();
        SarGainModel m(sensor);
        m.table_ = std::move(table);
        return m;
    }

    double SarGainModel::pattern_dbi(double h_deg, double v_deg) const
    {
        return table_ ? table_->gain_dbi(h_deg, v_deg) : fallback_.gain_dbi(h_deg, v_deg);
    }

    double sar_gain(double off_axis_h_deg, double off_axis_v_deg, const SarGainModel &model, SarZone zone)
    {
        const double g = model.pattern_dbi(off_axis_h_deg, off_axis_v_deg);
        return zone == SarZone::main_beam ? g : g + model.sensor().outside_beam_correction_db();
    }

    double sar_noise_power(double bandwidth_mhz, double nf_db)
    {
        if (!(bandwidth_mhz > 0.0))
            throw std::invalid_argument("noise bandwidth must be positive");
        return linear_to_db(constants::kBoltzmann * constants::kReferenceTemperatureK * bandwidth_mhz * 1e6) + nf_db;
    }

    // ---------------------------------------------------------------------------------------

    SarAntennaFrame SarAntennaFrame::make(const SatelliteState &sat, const BeamPointing &pointing)
    {
        SarAntennaFrame f;
        f.origin_km = sat.position_km;
        f.boresight = boresight_direction(sat, pointing);
        const Vec3 nadir = -sat.position_km.normalized();
        const Vec3 in_plane = nadir - f.boresight * nadir.dot(f.boresight);
        if (in_plane.norm() < 1e-12)
        {
            // Nadir pointing: take the along-track direction as vertical reference.
            const Vec3 up = -nadir;
            f.vertical = (sat.velocity_kms - up * sat.velocity_kms.dot(up)).normalized();
        }
        else
            f.vertical = in_plane.normalized();
        f.horizontal = f.boresight.cross(f.vertical);
        return f;
    }

    SarOffAxis SarAntennaFrame::off_axis(const Vec3 &target, const SarSensor &sensor) const
    {
        const Vec3 d = (target - origin_km).normalized();
        const double b = d.dot(boresight), v = d.dot(vertical), h = d.dot(horizontal);
        SarOffAxis o;
        o.v_deg = rad_to_deg(std::atan2(v, b));
        o.h_deg = rad_to_deg(std::asin(std::clamp(h, -1.0, 1.0)));
        const double ev = o.v_deg / (0.5 * sensor.elev_bw_deg), eh = o.h_deg / (0.5 * sensor.az_bw_deg);
        o.zone = ev * ev + eh * eh <= 1.0 ? SarZone::main_beam : SarZone::zone2;
        return o;
    }

    SarOffAxis off_axis_of_bs(const SatelliteState &sat, const BeamPointing &pointing, const GeodeticPosition &bs,
                              const SarSensor &sensor)
    {
        return SarAntennaFrame::make(sat, pointing).off_axis(to_ecef(bs), sensor);
    }
}
