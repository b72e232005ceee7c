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

#include "sarshare/scenario_config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sarshare
{
    namespace
    {
        struct Field
        {
            ConfigKey key;
            std::function<void(ScenarioConfig &, std::string_view)> set;
            std::function<std::string(const ScenarioConfig &)> get;
        };

        std::string_view trim(std::string_view s)
        {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
                s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
                s.remove_suffix(1);
            return s;
        }

        std::string format_double(double x)
        {
            char buf[64];
            const auto res = std::to_chars(buf, buf + sizeof buf, x);
            return std::string(buf, res.ptr);
        }

        template <class T> T parse_number(std::string_view v)
        {
            T x{};
            const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
            if (res.ec != std::errc() || res.ptr != v.data() + v.size())
                throw std::invalid_argument("not a valid number: '" + std::string(v) + "'");
            if constexpr (std::is_floating_point_v<T>)
                if (!std::isfinite(x))
                    throw std::invalid_argument("number must be finite");
            return x;
        }

        bool parse_bool(std::string_view v)
        {
            if (v == "true" || v == "1" || v == "yes" || v == "on")
                return true;
            if (v == "false" || v == "0" || v == "no" || v == "off")
                return false;
            throw std::invalid_argument("not a boolean: '" + std::string(v) + "'");
        }

        std::string unquote(std::string_view v)
        {
            if (v.size() >= 2 && v.front() == '"' && v.back() == '"')
                v = v.substr(1, v.size() - 2);
            return std::string(v);
        }

        template <class Access> Field real(std::string name, std::string desc, Access a)
        {
            return {{std::move(name), std::move(desc)},
                    [a](ScenarioConfig &c, std::string_view v) { a(c) = parse_number<double>(v); },
                    [a](const ScenarioConfig &c) { return format_double(a(const_cast<ScenarioConfig &>(c))); }};
        }

        template <class Access> Field integer(std::string name, std::string desc, Access a)
        {
            using T = std::remove_reference_t<decltype(a(std::declval<ScenarioConfig &>()))>;
            return {{std::move(name), std::move(desc)},
                    [a](ScenarioConfig &c, std::string_view v) { a(c) = parse_number<T>(v); },
                    [a](const ScenarioConfig &c) { return std::to_string(a(const_cast<ScenarioConfig &>(c))); }};
        }

        template <class Access> Field flag(std::string name, std::string desc, Access a)
        {
            return {{std::move(name), std::move(desc)},
                    [a](ScenarioConfig &c, std::string_view v) { a(c) = parse_bool(v); },
                    [a](const ScenarioConfig &c) { return std::string(a(const_cast<ScenarioConfig &>(c)) ? "true" : "false"); }};
        }

        template <class Access> Field text(std::string name, std::string desc, Access a)
        {
            return {{std::move(name), std::move(desc)},
                    [a](ScenarioConfig &c, std::string_view v) { a(c) = unquote(v); },
                    [a](const ScenarioConfig &c) { return a(const_cast<ScenarioConfig &>(c)); }};
        }

        template <class T, class Access> Field optional(std::string name, std::string desc, Access a)
        {
            return {{std::move(name), std::move(desc)},
                    [a](ScenarioConfig &c, std::string_view v) {
                        if (v == "auto" || v.empty())
                            a(c).reset();
                        else if constexpr (std::is_same_v<T, bool>)
                            a(c) = parse_bool(v);
                        else
                            a(c) = parse_number<T>(v);
                    },
                    [a](const ScenarioConfig &c) -> std::string {
                        const auto &o = a(const_cast<ScenarioConfig &>(c));
                        if (!o)
                            return "auto";
                        if constexpr (std::is_same_v<T, bool>)
                            return *o ? "true" : "false";
                        else if constexpr (std::is_floating_point_v<T>)
                            return format_double(*o);
                        else
                            return std::to_string(*o);
                    }};
        }

#define SARSHARE_FIELD(expr) [](ScenarioConfig &c) -> auto & { return c.expr; }

        const std::vector<Field> &fields()
        {
            static const std::vector<Field> f = {
                text("scenario.name", "label written to summary.csv", SARSHARE_FIELD(name)),
                real("scenario.bla_deg", "SAR beam look angle off nadir (18 or 50 have built-in satellite positions)", SARSHARE_FIELD(bla_deg)),
                real("scenario.beam_azimuth_deg", "SAR beam azimuth from the ground track (90 = right-looking)", SARSHARE_FIELD(beam_azimuth_deg)),
                integer("scenario.operators", "co-channel IMT operators", SARSHARE_FIELD(operators)),
                real("scenario.channel_bandwidth_mhz", "IMT channel bandwidth per operator", SARSHARE_FIELD(channel_bandwidth_mhz)),
                real("scenario.noise_bandwidth_mhz", "SAR noise reference bandwidth; must equal channel x operators", SARSHARE_FIELD(noise_bandwidth_mhz)),
                integer("scenario.snapshots", "Monte Carlo snapshots", SARSHARE_FIELD(snapshots)),
                integer("scenario.seed", "64-bit master seed", SARSHARE_FIELD(seed)),
                integer("scenario.threads", "worker threads, 0 = all cores (does not affect results)", SARSHARE_FIELD(threads)),

                flag("antenna.ssl_enabled", "Taylor sidelobe-suppression weights", SARSHARE_FIELD(ssl_enabled)),
                real("antenna.ssl_sll_db", "Taylor design sidelobe level", SARSHARE_FIELD(ssl_sll_db)),
                integer("antenna.ssl_nbar", "Taylor n-bar", SARSHARE_FIELD(ssl_nbar)),
                optional<bool>("antenna.normalize", "directivity normalization (auto = on with SSL)", SARSHARE_FIELD(normalize)),
                text("antenna.weights_path", "CSV weight matrix replacing the taper", SARSHARE_FIELD(weights_path)),
                integer("antenna.n_h", "columns", SARSHARE_FIELD(array.n_h)),
                integer("antenna.n_v", "rows", SARSHARE_FIELD(array.n_v)),
                real("antenna.spacing_h", "horizontal spacing in wavelengths", SARSHARE_FIELD(array.spacing_h)),
                real("antenna.spacing_v", "vertical spacing in wavelengths", SARSHARE_FIELD(array.spacing_v)),
                integer("antenna.polarizations", "polarizations per element", SARSHARE_FIELD(array.polarizations)),
                real("antenna.ohmic_loss_db", "ohmic loss (included in element gain)", SARSHARE_FIELD(array.ohmic_loss_db)),
                real("antenna.conducted_power_per_element_dbm", "conducted power per element", SARSHARE_FIELD(array.conducted_power_per_element_dbm)),
                real("antenna.extra_power_db", "extra conducted power", SARSHARE_FIELD(array.extra_power_db)),
                real("antenna.element.gain_max_dbi", "element peak gain", SARSHARE_FIELD(array.element.gain_max_dbi)),
                real("antenna.element.hbw_deg", "element horizontal 3 dB beamwidth", SARSHARE_FIELD(array.element.hbw_deg)),
                real("antenna.element.vbw_deg", "element vertical 3 dB beamwidth", SARSHARE_FIELD(array.element.vbw_deg)),
                real("antenna.element.front_to_back_db", "element front-to-back ratio", SARSHARE_FIELD(array.element.front_to_back_db)),
                real("antenna.element.sla_v_db", "element vertical sidelobe attenuation", SARSHARE_FIELD(array.element.sla_v_db)),
                real("antenna.steering_grid.tilt_min_deg", "normalization table electrical tilt minimum", SARSHARE_FIELD(steering_grid.tilt_min_deg)),
                real("antenna.steering_grid.tilt_max_deg", "normalization table electrical tilt maximum", SARSHARE_FIELD(steering_grid.tilt_max_deg)),
                real("antenna.steering_grid.scan_min_deg", "normalization table scan minimum", SARSHARE_FIELD(steering_grid.scan_min_deg)),
                real("antenna.steering_grid.scan_max_deg", "normalization table scan maximum", SARSHARE_FIELD(steering_grid.scan_max_deg)),
                real("antenna.steering_grid.step_deg", "normalization table step", SARSHARE_FIELD(steering_grid.step_deg)),

                real("propagation.frequency_ghz", "IMT carrier frequency", SARSHARE_FIELD(frequency_ghz)),
                flag("propagation.clutter_enabled", "Earth-space clutter loss", SARSHARE_FIELD(clutter_enabled)),
                real("propagation.polarization_loss_db", "polarization mismatch loss", SARSHARE_FIELD(polarization_loss_db)),

                real("satellite.altitude_km", "satellite altitude over the spherical Earth", SARSHARE_FIELD(sat_altitude_km)),
                real("satellite.inclination_deg", "orbit inclination", SARSHARE_FIELD(sat_inclination_deg)),
                optional<double>("satellite.longitude_deg", "satellite longitude (auto = study position)", SARSHARE_FIELD(sat_longitude_deg)),
                optional<double>("satellite.latitude_deg", "satellite latitude (auto = study position)", SARSHARE_FIELD(sat_latitude_deg)),

                real("zones.z1_km2", "zone 1 surface", SARSHARE_FIELD(zones.z1_km2)),
                real("zones.z2_km2", "zone 2 surface", SARSHARE_FIELD(zones.z2_km2)),
                real("zones.z3_km2", "zone 3 surface", SARSHARE_FIELD(zones.z3_km2)),

                real("deployment.bs_af", "TDD activity factor", SARSHARE_FIELD(deployment.bs_af)),
                real("deployment.bs_nlf", "network loading factor", SARSHARE_FIELD(deployment.bs_nlf)),
                real("deployment.ra_u", "urban hotspot ratio", SARSHARE_FIELD(deployment.ra_u)),
                real("deployment.ra_su", "suburban hotspot ratio", SARSHARE_FIELD(deployment.ra_su)),
                real("deployment.rb_z3", "built-area ratio in zone 3", SARSHARE_FIELD(deployment.rb_z3)),
                real("deployment.d_bs_u", "urban BS density per km2", SARSHARE_FIELD(deployment.d_bs_u)),
                real("deployment.d_bs_su", "suburban BS density per km2", SARSHARE_FIELD(deployment.d_bs_su)),
                real("deployment.bs_height_m", "BS antenna height", SARSHARE_FIELD(deployment.bs_height_m)),
                real("deployment.mech_downtilt_deg", "mechanical downtilt", SARSHARE_FIELD(deployment.mech_downtilt_deg)),
                real("deployment.min_ue_ground_m", "minimum BS-UE ground distance (redrawn below)", SARSHARE_FIELD(deployment.min_ue_ground_m)),
                real("deployment.ue_azimuth_sd_deg", "UE azimuth standard deviation", SARSHARE_FIELD(deployment.ue_azimuth_sd_deg)),
                real("deployment.ue_azimuth_limit_deg", "UE azimuth truncation", SARSHARE_FIELD(deployment.ue_azimuth_limit_deg)),
                real("deployment.ue_distance_sigma_m", "Rayleigh scale of the UE distance", SARSHARE_FIELD(deployment.ue_distance_sigma_m)),
                real("deployment.min_steering_elevation_deg", "lowest beam elevation", SARSHARE_FIELD(deployment.min_steering_elevation_deg)),
                optional<int>("deployment.z3_count_override", "zone 3 BS count per operator (auto = formula)", SARSHARE_FIELD(deployment.z3_count_override)),

                real("sar.peak_gain_dbi", "receive peak gain", SARSHARE_FIELD(sensor.peak_gain_dbi)),
                real("sar.elev_bw_deg", "elevation 3 dB beamwidth", SARSHARE_FIELD(sensor.elev_bw_deg)),
                real("sar.az_bw_deg", "azimuth 3 dB beamwidth", SARSHARE_FIELD(sensor.az_bw_deg)),
                real("sar.noise_figure_db", "receiver noise figure", SARSHARE_FIELD(sensor.noise_figure_db)),
                real("sar.rf_bandwidth_mhz", "receiver RF bandwidth", SARSHARE_FIELD(sensor.rf_bandwidth_mhz)),
                real("sar.center_freq_mhz", "receiver center frequency", SARSHARE_FIELD(sensor.center_freq_mhz)),
                real("sar.tig_db", "antenna TIG used in the outside-beam correction", SARSHARE_FIELD(sensor.tig_db)),
                real("sar.efficiency", "antenna efficiency used in the outside-beam correction", SARSHARE_FIELD(sensor.efficiency)),
                flag("sar.fallback", "allow the parametric pattern when no table is given", SARSHARE_FIELD(sar_fallback)),
                real("sar.floor_dbi", "parametric pattern floor", SARSHARE_FIELD(sar_floor_dbi)),
                text("sar.table_path", "gain table CSV (v_deg,h_deg,gain_dbi)", SARSHARE_FIELD(sar_table_path)),
            };
            return f;
        }

#undef SARSHARE_FIELD

        const Field &find_field(std::string_view key)
        {
            const auto &all = fields();
            for (const Field &f : all)
                if (f.key.name == key)
                    return f;
            if (key.find('.') == std::string_view::npos)
            {
                const Field *hit = nullptr;
                for (const Field &f : all)
                {
                    const std::string_view n = f.key.name;
                    if (n.size() > key.size() && n.substr(n.size() - key.size()) == key && n[n.size() - key.size() - 1] == '.')
                    {
                        if (hit)
                            throw ConfigError(std::string(key), "ambiguous key; use the full section path");
                        hit = &f;
                    }
                }
                if (hit)
                    return *hit;
            }
            throw ConfigError(std::string(key), "unknown key");
        }
    }

    const std::vector<ConfigKey> &config_schema()
    {
        static const std::vector<ConfigKey> keys = [] {
            std::vector<ConfigKey> k;
            for (const Field &f : fields())
                k.push_back(f.key);
            return k;
        }();
        return keys;
    }

    void set_config_value(ScenarioConfig &cfg, std::string_view key, std::string_view value)
    {
        const Field &f = find_field(trim(key));
        try
        {
            f.set(cfg, trim(value));
        }
        catch (const ConfigError &)
        {
            throw;
        }
        catch (const std::exception &e)
        {
            throw ConfigError(f.key.name, e.what());
        }
        cfg.deployment.operators = cfg.operators;
    }

    ScenarioConfig parse_config(std::string_view document)
    {
        ScenarioConfig cfg;
        std::vector<std::string> seen;
        int line_no = 0;
        while (!document.empty())
        {
            const std::size_t eol = document.find('\n');
            std::string_view line = document.substr(0, eol);
            document.remove_prefix(eol == std::string_view::npos ? document.size() : eol + 1);
            ++line_no;
            if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;
            const std::size_t eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
            const std::string_view key = trim(line.substr(0, eq));
            const std::string &name = find_field(key).key.name;
            if (std::find(seen.begin(), seen.end(), name) != seen.end())
                throw ConfigError(name, "duplicate key");
            seen.push_back(name);
            set_config_value(cfg, key, line.substr(eq + 1));
        }
        cfg.validate();
        return cfg;
    }

    ScenarioConfig load_config(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw ConfigError(path, "cannot open config file");
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_config(ss.str());
    }

    std::string format_config(const ScenarioConfig &cfg)
    {
        std::string out;
        std::string section;
        for (const Field &f : fields())
        {
            const std::string s = f.key.name.substr(0, f.key.name.find('.'));
            if (s != section)
            {
                if (!section.empty())
                    out += '\n';
                section = s;
            }
            out += f.key.name + " = " + f.get(cfg) + '\n';
        }
        return out;
    }
}
