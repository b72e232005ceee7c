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

#include "sarshare/engine.hpp"

#include "sarshare/random.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace sarshare
{
    namespace
    {
        std::string num(double x)
        {
            std::ostringstream os;
            os << x;
            return os.str();
        }

        [[noreturn]] void config_fail(const std::string &key, const std::string &msg) { throw ConfigError(key, msg); }

        unsigned resolve_threads(unsigned requested)
        {
            if (requested > 0)
                return requested;
            const unsigned hw = std::thread::hardware_concurrency();
            return hw == 0 ? 1 : hw;
        }

        SarGainModel make_sar_model(const ScenarioConfig &cfg)
        {
            if (!cfg.sar_table_path.empty())
                return SarGainModel::tabulated(cfg.sensor, SarGainTable::load_csv(cfg.sar_table_path));
            return SarGainModel::parametric(cfg.sensor, cfg.sar_floor_dbi);
        }
    }

    GeodeticPosition study_satellite_position(double bla_deg)
    {
        if (bla_deg == 18.0)
            return {-48.0187, -23.6060, 0.0};
        if (bla_deg == 50.0)
            return {-52.8908, -23.4922, 0.0};
        throw std::invalid_argument("no study satellite position for BLA " + num(bla_deg) +
                                    " deg; set satellite.longitude_deg and satellite.latitude_deg");
    }

    GeodeticPosition ScenarioConfig::satellite_position() const
    {
        GeodeticPosition p;
        if (sat_longitude_deg && sat_latitude_deg)
            p = {*sat_longitude_deg, *sat_latitude_deg, 0.0};
        else
            p = study_satellite_position(bla_deg);
        p.altitude_km = sat_altitude_km;
        return p;
    }

    WeightMatrix ScenarioConfig::weights() const
    {
        if (!weights_path.empty())
            return WeightMatrix::load_csv(weights_path);
        if (ssl_enabled)
            return taylor_weights(array.n_v, array.n_h, ssl_sll_db, ssl_nbar);
        return WeightMatrix::uniform(array.n_v, array.n_h);
    }

    void ScenarioConfig::validate() const
    {
        if (operators < 1)
            config_fail("scenario.operators", "must be at least 1");
        if (!(channel_bandwidth_mhz > 0.0))
            config_fail("scenario.channel_bandwidth_mhz", "must be positive");
        if (!(noise_bandwidth_mhz > 0.0))
            config_fail("scenario.noise_bandwidth_mhz", "must be positive");
        if (std::abs(noise_bandwidth_mhz - channel_bandwidth_mhz * operators) > 1e-9)
            config_fail("scenario.noise_bandwidth_mhz",
                        "must equal channel_bandwidth_mhz x operators (" + num(channel_bandwidth_mhz * operators) +
                            " MHz), got " + num(noise_bandwidth_mhz));
        if (snapshots < 1)
            config_fail("scenario.snapshots", "must be at least 1");
        if (!(bla_deg > 0.0 && bla_deg < 90.0))
            config_fail("scenario.bla_deg", "must lie in (0, 90)");
        if (sat_longitude_deg.has_value() != sat_latitude_deg.has_value())
            config_fail("satellite.longitude_deg", "longitude and latitude must be given together");
        if (!sat_longitude_deg && bla_deg != 18.0 && bla_deg != 50.0)
            config_fail("scenario.bla_deg", "only 18 and 50 have a built-in satellite position; set satellite.*");
        if (!(sat_altitude_km > 0.0))
            config_fail("satellite.altitude_km", "must be positive");
        if (!(sat_inclination_deg >= 0.0 && sat_inclination_deg <= 180.0))
            config_fail("satellite.inclination_deg", "must lie in [0, 180]");
        if (!(frequency_ghz >= 10.0 && frequency_ghz <= 100.0) && clutter_enabled)
            config_fail("propagation.frequency_ghz", "clutter model needs 10-100 GHz");
        if (!(frequency_ghz > 0.0))
            config_fail("propagation.frequency_ghz", "must be positive");
        if (polarization_loss_db < 0.0)
            config_fail("propagation.polarization_loss_db", "must be non-negative");
        if (ssl_enabled && !(ssl_sll_db <= -13.27))
            config_fail("antenna.ssl_sll_db", "must be at or below -13.27 dB");
        if (ssl_enabled && ssl_nbar < 1)
            config_fail("antenna.ssl_nbar", "must be at least 1");
        if (!sar_fallback && sar_table_path.empty())
            config_fail("sar.table_path", "required when sar.fallback is false");
        const auto wrap = [](const char *key, const auto &fn) {
            try
            {
                fn();
            }
            catch (const ConfigError &)
            {
                throw;
            }
            catch (const std::exception &e)
            {
                throw ConfigError(key, e.what());
            }
        };
        const std::pair<const char *, double> ratios[] = {
            {"deployment.bs_af", deployment.bs_af}, {"deployment.bs_nlf", deployment.bs_nlf},
            {"deployment.ra_u", deployment.ra_u},   {"deployment.ra_su", deployment.ra_su},
            {"deployment.rb_z3", deployment.rb_z3},
        };
        for (const auto &[key, v] : ratios)
            if (!(v >= 0.0 && v <= 1.0))
                config_fail(key, "must lie in [0, 1], got " + num(v));
        if (!(deployment.d_bs_u > 0.0))
            config_fail("deployment.d_bs_u", "must be positive");
        if (!(deployment.d_bs_su > 0.0))
            config_fail("deployment.d_bs_su", "must be positive");
        wrap("zones", [&] { zones.validate(); });
        wrap("deployment", [&] { deployment.validate(); });
        wrap("antenna", [&] { array.validate(); });
        wrap("sar", [&] { sensor.validate(); });
        if (deployment.operators != operators)
            config_fail("deployment.operators", "must match scenario.operators");
        if (!(steering_grid.step_deg > 0.0 && steering_grid.tilt_min_deg <= steering_grid.tilt_max_deg &&
              steering_grid.scan_min_deg <= steering_grid.scan_max_deg))
            config_fail("antenna.steering_grid", "invalid grid");
    }

    const char *to_string(StudyCase c)
    {
        switch (c)
        {
        case StudyCase::baseline: return "baseline";
        case StudyCase::case1: return "case1";
        case StudyCase::case2: return "case2";
        case StudyCase::case3: return "case3";
        }
        return "?";
    }

    ScenarioConfig scenario_for_case(StudyCase c, const ScenarioConfig &base)
    {
        ScenarioConfig cfg = base;
        cfg.name = to_string(c);
        const bool single = c == StudyCase::case1 || c == StudyCase::case3;
        cfg.operators = single ? 1 : 4;
        cfg.deployment.operators = cfg.operators;
        cfg.noise_bandwidth_mhz = cfg.channel_bandwidth_mhz * cfg.operators;
        cfg.ssl_enabled = c == StudyCase::case2 || c == StudyCase::case3;
        cfg.normalize.reset();
        return cfg;
    }

    // ---------------------------------------------------------------------------------------

    LinkModel::LinkModel(const ScenarioConfig &cfg)
    {
        cfg.validate();
        tx_psd_dbw_per_mhz_ = tx_power_spectral_density(cfg.array, cfg.channel_bandwidth_mhz);
        const double in_band = std::min(cfg.channel_bandwidth_mhz, cfg.sensor.rf_bandwidth_mhz);
        channel_power_dbw_ = tx_psd_dbw_per_mhz_ + linear_to_db(in_band);
        noise_dbw_ = sar_noise_power(cfg.noise_bandwidth_mhz, cfg.sensor.noise_figure_db);
        frequency_ghz_ = cfg.frequency_ghz;
        path_options_.clutter_enabled = cfg.clutter_enabled;
        path_options_.polarization_db = cfg.polarization_loss_db;
        antenna_ = std::make_shared<const CompositeAntenna>(cfg.array, cfg.weights(), cfg.normalized(), cfg.steering_grid);
        sar_ = std::make_shared<const SarGainModel>(make_sar_model(cfg));
    }

    double compose_entry(double p_tx_dbw, double g_tx_dbi, double g_rx_dbi, double fspl_db, double clutter_db,
                         double polarization_db, double n_rx_dbw)
    {
        const double x = p_tx_dbw + g_tx_dbi + g_rx_dbi - fspl_db - clutter_db - polarization_db - n_rx_dbw;
        return std::isnan(x) ? constants::kInOverNFloorDb : std::max(x, constants::kInOverNFloorDb);
    }

    EntryBreakdown single_entry_breakdown(const BaseStation &bs, const UeDrop &ue, const SatelliteState &sat,
                                          const SarAntennaFrame &frame, double clutter_pct, const LinkModel &link)
    {
        EntryBreakdown e;
        const Vec3 bs_ecef = to_ecef(bs.position);
        const LookAngles look =
            slant_range_and_look(bs_ecef, enu_basis(bs.position.longitude_deg, bs.position.latitude_deg), sat.position_km);
        e.elevation_deg = look.elevation_deg;
        e.lcs = gcs_to_lcs(look.elevation_deg, look.azimuth_deg, bs.panel);
        e.p_tx_dbw = link.channel_power_dbw();
        e.g_tx_dbi = link.antenna().gain_dbi(e.lcs, ue.steering);
        e.off_axis = frame.off_axis(bs_ecef, link.sar().sensor());
        e.g_rx_dbi = sar_gain(e.off_axis.h_deg, e.off_axis.v_deg, link.sar(), static_cast<SarZone>(bs.zone));
        e.loss = path_loss(look.range_km, link.frequency_ghz(), look.elevation_deg, clutter_pct, link.path_options());
        e.n_rx_dbw = link.noise_dbw();
        e.i_over_n_db = compose_entry(e.p_tx_dbw, e.g_tx_dbi, e.g_rx_dbi, e.loss.fspl_db, e.loss.clutter_db,
                                      e.loss.polarization_db, e.n_rx_dbw);
        return e;
    }

    double single_entry_in(const BaseStation &bs, const UeDrop &ue, const SatelliteState &sat,
                           const BeamPointing &pointing, double clutter_pct, const LinkModel &link)
    {
        return single_entry_breakdown(bs, ue, sat, SarAntennaFrame::make(sat, pointing), clutter_pct, link).i_over_n_db;
    }

    double aggregate_in(std::span<const double> entries_db)
    {
        if (entries_db.empty())
            throw std::invalid_argument("aggregate I/N needs at least one entry");
        const double peak = *std::max_element(entries_db.begin(), entries_db.end());
        if (!(peak > constants::kInOverNFloorDb))
            return constants::kInOverNFloorDb;
        double sum = 0.0;
        for (double x : entries_db)
            sum += std::pow(10.0, (x - peak) / 10.0);
        return std::max(peak + 10.0 * std::log10(sum), constants::kInOverNFloorDb);
    }

    // ---------------------------------------------------------------------------------------

    CcdfTable::CcdfTable(std::vector<double> samples_db) : sorted_(std::move(samples_db))
    {
        std::sort(sorted_.begin(), sorted_.end());
    }

    std::vector<CcdfRow> CcdfTable::rows() const
    {
        std::vector<CcdfRow> out;
        out.reserve(sorted_.size());
        const double n = static_cast<double>(sorted_.size());
        for (std::size_t i = 0; i < sorted_.size(); ++i)
            out.push_back({sorted_[i], (n - static_cast<double>(i)) / n});
        return out;
    }

    double CcdfTable::value_at_exceedance(double prob) const
    {
        if (sorted_.empty())
            throw std::logic_error("empty CCDF");
        if (!(prob > 0.0 && prob < 1.0))
            throw std::invalid_argument("exceedance probability must lie in (0, 1)");
        const double n = static_cast<double>(sorted_.size());
        auto rank = static_cast<std::size_t>(std::ceil((1.0 - prob) * n - 1e-9));
        rank = std::clamp<std::size_t>(rank, 1, sorted_.size());
        return sorted_[rank - 1];
    }

    ExceedanceReport evaluate_exceedance(const std::string &scenario, const CcdfTable &ccdf, double criterion_db)
    {
        ExceedanceReport r;
        r.scenario = scenario;
        r.criterion_db = criterion_db;
        r.in_at_1pct_db = ccdf.value_at_exceedance(0.01);
        r.margin_db = criterion_db - r.in_at_1pct_db;
        r.pass = r.margin_db >= 0.0;
        r.snapshots = ccdf.size();
        return r;
    }

    // ---------------------------------------------------------------------------------------

    Simulation::Simulation(ScenarioConfig cfg) : cfg_(std::move(cfg)), link_(cfg_)
    {
        sat_ = satellite_on_ascending_pass(cfg_.satellite_position(), cfg_.sat_inclination_deg);
        pointing_.bla_deg = cfg_.bla_deg;
        pointing_.azimuth_deg = cfg_.beam_azimuth_deg;
        frame_ = SarAntennaFrame::make(sat_, pointing_);
        zones_ = cfg_.zones;
        zones_.center = sarshare::footprint_center(sat_, pointing_);
        counts_ = active_bs_counts(zones_, cfg_.deployment).scaled(cfg_.operators);
    }

    SnapshotResult Simulation::run_snapshot(std::uint64_t index, bool keep_entries) const
    {
        RandomStream rng = RandomStream::for_snapshot(cfg_.seed, index);
        const std::vector<BaseStation> stations = drop_base_stations(zones_, counts_, cfg_.deployment, rng);
        SnapshotResult r;
        if (stations.empty())
            return r;
        std::vector<double> entries;
        entries.reserve(stations.size());
        if (keep_entries)
            r.entries.reserve(stations.size());
        for (const BaseStation &bs : stations)
        {
            const UeDrop ue = sample_ue_drop(bs, cfg_.deployment, rng);
            const double pct = 100.0 * rng.uniform_open();
            EntryBreakdown e = single_entry_breakdown(bs, ue, sat_, frame_, pct, link_);
            entries.push_back(e.i_over_n_db);
            if (keep_entries)
                r.entries.push_back(std::move(e));
        }
        r.i_agg_over_n_db = aggregate_in(entries);
        return r;
    }

    std::vector<double> Simulation::run_range(std::uint64_t first, std::uint64_t count, unsigned threads,
                                              const std::function<void(std::uint64_t)> &progress) const
    {
        std::vector<double> out(count);
        constexpr std::uint64_t kChunk = 256;
        std::atomic<std::uint64_t> next{0};
        std::atomic<std::uint64_t> done{0};
        std::mutex mu;
        std::exception_ptr error;

        auto worker = [&] {
            try
            {
                for (;;)
                {
                    const std::uint64_t begin = next.fetch_add(kChunk);
                    if (begin >= count)
                        break;
                    {
                        std::lock_guard lock(mu);
                        if (error)
                            break;
                    }
                    const std::uint64_t end = std::min(count, begin + kChunk);
                    for (std::uint64_t k = begin; k < end; ++k)
                        out[k] = run_snapshot(first + k).i_agg_over_n_db;
                    const std::uint64_t total = done.fetch_add(end - begin) + (end - begin);
                    if (progress)
                    {
                        std::lock_guard lock(mu);
                        progress(total);
                    }
                }
            }
            catch (...)
            {
                std::lock_guard lock(mu);
                if (!error)
                    error = std::current_exception();
            }
        };

        const unsigned n = std::min<std::uint64_t>(resolve_threads(threads), (count + kChunk - 1) / kChunk);
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < n; ++t)
            pool.emplace_back(worker);
        worker();
        for (auto &t : pool)
            t.join();
        if (error)
            std::rethrow_exception(error);
        return out;
    }

    SnapshotResult run_snapshot(const ScenarioConfig &cfg, std::uint64_t snapshot_index)
    {
        return Simulation(cfg).run_snapshot(snapshot_index);
    }

    ScenarioResult summarize(const ScenarioConfig &cfg, std::vector<double> samples_db)
    {
        ScenarioResult r;
        r.config = cfg;
        r.ccdf = CcdfTable(samples_db);
        r.samples_db = std::move(samples_db);
        r.report = evaluate_exceedance(cfg.name, r.ccdf);
        return r;
    }

    ScenarioResult run_scenario(const ScenarioConfig &cfg, const std::function<void(std::uint64_t)> &progress)
    {
        const Simulation sim(cfg);
        ScenarioResult r = summarize(cfg, sim.run_range(0, cfg.snapshots, cfg.threads, progress));
        r.footprint_center = sim.footprint_center();
        r.counts = sim.counts();
        return r;
    }

    std::vector<ScenarioResult> run_case_suite(const ScenarioConfig &base,
                                               const std::function<void(const std::string &)> &log)
    {
        std::vector<ScenarioResult> out;
        for (StudyCase c : {StudyCase::baseline, StudyCase::case1, StudyCase::case2, StudyCase::case3})
        {
            const ScenarioConfig cfg = scenario_for_case(c, base);
            if (log)
                log(cfg.name);
            out.push_back(run_scenario(cfg));
        }
        return out;
    }
}
