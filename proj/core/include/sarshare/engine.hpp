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

#ifndef SARSHARE_ENGINE_HPP
#define SARSHARE_ENGINE_HPP

#include "sarshare/deployment.hpp"
#include "sarshare/geometry.hpp"
#include "sarshare/imt_antenna.hpp"
#include "sarshare/propagation.hpp"
#include "sarshare/sar_antenna.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sarshare
{
    /*!MD
    # Monte Carlo engine

    One snapshot drops the active base stations of every operator, draws one served UE per
    BS, draws a clutter location percentage per BS and sums the single-entry I/N values in
    the linear domain:

        I/N_i = P_ch + G_tx + G_rx - FSPL - CL - L_p - N_rx

    where `P_ch` is the in-band power of one IMT channel (spectral density times channel
    bandwidth) and `N_rx = kTB + NF` over the scenario noise bandwidth. The satellite is fixed.

    Every snapshot draws from its own stream, seeded from `(seed, index)`. Results are stored
    by snapshot index, so thread count never changes any output.
    MD!*/

    // Study satellite latitude/longitude for the two look angles, fixed for each scenario.
    GeodeticPosition study_satellite_position(double bla_deg);

    struct ScenarioConfig
    {
        std::string name = "baseline";
        double bla_deg = 50.0;
        double beam_azimuth_deg = 90.0;
        int operators = 4;
        double channel_bandwidth_mhz = 100.0;
        double noise_bandwidth_mhz = 400.0;
        bool ssl_enabled = false;
        double ssl_sll_db = -30.0;
        int ssl_nbar = 4;
        std::optional<bool> normalize; // defaults to ssl_enabled
        std::string weights_path;      // custom weight matrix CSV, overrides the taper
        std::uint64_t snapshots = 163840;
        std::uint64_t seed = 1;
        unsigned threads = 0; // 0 = hardware concurrency

        double frequency_ghz = 10.2;
        bool clutter_enabled = true;
        double polarization_loss_db = 3.0;

        double sat_altitude_km = 489.0;
        double sat_inclination_deg = 88.0008;
        std::optional<double> sat_longitude_deg; // default: study position for bla_deg
        std::optional<double> sat_latitude_deg;

        ZonePlan zones;
        DeploymentParams deployment;
        ArrayConfig array;
        SteeringGrid steering_grid;
        SarSensor sensor;
        bool sar_fallback = true;
        double sar_floor_dbi = -10.0;
        std::string sar_table_path;

        bool normalized() const { return normalize.value_or(ssl_enabled); }
        GeodeticPosition satellite_position() const;
        WeightMatrix weights() const;
        void validate() const; // throws ConfigError
    };

    class ConfigError : public std::invalid_argument
    {
    public:
        ConfigError(std::string key, const std::string &message)
            : std::invalid_argument(key + ": " + message), key_(std::move(key))
        {
        }
        const std::string &key() const { return key_; }

    private:
        std::string key_;
    };

    enum class StudyCase
    {
        baseline,
        case1,
        case2,
        case3
    };

    const char *to_string(StudyCase c);

    // Baseline: 4 operators, no SSL, 400 MHz. Case 1: 1 operator, 100 MHz. Case 2: baseline + SSL.
    // Case 3: case 1 + SSL.
    ScenarioConfig scenario_for_case(StudyCase c, const ScenarioConfig &base = {});

    // Everything an I/N entry needs that does not change between snapshots.
    class LinkModel
    {
    public:
        explicit LinkModel(const ScenarioConfig &cfg);

        double channel_power_dbw() const { return channel_power_dbw_; }
        double tx_psd_dbw_per_mhz() const { return tx_psd_dbw_per_mhz_; }
        double noise_dbw() const { return noise_dbw_; }
        double frequency_ghz() const { return frequency_ghz_; }
        const PathLossOptions &path_options() const { return path_options_; }
        const CompositeAntenna &antenna() const { return *antenna_; }
        const SarGainModel &sar() const { return *sar_; }

    private:
        double tx_psd_dbw_per_mhz_ = 0.0;
        double channel_power_dbw_ = 0.0;
        double noise_dbw_ = 0.0;
        double frequency_ghz_ = 10.2;
        PathLossOptions path_options_;
        std::shared_ptr<const CompositeAntenna> antenna_;
        std::shared_ptr<const SarGainModel> sar_;
    };

    struct EntryBreakdown
    {
        double p_tx_dbw = 0.0;
        double g_tx_dbi = 0.0;
        double g_rx_dbi = 0.0;
        PathLossBreakdown loss;
        double n_rx_dbw = 0.0;
        double i_over_n_db = 0.0;
        double elevation_deg = 0.0; // satellite, seen from the BS
        LocalDirection lcs;
        SarOffAxis off_axis;
    };

    // Sum of the link terms, floored at the I/N floor.
    double compose_entry(double p_tx_dbw, double g_tx_dbi, double g_rx_dbi, double fspl_db, double clutter_db,
                         double polarization_db, double n_rx_dbw);

    EntryBreakdown single_entry_breakdown(const BaseStation &bs, const UeDrop &ue, const SatelliteState &sat,
                                          const SarAntennaFrame &frame, double clutter_pct, const LinkModel &link);

    double single_entry_in(const BaseStation &bs, const UeDrop &ue, const SatelliteState &sat,
                           const BeamPointing &pointing, double clutter_pct, const LinkModel &link);

    // 10 log10(sum 10^(x/10)); throws std::invalid_argument on an empty list.
    double aggregate_in(std::span<const double> entries_db);

    struct SnapshotResult
    {
        double i_agg_over_n_db = constants::kInOverNFloorDb;
        std::vector<EntryBreakdown> entries; // filled only on request
    };

    struct CcdfRow
    {
        double i_over_n_db;
        double prob_exceeded;
    };

    class CcdfTable
    {
    public:
        CcdfTable() = default;
        explicit CcdfTable(std::vector<double> samples_db);

        std::size_t size() const { return sorted_.size(); }
        const std::vector<double> &sorted() const { return sorted_; }
        // Row i: sorted[i] and the fraction of samples >= sorted[i], i.e. (n - i) / n.
        std::vector<CcdfRow> rows() const;
        // Nearest-rank value exceeded by at most `prob` of the samples.
        double value_at_exceedance(double prob) const;

    private:
        std::vector<double> sorted_;
    };

    struct ExceedanceReport
    {
        std::string scenario;
        double in_at_1pct_db = 0.0;
        double criterion_db = -6.0;
        double margin_db = 0.0;
        bool pass = false;
        std::uint64_t snapshots = 0;
    };

    ExceedanceReport evaluate_exceedance(const std::string &scenario, const CcdfTable &ccdf,
                                         double criterion_db = -6.0);

    struct ScenarioResult
    {
        ScenarioConfig config;
        std::vector<double> samples_db; // by snapshot index
        CcdfTable ccdf;
        ExceedanceReport report;
        GeodeticPosition footprint_center;
        BsCounts counts; // all operators
    };

    class Simulation
    {
    public:
        explicit Simulation(ScenarioConfig cfg);

        const ScenarioConfig &config() const { return cfg_; }
        const SatelliteState &satellite() const { return sat_; }
        const BeamPointing &pointing() const { return pointing_; }
        const GeodeticPosition &footprint_center() const { return zones_.center; }
        const ZonePlan &zones() const { return zones_; }
        const BsCounts &counts() const { return counts_; }
        const LinkModel &link() const { return link_; }

        SnapshotResult run_snapshot(std::uint64_t index, bool keep_entries = false) const;
        // Snapshots [first, first + count), stored by offset.
        std::vector<double> run_range(std::uint64_t first, std::uint64_t count, unsigned threads = 0,
                                      const std::function<void(std::uint64_t)> &progress = {}) const;

    private:
        ScenarioConfig cfg_;
        SatelliteState sat_;
        BeamPointing pointing_;
        SarAntennaFrame frame_;
        ZonePlan zones_;
        BsCounts counts_;
        LinkModel link_;
    };

    SnapshotResult run_snapshot(const ScenarioConfig &cfg, std::uint64_t snapshot_index);

    ScenarioResult run_scenario(const ScenarioConfig &cfg,
                                const std::function<void(std::uint64_t)> &progress = {});

    // Summary over an already-computed sample vector (e.g. a sub-range of a run).
    ScenarioResult summarize(const ScenarioConfig &cfg, std::vector<double> samples_db);

    std::vector<ScenarioResult> run_case_suite(const ScenarioConfig &base = {},
                                               const std::function<void(const std::string &)> &log = {});
}

#endif
