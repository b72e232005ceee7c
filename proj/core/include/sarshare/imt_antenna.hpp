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

#ifndef SARSHARE_IMT_ANTENNA_HPP
#define SARSHARE_IMT_ANTENNA_HPP

#include "sarshare/geometry.hpp"

#include <complex>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace sarshare
{
    /*!MD
    # IMT base-station active antenna

    Element and composite beamforming gain of a uniform planar array following the
    Rec. ITU-R M.2101 Annex 1 model:

    - element: `A_E = G_max - min(-(A_EH + A_EV), A_m)` with
      `A_EH = -min(12 (phi/phi_3dB)^2, A_m)` and `A_EV = -min(12 ((theta-90)/theta_3dB)^2, SLA_v)`
    - composite: `A_A = A_E + 10 log10 |sum_nm I_nm v_nm w_nm|^2 / N`

    With uniform weights this is the stock M.2101 pattern. With tapered weights the pattern can
    be normalized so that its spherical integral is 0 dB for every steering pair; the normalized
    gain is the raw gain divided by the raw pattern's total integrated gain (TIG).
    MD!*/

    struct ElementPattern
    {
        double gain_max_dbi = 5.5;
        double hbw_deg = 90.0;
        double vbw_deg = 90.0;
        double front_to_back_db = 30.0; // A_m
        double sla_v_db = 30.0;

        double gain_dbi(const LocalDirection &dir) const;
    };

    struct ArrayConfig
    {
        int n_h = 8;
        int n_v = 8;
        double spacing_h = 0.5; // wavelengths
        double spacing_v = 0.5;
        int polarizations = 2;
        double ohmic_loss_db = 2.0; // informational, already inside the element gain
        double conducted_power_per_element_dbm = 16.0;
        double extra_power_db = 2.0;
        ElementPattern element;

        int element_count() const { return n_h * n_v; }
        void validate() const;
    };

    // theta_etilt is the electrical downtilt in the panel frame (positive below the panel
    // boresight plane), phi_scan the electrical azimuth scan.
    struct SteeringAngles
    {
        double theta_etilt_deg = 0.0;
        double phi_scan_deg = 0.0;
    };

    // Real, strictly positive excitation amplitudes; rows index the vertical elements.
    class WeightMatrix
    {
    public:
        static WeightMatrix uniform(int n_v, int n_h);
        static WeightMatrix separable(std::vector<double> vertical, std::vector<double> horizontal);
        static WeightMatrix from_rows(const std::vector<std::vector<double>> &rows);
        static WeightMatrix read_csv(std::istream &in);
        static WeightMatrix load_csv(const std::string &path);

        int rows() const { return n_v_; }
        int cols() const { return n_h_; }
        double operator()(int n, int m) const { return coeff_[static_cast<std::size_t>(n * n_h_ + m)]; }
        double max_coefficient() const;
        double power_sum() const;

        bool is_separable() const { return !vertical_.empty(); }
        std::span<const double> vertical_factor() const { return vertical_; }
        std::span<const double> horizontal_factor() const { return horizontal_; }

        void write_csv(std::ostream &out) const;

    private:
        WeightMatrix() = default;
        void check() const;

        int n_v_ = 0, n_h_ = 0;
        std::vector<double> coeff_;
        std::vector<double> vertical_, horizontal_;
    };

    // Discrete-array Taylor n-bar line taper (zeros of the Dolph-Chebyshev pattern dilated
    // onto the uniform-array zeros beyond n-bar), normalized to a unit maximum.
    std::vector<double> taylor_taper(int n, double sll_db, int n_bar);
    WeightMatrix taylor_weights(int n, double sll_db, int n_bar);
    WeightMatrix taylor_weights(int n_v, int n_h, double sll_db, int n_bar);

    // Normalized power pattern of a line array with the given taper, in dB relative to its
    // maximum, at u = d/lambda * sin(angle) offsets from the steered direction.
    double line_array_pattern_db(std::span<const double> taper, double spacing_wl, double u);

    double element_gain(const LocalDirection &dir, const ElementPattern &element = {});

    // Un-normalized composite gain (stock M.2101 when the weights are uniform).
    double composite_gain_raw(const LocalDirection &dir, const SteeringAngles &steer, const WeightMatrix &w,
                              const ArrayConfig &cfg);

    struct QuadratureSpec
    {
        double step_deg = 0.5;
    };

    // 10 log10( 1/(4 pi) * integral of the raw composite gain over the sphere ), evaluated on a
    // midpoint grid in (theta, phi).
    double total_integrated_gain(const SteeringAngles &steer, const WeightMatrix &w, const ArrayConfig &cfg,
                                 QuadratureSpec quad = {});

    struct SteeringGrid
    {
        double tilt_min_deg = -10.0;
        double tilt_max_deg = 20.0;
        double scan_min_deg = -60.0;
        double scan_max_deg = 60.0;
        double step_deg = 1.0;
    };

    // Precomputed TIG of the raw pattern on a quantized steering grid. Lookups use the nearest
    // grid pair; there is no interpolation. Immutable after construction.
    class DirectivityNormalizer
    {
    public:
        DirectivityNormalizer(const WeightMatrix &w, const ArrayConfig &cfg, SteeringGrid grid = {},
                              QuadratureSpec quad = {});

        double tig_db(const SteeringAngles &steer) const; // throws std::out_of_range off-grid
        const SteeringGrid &grid() const { return grid_; }
        std::size_t size() const { return tig_db_.size(); }

    private:
        SteeringGrid grid_;
        int n_tilt_ = 0, n_scan_ = 0;
        std::vector<double> tig_db_;
    };

    // Composite gain; with a normalizer the raw pattern is divided by its TIG for the steering
    // pair (normalized directivity).
    double composite_gain(const LocalDirection &dir, const SteeringAngles &steer, const WeightMatrix &w,
                          const ArrayConfig &cfg, const DirectivityNormalizer *normalizer = nullptr);

    // Bundles configuration, weights and the optional normalization table.
    class CompositeAntenna
    {
    public:
        CompositeAntenna(ArrayConfig cfg, WeightMatrix w, bool normalize, SteeringGrid grid = {});

        double gain_dbi(const LocalDirection &dir, const SteeringAngles &steer) const;
        const ArrayConfig &config() const { return cfg_; }
        const WeightMatrix &weights() const { return w_; }
        const DirectivityNormalizer *normalizer() const { return normalizer_.get(); }

    private:
        ArrayConfig cfg_;
        WeightMatrix w_;
        std::shared_ptr<const DirectivityNormalizer> normalizer_;
    };

    // Power spectral density of the whole array in dB(W/MHz).
    double tx_power_spectral_density(const ArrayConfig &cfg, double bandwidth_mhz);

    struct EirpReport
    {
        double peak_eirp_dbm = 0.0;
        double per_user_eirp_dbm = 0.0;
        double trp_dual_dbm = 0.0;
        double trp_single_dbm = 0.0;
        double peak_eirp_dbw_per_channel = 0.0;
        double cap_dbw_per_100mhz = 32.0;
        bool within_cap = false;
    };

    // statistical_peak_gain_dbi is the maximum of the steered-gain distribution; the conducted
    // power is shared between `users` terminals for the per-user figure.
    EirpReport eirp_report(const ArrayConfig &cfg, double statistical_peak_gain_dbi = 22.65, int users = 3,
                           double channel_bandwidth_mhz = 100.0, double cap_dbw_per_100mhz = 32.0);
}

#endif
