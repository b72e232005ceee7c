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
#include "sarshare/engine.hpp"
#include "sarshare/imt_antenna.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace sarshare;
using doctest::Approx;

namespace
{
    std::vector<double> flat(const WeightMatrix &w)
    {
        std::vector<double> v;
        for (int n = 0; n < w.rows(); ++n)
            for (int m = 0; m < w.cols(); ++m)
                v.push_back(w(n, m));
        return v;
    }

    const std::vector<double> kTaylor8 = {0.26217, 0.51866, 0.81204, 1.0, 1.0, 0.81204, 0.51866, 0.26217};
}

TEST_SUITE("imt_antenna")
{
    TEST_CASE("element pattern examples")
    {
        CHECK(element_gain({90.0, 0.0}) == Approx(5.5));
        CHECK(element_gain({90.0, 180.0}) == Approx(-24.5));
        // 12 (90/90)^2 = 12 dB below the peak, well inside the 30 dB clamp.
        CHECK(element_gain({90.0, 90.0}) == Approx(oracle::element_db(90.0, 90.0)));
        CHECK(element_gain({90.0, 90.0}) == Approx(-6.5));
    }

    TEST_CASE("element pattern matches the oracle and respects the floor")
    {
        for (double th = 0.0; th <= 180.0; th += 2.5)
            for (double ph = -180.0; ph <= 180.0; ph += 2.5)
            {
                const double g = element_gain({th, ph});
                REQUIRE(g == Approx(oracle::element_db(th, ph)).epsilon(1e-12));
                REQUIRE(g >= 5.5 - 30.0 - 1e-12);
                REQUIRE(g <= 5.5 + 1e-12);
            }
    }

    TEST_CASE("boresight composite gain with uniform weights")
    {
        const double g = composite_gain_raw({90.0, 0.0}, {0.0, 0.0}, WeightMatrix::uniform(8, 8), ArrayConfig{});
        CHECK(g == Approx(5.5 + 10.0 * std::log10(64.0)).epsilon(1e-12));
        CHECK(g == Approx(23.5618).epsilon(1e-5));
    }

    TEST_CASE("composite gain agrees with direct element summation")
    {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> th(0.5, 179.5), ph(-179.5, 179.5), tilt(-10, 20), scan(-60, 60);
        const WeightMatrix u = WeightMatrix::uniform(8, 8), t = taylor_weights(8, -30.0, 4);
        const std::vector<double> fu = flat(u), ft = flat(t);
        const WeightMatrix general = WeightMatrix::from_rows([&] {
            std::vector<std::vector<double>> r(8, std::vector<double>(8));
            std::uniform_real_distribution<double> c(0.2, 1.0);
            for (auto &row : r)
                for (double &x : row)
                    x = c(rng);
            return r;
        }());
        const std::vector<double> fg = flat(general);
        for (int k = 0; k < 3000; ++k)
        {
            const LocalDirection d{th(rng), ph(rng)};
            const SteeringAngles s{tilt(rng), scan(rng)};
            const double ref_u = oracle::composite_db(d.theta_deg, d.phi_deg, s.theta_etilt_deg, s.phi_scan_deg, fu);
            const double ref_t = oracle::composite_db(d.theta_deg, d.phi_deg, s.theta_etilt_deg, s.phi_scan_deg, ft);
            const double ref_g = oracle::composite_db(d.theta_deg, d.phi_deg, s.theta_etilt_deg, s.phi_scan_deg, fg);
            if (ref_u > -150.0)
                REQUIRE(composite_gain_raw(d, s, u, ArrayConfig{}) == Approx(ref_u).epsilon(1e-9).scale(1.0));
            if (ref_t > -150.0)
                REQUIRE(composite_gain_raw(d, s, t, ArrayConfig{}) == Approx(ref_t).epsilon(1e-9).scale(1.0));
            if (ref_g > -150.0)
                REQUIRE(composite_gain_raw(d, s, general, ArrayConfig{}) == Approx(ref_g).epsilon(1e-9).scale(1.0));
        }
    }

    TEST_CASE("reciprocal symmetry in azimuth")
    {
        const WeightMatrix u = WeightMatrix::uniform(8, 8);
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> th(1, 179), ph(-179, 179), tilt(-10, 20), scan(-60, 60);
        for (int k = 0; k < 2000; ++k)
        {
            const double t = th(rng), p = ph(rng), a = tilt(rng), b = scan(rng);
            REQUIRE(composite_gain_raw({t, p}, {a, b}, u, ArrayConfig{}) ==
                    Approx(composite_gain_raw({t, -p}, {a, -b}, u, ArrayConfig{})).epsilon(1e-9).scale(1.0));
        }
    }

    TEST_CASE("invalid weight matrices are rejected")
    {
        CHECK_THROWS_AS(WeightMatrix::from_rows({{0.0, 0.0}, {0.0, 0.0}}), std::invalid_argument);
        CHECK_THROWS_AS(WeightMatrix::from_rows({{1.0, -1.0}}), std::invalid_argument);
        CHECK_THROWS_AS(WeightMatrix::from_rows({}), std::invalid_argument);
        CHECK_THROWS_AS(composite_gain_raw({90, 0}, {}, WeightMatrix::uniform(4, 4), ArrayConfig{}), std::invalid_argument);
    }

    TEST_CASE("weight CSV round trip")
    {
        const WeightMatrix t = taylor_weights(8, -30.0, 4);
        std::stringstream ss;
        t.write_csv(ss);
        const WeightMatrix back = WeightMatrix::read_csv(ss);
        REQUIRE(back.rows() == 8);
        REQUIRE(back.cols() == 8);
        for (int n = 0; n < 8; ++n)
            for (int m = 0; m < 8; ++m)
                REQUIRE(back(n, m) == t(n, m));
        std::stringstream bad("1,2\n3\n");
        CHECK_THROWS_AS(WeightMatrix::read_csv(bad), std::invalid_argument);
    }

    TEST_CASE("Taylor taper coefficients")
    {
        const std::vector<double> a = taylor_taper(8, -30.0, 4);
        REQUIRE(a.size() == 8);
        for (std::size_t k = 0; k < a.size(); ++k)
        {
            CHECK(a[k] == Approx(kTaylor8[k]).epsilon(1e-4));
            CHECK(a[k] == Approx(a[a.size() - 1 - k]).epsilon(1e-12));
            CHECK(a[k] > 0.0);
        }
        CHECK(*std::max_element(a.begin(), a.end()) == Approx(1.0));
        const WeightMatrix w = taylor_weights(8, -30.0, 4);
        CHECK(w.is_separable());
        CHECK(w(2, 5) == Approx(a[2] * a[5]));
    }

    TEST_CASE("Taylor first sidelobe reaches the design level")
    {
        const std::vector<double> a = taylor_taper(8, -30.0, 4);
        const double sll = oracle::first_sidelobe_db(a, 0.5);
        CHECK(sll <= -29.5);
        CHECK(sll == Approx(-30.0).epsilon(0.01));
        double peak = -1e9;
        for (double u = 0.0; u <= 1.0; u += 1e-3)
            peak = std::max(peak, line_array_pattern_db(a, 0.5, u));
        CHECK(peak == Approx(0.0).scale(1.0));
        for (double u = 0.0; u <= 1.0; u += 0.0137)
            REQUIRE(line_array_pattern_db(a, 0.5, u) == Approx(oracle::line_pattern_db(a, 0.5, u)).epsilon(1e-9).scale(1.0));
    }

    TEST_CASE("Taylor broadside directivity loss")
    {
        const std::vector<double> a = taylor_taper(8, -30.0, 4);
        double s = 0.0, s2 = 0.0;
        for (double x : a)
        {
            s += x;
            s2 += x * x;
        }
        const double loss_1d = -10.0 * std::log10(s * s / (8.0 * s2));
        CHECK(loss_1d == Approx(0.749).epsilon(0.002));
        CHECK(loss_1d >= 0.5);
        CHECK(loss_1d <= 1.5);
    }

    TEST_CASE("Taylor at the uniform sidelobe level degenerates to uniform")
    {
        const WeightMatrix u = WeightMatrix::uniform(8, 8);
        const WeightMatrix t = taylor_weights(8, -13.26, 1);
        std::mt19937_64 rng(9);
        std::uniform_real_distribution<double> th(1, 179), ph(-179, 179), tilt(-10, 20), scan(-60, 60);
        for (int k = 0; k < 500; ++k)
        {
            const LocalDirection d{th(rng), ph(rng)};
            const SteeringAngles s{tilt(rng), scan(rng)};
            const double gu = composite_gain_raw(d, s, u, ArrayConfig{});
            if (gu > -60.0)
                REQUIRE(std::abs(composite_gain_raw(d, s, t, ArrayConfig{}) - gu) <= 0.1);
        }
    }

    TEST_CASE("Taylor parameter errors")
    {
        CHECK_THROWS_AS(taylor_taper(8, -10.0, 4), std::invalid_argument);
        CHECK_THROWS_AS(taylor_taper(8, -30.0, 0), std::invalid_argument);
        CHECK_THROWS_AS(taylor_taper(8, -30.0, 5), std::invalid_argument);
        CHECK_THROWS_AS(taylor_taper(8, -30.0, 2), std::invalid_argument);
        CHECK(taylor_taper(1, -30.0, 1) == std::vector<double>{1.0});
    }

    TEST_CASE("single element TIG")
    {
        ArrayConfig one;
        one.n_h = one.n_v = 1;
        const double tig = total_integrated_gain({0.0, 0.0}, WeightMatrix::uniform(1, 1), one);
        CHECK(tig == Approx(oracle::element_tig_db()).epsilon(1e-9));
        CHECK(tig == Approx(-1.955).epsilon(0.001));
        CHECK(std::abs(tig - (-2.0)) <= 0.3);
    }

    TEST_CASE("composite TIG agrees with brute-force quadrature")
    {
        const WeightMatrix u = WeightMatrix::uniform(8, 8);
        // Frozen from an independent numpy quadrature of the same pattern.
        CHECK(total_integrated_gain({0.0, 0.0}, u, ArrayConfig{}) == Approx(0.351706).epsilon(1e-5));
        CHECK(total_integrated_gain({10.0, 30.0}, u, ArrayConfig{}) == Approx(-0.424368).epsilon(1e-5));
        CHECK(total_integrated_gain({-10.0, 60.0}, u, ArrayConfig{}) == Approx(-1.616049).epsilon(1e-5));
        CHECK(total_integrated_gain({20.0, -45.0}, u, ArrayConfig{}) == Approx(-1.413705).epsilon(1e-5));

        const WeightMatrix t = taylor_weights(8, -30.0, 4);
        const double ref = oracle::tig_db(7.0, -23.0, flat(t));
        CHECK(total_integrated_gain({7.0, -23.0}, t, ArrayConfig{}) == Approx(ref).epsilon(1e-9).scale(1.0));
    }

    TEST_CASE("TIG quadrature converges")
    {
        const WeightMatrix t = taylor_weights(8, -30.0, 4);
        for (const SteeringAngles s : {SteeringAngles{0, 0}, SteeringAngles{15, 40}, SteeringAngles{-10, -60}})
        {
            const double coarse = total_integrated_gain(s, t, ArrayConfig{}, {0.5});
            const double fine = total_integrated_gain(s, t, ArrayConfig{}, {0.25});
            CHECK(std::abs(coarse - fine) < 0.05);
        }
    }

    TEST_CASE("normalized Taylor pattern integrates to 0 dB")
    {
        const WeightMatrix t = taylor_weights(8, -30.0, 4);
        const CompositeAntenna ant(ArrayConfig{}, t, true);
        const auto beams = sample_steering(40, DeploymentParams{}, 21);
        const auto tig = tig_samples(t, ArrayConfig{}, beams, ant.normalizer());
        for (double x : tig)
            CHECK(std::abs(x) <= 0.1);
        // On grid points the normalization is exact.
        const SteeringAngles g{5.0, -17.0};
        CHECK(total_integrated_gain(g, t, ArrayConfig{}) - ant.normalizer()->tig_db(g) == Approx(0.0).scale(1.0));
        CHECK(ant.gain_dbi({90.0, 0.0}, g) ==
              Approx(composite_gain_raw({90.0, 0.0}, g, t, ArrayConfig{}) - ant.normalizer()->tig_db(g)));
    }

    TEST_CASE("normalizer rejects steering outside its table")
    {
        const CompositeAntenna ant(ArrayConfig{}, taylor_weights(8, -30.0, 4), true);
        CHECK_THROWS_AS(ant.normalizer()->tig_db({25.0, 0.0}), std::out_of_range);
        CHECK_THROWS_AS(ant.normalizer()->tig_db({0.0, 70.0}), std::out_of_range);
        CHECK(ant.normalizer()->size() == 31u * 121u);
    }

    TEST_CASE("uniform pattern TIG over the coverage cone matches quadrature")
    {
        const auto beams = sample_steering(6, DeploymentParams{}, 4);
        const auto tig = tig_samples(WeightMatrix::uniform(8, 8), ArrayConfig{}, beams);
        const std::vector<double> ones(64, 1.0);
        for (std::size_t k = 0; k < beams.size(); ++k)
            CHECK(tig[k] == Approx(oracle::tig_db(beams[k].theta_etilt_deg, beams[k].phi_scan_deg, ones)).epsilon(1e-9).scale(1.0));
    }

    TEST_CASE("gain toward the horizon peaks near the statistical peak gain")
    {
        const CompositeAntenna ant(ArrayConfig{}, WeightMatrix::uniform(8, 8), false);
        const auto beams = sample_steering(50000, DeploymentParams{}, 1);
        const auto g0 = gain_toward_elevation_samples(ant, beams, 0.0);
        const CcdfTable t0(g0);
        CHECK(std::abs(t0.sorted().back() - 22.65) <= 0.5);
        // The smallest plotted exceedance level is one sample out of 50 000.
        CHECK(t0.rows().back().prob_exceeded == Approx(1.0 / 50000.0));

        double prev = 1e9;
        for (double e = 0.0; e <= 90.0; e += 10.0)
        {
            const CcdfTable t(gain_toward_elevation_samples(ant, beams, e));
            const double q = t.value_at_exceedance(0.01);
            CHECK(q < prev);
            prev = q;
        }
    }

    TEST_CASE("transmit power spectral density")
    {
        CHECK(std::abs(tx_power_spectral_density(ArrayConfig{}, 100.0) - (-10.93)) <= 0.01);
        CHECK(std::abs(tx_power_spectral_density(ArrayConfig{}, 400.0) - (-16.95)) <= 0.01);
        CHECK(tx_power_spectral_density(ArrayConfig{}, 400.0) ==
              Approx(tx_power_spectral_density(ArrayConfig{}, 100.0) - 10.0 * std::log10(4.0)));
        ArrayConfig one;
        one.n_h = one.n_v = 1;
        one.polarizations = 1;
        one.extra_power_db = 0.0;
        one.conducted_power_per_element_dbm = 30.0;
        CHECK(tx_power_spectral_density(one, 1.0) == Approx(0.0).scale(1));
        CHECK_THROWS_AS(tx_power_spectral_density(ArrayConfig{}, 0.0), std::invalid_argument);
    }

    TEST_CASE("EIRP and TRP bookkeeping")
    {
        const EirpReport r = eirp_report(ArrayConfig{});
        CHECK(std::abs(r.peak_eirp_dbm - 62.6) <= 0.1);
        CHECK(std::abs(r.per_user_eirp_dbm - 57.0) <= 0.1);
        CHECK(std::abs(r.trp_dual_dbm - 39.0) <= 0.1);
        CHECK(std::abs(r.trp_single_dbm - 36.0) <= 0.1);
        CHECK(r.peak_eirp_dbm == Approx(16 + 2 + 10 * std::log10(128.0) + 5.5 + 10 * std::log10(64.0)));
        CHECK(r.peak_eirp_dbw_per_channel == Approx(r.peak_eirp_dbm - 30.0));
        CHECK_FALSE(r.within_cap); // 32.6 dBW per 100 MHz
        ArrayConfig low;
        low.extra_power_db = 0.0;
        CHECK(eirp_report(low).within_cap);
    }
}
