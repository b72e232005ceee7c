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

#include "sarshare/imt_antenna.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sarshare
{
    namespace
    {
        using cplx = std::complex<double>;
        using constants::kPi;

        constexpr double kPowerFloor = 1e-30;
        // Highest sidelobe a taper may ask for: that of a uniform continuous aperture.
        constexpr double kUniformSidelobeDb = -13.26;

        // Per-theta kernels of the spherical integral:
        //   K_q(theta_i) = sum_j E(theta_i, phi_j) exp(i q kh sin(theta_i) sin(phi_j)),  q = 0..n_h-1
        // Together with the 2-D autocorrelation of the weights this yields the integral of
        // E |AF|^2 for any steering pair in O(n_theta * (2 n_v - 1)(2 n_h - 1)).
        class SphereKernel
        {
        public:
            SphereKernel(const ArrayConfig &cfg, QuadratureSpec quad)
                : cfg_(cfg)
            {
                const double step = quad.step_deg;
                if (!(step > 0.0) || std::fmod(180.0, step) > 1e-9)
                    throw std::invalid_argument("quadrature step must divide 180 degrees");
                n_theta_ = static_cast<int>(std::lround(180.0 / step));
                const int n_phi = 2 * n_theta_;
                const double kh = 2.0 * kPi * cfg.spacing_h;
                const double dA = deg_to_rad(step) * deg_to_rad(step);
                theta_.resize(static_cast<std::size_t>(n_theta_));
                weight_.resize(theta_.size());
                kernel_.assign(theta_.size() * static_cast<std::size_t>(cfg.n_h), cplx{});
                std::vector<double> sin_phi(static_cast<std::size_t>(n_phi)), phi(sin_phi.size());
                for (int j = 0; j < n_phi; ++j)
                {
                    phi[j] = -180.0 + (j + 0.5) * step;
                    sin_phi[j] = std::sin(deg_to_rad(phi[j]));
                }
                for (int i = 0; i < n_theta_; ++i)
                {
                    const double th = (i + 0.5) * step;
                    theta_[i] = th;
                    const double st = std::sin(deg_to_rad(th));
                    weight_[i] = st * dA;
                    cplx *k = &kernel_[static_cast<std::size_t>(i * cfg.n_h)];
                    for (int j = 0; j < n_phi; ++j)
                    {
                        const double e = db_to_linear(cfg.element.gain_dbi({th, phi[j]}));
                        const cplx z = std::polar(1.0, kh * st * sin_phi[j]);
                        cplx zq{1.0, 0.0};
                        for (int q = 0; q < cfg.n_h; ++q)
                        {
                            k[q] += e * zq;
                            zq *= z;
                        }
                    }
                }
            }

            // (1/4pi) * integral of E |AF|^2 / N over the sphere.
            double tig_linear(const SteeringAngles &steer, const std::vector<double> &autocorr) const
            {
                const int nv = cfg_.n_v, nh = cfg_.n_h;
                const int pw = 2 * nv - 1, qw = 2 * nh - 1;
                const double kv = 2.0 * kPi * cfg_.spacing_v, kh = 2.0 * kPi * cfg_.spacing_h;
                const double tilt = deg_to_rad(steer.theta_etilt_deg), scan = deg_to_rad(steer.phi_scan_deg);
                const double c = std::cos(tilt) * std::sin(scan);

                // e^{-i q kh c} K_q for negative q uses conj(K_|q|).
                std::vector<cplx> ph(static_cast<std::size_t>(qw));
                for (int q = -(nh - 1); q <= nh - 1; ++q)
                    ph[q + nh - 1] = std::polar(1.0, -q * kh * c);

                std::vector<cplx> zp(static_cast<std::size_t>(pw));
                double total = 0.0;
                for (int i = 0; i < n_theta_; ++i)
                {
                    const double psi = kv * (std::cos(deg_to_rad(theta_[i])) + std::sin(tilt));
                    for (int p = -(nv - 1); p <= nv - 1; ++p)
                        zp[p + nv - 1] = std::polar(1.0, p * psi);
                    const cplx *k = &kernel_[static_cast<std::size_t>(i * nh)];
                    cplx acc{};
                    for (int q = -(nh - 1); q <= nh - 1; ++q)
                    {
                        cplx a{};
                        for (int p = 0; p < pw; ++p)
                            a += autocorr[static_cast<std::size_t>(p * qw + q + nh - 1)] * zp[p];
                        const cplx kq = q >= 0 ? k[q] : std::conj(k[-q]);
                        acc += a * ph[q + nh - 1] * kq;
                    }
                    total += acc.real() * weight_[i];
                }
                return total / (4.0 * kPi * cfg_.element_count());
            }

        private:
            ArrayConfig cfg_;
            int n_theta_ = 0;
            std::vector<double> theta_, weight_;
            std::vector<cplx> kernel_;
        };

        // R_pq = sum_nm I(n,m) I(n-p, m-q), row-major over p in [-(nv-1), nv-1].
        std::vector<double> autocorrelation(const WeightMatrix &w)
        {
            const int nv = w.rows(), nh = w.cols();
            const int pw = 2 * nv - 1, qw = 2 * nh - 1;
            std::vector<double> r(static_cast<std::size_t>(pw * qw), 0.0);
            for (int p = -(nv - 1); p <= nv - 1; ++p)
                for (int q = -(nh - 1); q <= nh - 1; ++q)
                {
                    double s = 0.0;
                    for (int n = std::max(0, p); n < std::min(nv, nv + p); ++n)
                        for (int m = std::max(0, q); m < std::min(nh, nh + q); ++m)
                            s += w(n, m) * w(n - p, m - q);
                    r[static_cast<std::size_t>((p + nv - 1) * qw + q + nh - 1)] = s;
                }
            return r;
        }

        void check_shape(const WeightMatrix &w, const ArrayConfig &cfg)
        {
            if (w.rows() != cfg.n_v || w.cols() != cfg.n_h)
                throw std::invalid_argument("weight matrix shape does not match the array configuration");
        }

        std::vector<double> parse_csv_row(const std::string &line, int line_no)
        {
            std::vector<double> row;
            std::size_t pos = 0;
            while (pos <= line.size())
            {
                std::size_t end = line.find(',', pos);
                if (end == std::string::npos)
                    end = line.size();
                std::string_view field(line.data() + pos, end - pos);
                while (!field.empty() && (field.front() == ' ' || field.front() == '\t'))
                    field.remove_prefix(1);
                while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r'))
                    field.remove_suffix(1);
                double v = 0.0;
                const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
                if (res.ec != std::errc() || res.ptr != field.data() + field.size())
                    throw std::invalid_argument("weight CSV line " + std::to_string(line_no) + ": bad number '" +
                                                std::string(field) + "'");
                row.push_back(v);
                pos = end + 1;
            }
            return row;
        }
    }

    double ElementPattern::gain_dbi(const LocalDirection &dir) const
    {
        const double phi = wrap_deg_180(dir.phi_deg);
        const double a_h = -std::min(12.0 * std::pow(phi / hbw_deg, 2), front_to_back_db);
        const double a_v = -std::min(12.0 * std::pow((dir.theta_deg - 90.0) / vbw_deg, 2), sla_v_db);
        return gain_max_dbi - std::min(-(a_h + a_v), front_to_back_db);
    }

    double element_gain(const LocalDirection &dir, const ElementPattern &element) { return element.gain_dbi(dir); }

    void ArrayConfig::validate() const
    {
        if (n_h < 1 || n_v < 1)
            throw std::invalid_argument("array needs at least one element per axis");
        if (!(spacing_h > 0.0) || !(spacing_v > 0.0))
            throw std::invalid_argument("element spacing must be positive");
        if (polarizations < 1)
            throw std::invalid_argument("polarizations must be >= 1");
    }

    // ---------------------------------------------------------------------------------------
    // WeightMatrix

    WeightMatrix WeightMatrix::uniform(int n_v, int n_h)
    {
        return separable(std::vector<double>(static_cast<std::size_t>(std::max(n_v, 0)), 1.0),
                         std::vector<double>(static_cast<std::size_t>(std::max(n_h, 0)), 1.0));
    }

    WeightMatrix WeightMatrix::separable(std::vector<double> vertical, std::vector<double> horizontal)
    {
        WeightMatrix w;
        w.n_v_ = static_cast<int>(vertical.size());
        w.n_h_ = static_cast<int>(horizontal.size());
        w.coeff_.resize(vertical.size() * horizontal.size());
        for (std::size_t n = 0; n < vertical.size(); ++n)
            for (std::size_t m = 0; m < horizontal.size(); ++m)
                w.coeff_[n * horizontal.size() + m] = vertical[n] * horizontal[m];
        w.vertical_ = std::move(vertical);
        w.horizontal_ = std::move(horizontal);
        w.check();
        return w;
    }

    WeightMatrix WeightMatrix::from_rows(const std::vector<std::vector<double>> &rows)
    {
        WeightMatrix w;
        w.n_v_ = static_cast<int>(rows.size());
        w.n_h_ = rows.empty() ? 0 : static_cast<int>(rows.front().size());
        for (const auto &r : rows)
        {
            if (static_cast<int>(r.size()) != w.n_h_)
                throw std::invalid_argument("weight matrix rows differ in length");
            w.coeff_.insert(w.coeff_.end(), r.begin(), r.end());
        }
        w.check();
        return w;
    }

    WeightMatrix WeightMatrix::read_csv(std::istream &in)
    {
        std::vector<std::vector<double>> rows;
        std::string line;
        int line_no = 0;
        while (std::getline(in, line))
        {
            ++line_no;
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            rows.push_back(parse_csv_row(line, line_no));
        }
        return from_rows(rows);
    }

    WeightMatrix WeightMatrix::load_csv(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open weight matrix file '" + path + "'");
        return read_csv(in);
    }

    void WeightMatrix::check() const
    {
        if (n_v_ < 1 || n_h_ < 1)
            throw std::invalid_argument("weight matrix is empty");
        for (double c : coeff_)
            if (!(c > 0.0) || !std::isfinite(c))
                throw std::invalid_argument("weight coefficients must be finite and strictly positive");
    }

    double WeightMatrix::max_coefficient() const { return *std::max_element(coeff_.begin(), coeff_.end()); }

    double WeightMatrix::power_sum() const
    {
        return std::inner_product(coeff_.begin(), coeff_.end(), coeff_.begin(), 0.0);
    }

    void WeightMatrix::write_csv(std::ostream &out) const
    {
        for (int n = 0; n < n_v_; ++n)
        {
            for (int m = 0; m < n_h_; ++m)
            {
                char buf[32];
                const auto res = std::to_chars(buf, buf + sizeof buf, (*this)(n, m));
                out.write(buf, res.ptr - buf);
                out << (m + 1 < n_h_ ? ',' : '\n');
            }
        }
    }

    // ---------------------------------------------------------------------------------------
    // Taylor taper

    std::vector<double> taylor_taper(int n, double sll_db, int n_bar)
    {
        if (n < 1)
            throw std::invalid_argument("taper length must be >= 1");
        if (!(sll_db <= kUniformSidelobeDb + 1e-9))
            throw std::invalid_argument("Taylor sidelobe level must be <= -13.26 dB");
        if (n_bar < 1)
            throw std::invalid_argument("n_bar must be >= 1");
        if (n == 1)
            return {1.0};
        if (n_bar > n / 2)
            throw std::invalid_argument("n_bar must not exceed half the number of elements");

        const double R = std::pow(10.0, -sll_db / 20.0);
        const double A = std::acosh(R) / kPi;
        if (n_bar > 1 && n_bar < 2.0 * A * A + 0.5)
            throw std::invalid_argument("n_bar too small for the requested sidelobe level (taper would not be monotone)");

        // Dolph-Chebyshev zeros in psi = kd sin(theta) for an n-element array.
        const double x0 = std::cosh(std::acosh(R) / (n - 1));
        auto cheb_zero = [&](int k) { return 2.0 * std::acos(std::cos((k - 0.5) * kPi / (n - 1)) / x0); };
        const double sigma = (2.0 * kPi * n_bar / n) / cheb_zero(n_bar);

        std::vector<cplx> roots;
        for (int k = 1; k <= n / 2; ++k)
        {
            const double z = k < n_bar ? sigma * cheb_zero(k) : 2.0 * kPi * k / n;
            if (2 * k == n)
                roots.emplace_back(-1.0, 0.0);
            else
            {
                roots.push_back(std::polar(1.0, z));
                roots.push_back(std::polar(1.0, -z));
            }
        }
        // Expand prod (x - r_k); the coefficients are the element excitations.
        std::vector<cplx> poly{1.0};
        for (const cplx &r : roots)
        {
            std::vector<cplx> next(poly.size() + 1, cplx{});
            for (std::size_t i = 0; i < poly.size(); ++i)
            {
                next[i] += poly[i];
                next[i + 1] -= poly[i] * r;
            }
            poly = std::move(next);
        }
        std::vector<double> taper(poly.size());
        std::transform(poly.begin(), poly.end(), taper.begin(), [](const cplx &c) { return c.real(); });
        const double peak = *std::max_element(taper.begin(), taper.end());
        for (double &t : taper)
            t /= peak;
        return taper;
    }

    WeightMatrix taylor_weights(int n, double sll_db, int n_bar) { return taylor_weights(n, n, sll_db, n_bar); }

    WeightMatrix taylor_weights(int n_v, int n_h, double sll_db, int n_bar)
    {
        return WeightMatrix::separable(taylor_taper(n_v, sll_db, n_bar), taylor_taper(n_h, sll_db, n_bar));
    }

    double line_array_pattern_db(std::span<const double> taper, double spacing_wl, double u)
    {
        const double psi = 2.0 * kPi * spacing_wl * u;
        cplx af{};
        const cplx z = std::polar(1.0, psi);
        cplx zk{1.0, 0.0};
        for (double a : taper)
        {
            af += a * zk;
            zk *= z;
        }
        const double peak = std::accumulate(taper.begin(), taper.end(), 0.0);
        return linear_to_db(std::max(std::norm(af) / (peak * peak), kPowerFloor));
    }

    // ---------------------------------------------------------------------------------------
    // Composite pattern

    double composite_gain_raw(const LocalDirection &dir, const SteeringAngles &steer, const WeightMatrix &w,
                              const ArrayConfig &cfg)
    {
        check_shape(w, cfg);
        const double th = deg_to_rad(dir.theta_deg), ph = deg_to_rad(dir.phi_deg);
        const double tilt = deg_to_rad(steer.theta_etilt_deg), scan = deg_to_rad(steer.phi_scan_deg);
        const double psi_v = 2.0 * kPi * cfg.spacing_v * (std::cos(th) + std::sin(tilt));
        const double psi_h = 2.0 * kPi * cfg.spacing_h * (std::sin(th) * std::sin(ph) - std::cos(tilt) * std::sin(scan));
        const cplx zv = std::polar(1.0, psi_v), zh = std::polar(1.0, psi_h);

        double af2 = 0.0;
        if (w.is_separable())
        {
            cplx v{}, h{}, z{1.0, 0.0};
            for (double b : w.vertical_factor())
            {
                v += b * z;
                z *= zv;
            }
            z = {1.0, 0.0};
            for (double a : w.horizontal_factor())
            {
                h += a * z;
                z *= zh;
            }
            af2 = std::norm(v) * std::norm(h);
        }
        else
        {
            cplx af{}, rz{1.0, 0.0};
            for (int n = 0; n < w.rows(); ++n)
            {
                cplx row{}, cz{1.0, 0.0};
                for (int m = 0; m < w.cols(); ++m)
                {
                    row += w(n, m) * cz;
                    cz *= zh;
                }
                af += row * rz;
                rz *= zv;
            }
            af2 = std::norm(af);
        }
        return cfg.element.gain_dbi(dir) + linear_to_db(std::max(af2 / cfg.element_count(), kPowerFloor));
    }

    double total_integrated_gain(const SteeringAngles &steer, const WeightMatrix &w, const ArrayConfig &cfg,
                                 QuadratureSpec quad)
    {
        cfg.validate();
        check_shape(w, cfg);
        const SphereKernel kernel(cfg, quad);
        return linear_to_db(kernel.tig_linear(steer, autocorrelation(w)));
    }

    DirectivityNormalizer::DirectivityNormalizer(const WeightMatrix &w, const ArrayConfig &cfg, SteeringGrid grid,
                                                 QuadratureSpec quad)
        : grid_(grid)
    {
        cfg.validate();
        check_shape(w, cfg);
        if (!(grid.step_deg > 0.0) || grid.tilt_max_deg < grid.tilt_min_deg || grid.scan_max_deg < grid.scan_min_deg)
            throw std::invalid_argument("invalid steering grid");
        n_tilt_ = static_cast<int>(std::lround((grid.tilt_max_deg - grid.tilt_min_deg) / grid.step_deg)) + 1;
        n_scan_ = static_cast<int>(std::lround((grid.scan_max_deg - grid.scan_min_deg) / grid.step_deg)) + 1;

        const SphereKernel kernel(cfg, quad);
        const auto r = autocorrelation(w);
        tig_db_.resize(static_cast<std::size_t>(n_tilt_ * n_scan_));
        for (int i = 0; i < n_tilt_; ++i)
            for (int j = 0; j < n_scan_; ++j)
            {
                const SteeringAngles s{grid.tilt_min_deg + i * grid.step_deg, grid.scan_min_deg + j * grid.step_deg};
                tig_db_[static_cast<std::size_t>(i * n_scan_ + j)] = linear_to_db(kernel.tig_linear(s, r));
            }
    }

    double DirectivityNormalizer::tig_db(const SteeringAngles &steer) const
    {
        const long i = std::lround((steer.theta_etilt_deg - grid_.tilt_min_deg) / grid_.step_deg);
        const long j = std::lround((steer.phi_scan_deg - grid_.scan_min_deg) / grid_.step_deg);
        if (i < 0 || i >= n_tilt_ || j < 0 || j >= n_scan_)
            throw std::out_of_range("steering pair outside the normalization grid");
        return tig_db_[static_cast<std::size_t>(i * n_scan_ + j)];
    }

    double composite_gain(const LocalDirection &dir, const SteeringAngles &steer, const WeightMatrix &w,
                          const ArrayConfig &cfg, const DirectivityNormalizer *normalizer)
    {
        const double raw = composite_gain_raw(dir, steer, w, cfg);
        return normalizer ? raw - normalizer->tig_db(steer) : raw;
    }

    CompositeAntenna::CompositeAntenna(ArrayConfig cfg, WeightMatrix w, bool normalize, SteeringGrid grid)
        : cfg_(std::move(cfg)), w_(std::move(w))
    {
        cfg_.validate();
        check_shape(w_, cfg_);
        if (normalize)
            normalizer_ = std::make_shared<const DirectivityNormalizer>(w_, cfg_, grid);
    }

    double CompositeAntenna::gain_dbi(const LocalDirection &dir, const SteeringAngles &steer) const
    {
        return composite_gain(dir, steer, w_, cfg_, normalizer_.get());
    }

    // ---------------------------------------------------------------------------------------
    // Power bookkeeping

    double tx_power_spectral_density(const ArrayConfig &cfg, double bandwidth_mhz)
    {
        if (!(bandwidth_mhz > 0.0))
            throw std::invalid_argument("bandwidth must be positive");
        const double n = static_cast<double>(cfg.element_count()) * cfg.polarizations;
        return cfg.conducted_power_per_element_dbm + cfg.extra_power_db + linear_to_db(n) - linear_to_db(bandwidth_mhz) - 30.0;
    }

    EirpReport eirp_report(const ArrayConfig &cfg, double statistical_peak_gain_dbi, int users,
                           double channel_bandwidth_mhz, double cap_dbw_per_100mhz)
    {
        if (users < 1)
            throw std::invalid_argument("users must be >= 1");
        const double p = cfg.conducted_power_per_element_dbm + cfg.extra_power_db;
        const double n = cfg.element_count();
        EirpReport r;
        r.trp_dual_dbm = p + linear_to_db(n * cfg.polarizations);
        r.trp_single_dbm = p + linear_to_db(n);
        r.peak_eirp_dbm = r.trp_dual_dbm + cfg.element.gain_max_dbi + linear_to_db(n);
        r.per_user_eirp_dbm = p + linear_to_db(n * cfg.polarizations / users) + statistical_peak_gain_dbi;
        r.cap_dbw_per_100mhz = cap_dbw_per_100mhz;
        r.peak_eirp_dbw_per_channel = r.peak_eirp_dbm - 30.0;
        const double eirp_dbw_per_100mhz = r.peak_eirp_dbw_per_channel - linear_to_db(channel_bandwidth_mhz / 100.0);
        r.within_cap = eirp_dbw_per_100mhz <= cap_dbw_per_100mhz;
        return r;
    }
}
