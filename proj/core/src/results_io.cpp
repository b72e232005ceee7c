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

#include "sarshare/results_io.hpp"

#include "sarshare/scenario_config.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <cmath>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <stdexcept>

namespace sarshare
{
    const char *version_string() { return SARSHARE_VERSION_STRING; }

    std::string format_significant(double x, int digits)
    {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, digits);
        if (res.ec != std::errc())
            throw std::runtime_error("number formatting failed");
        return std::string(buf, res.ptr);
    }

    std::string sha256_hex_file(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw std::runtime_error("cannot open '" + path + "' for hashing");
        EVP_MD_CTX *ctx = EVP_MD_CTX_new();
        if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1)
        {
            EVP_MD_CTX_free(ctx);
            throw std::runtime_error("SHA-256 unavailable");
        }
        std::array<char, 1 << 16> buf{};
        while (in)
        {
            in.read(buf.data(), buf.size());
            EVP_DigestUpdate(ctx, buf.data(), static_cast<std::size_t>(in.gcount()));
        }
        unsigned char md[EVP_MAX_MD_SIZE];
        unsigned int len = 0;
        EVP_DigestFinal_ex(ctx, md, &len);
        EVP_MD_CTX_free(ctx);
        static const char *hex = "0123456789abcdef";
        std::string out;
        for (unsigned i = 0; i < len; ++i)
        {
            out += hex[md[i] >> 4];
            out += hex[md[i] & 15];
        }
        return out;
    }

    std::string utc_timestamp()
    {
        const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&t, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        return buf;
    }

    RunManifest make_manifest(const ScenarioConfig &cfg, std::string started_utc, std::string finished_utc)
    {
        RunManifest m;
        m.config = cfg;
        m.tool_version = version_string();
        m.started_utc = std::move(started_utc);
        m.finished_utc = std::move(finished_utc);
        if (!cfg.sar_table_path.empty())
            m.input_digests.emplace_back("sar.table_path", sha256_hex_file(cfg.sar_table_path));
        if (!cfg.weights_path.empty())
            m.input_digests.emplace_back("antenna.weights_path", sha256_hex_file(cfg.weights_path));
        return m;
    }

    std::string format_manifest(const RunManifest &m)
    {
        std::string out = "# sarshare run manifest\n";
        out += "# tool_version: " + m.tool_version + "\n";
        out += "# seed: " + std::to_string(m.config.seed) + "\n";
        out += "# started_utc: " + m.started_utc + "\n";
        out += "# finished_utc: " + m.finished_utc + "\n";
        out += std::string("# sar_pattern: ") + (m.config.sar_table_path.empty() ? "parametric fallback" : "table") + "\n";
        for (const auto &[key, digest] : m.input_digests)
            out += "# sha256 " + key + ": " + digest + "\n";
        out += "\n";
        out += format_config(m.config);
        return out;
    }

    std::string ccdf_csv(const CcdfTable &ccdf)
    {
        std::string out = "i_over_n_db,prob_exceeded\n";
        out.reserve(out.size() + ccdf.size() * 24);
        for (const CcdfRow &r : ccdf.rows())
        {
            out += format_significant(r.i_over_n_db);
            out += ',';
            out += format_significant(r.prob_exceeded);
            out += '\n';
        }
        return out;
    }

    std::string summary_csv(std::span<const ExceedanceReport> reports)
    {
        std::string out = "scenario,in_at_1pct_db,margin_db,pass\n";
        for (const ExceedanceReport &r : reports)
            out += r.scenario + ',' + format_significant(r.in_at_1pct_db) + ',' + format_significant(r.margin_db) + ',' +
                   (r.pass ? "true" : "false") + '\n';
        return out;
    }

    std::string ccdf_comparison_csv(std::span<const ScenarioResult> results)
    {
        static constexpr std::array<double, 13> kProbs = {0.5,  0.3,   0.2,   0.1,    0.05,   0.03,  0.02,
                                                          0.01, 0.005, 0.003, 0.002, 0.001, 0.0001};
        std::string out = "prob_exceeded";
        for (const ScenarioResult &r : results)
            out += ',' + r.config.name + "_i_over_n_db";
        out += '\n';
        for (double p : kProbs)
        {
            out += format_significant(p);
            for (const ScenarioResult &r : results)
                out += ',' + format_significant(r.ccdf.value_at_exceedance(p));
            out += '\n';
        }
        return out;
    }

    std::string clutter_cdf_csv(std::span<const ClutterCdfRow> rows)
    {
        std::string out = "location_pct,clutter_loss_db\n";
        for (const ClutterCdfRow &r : rows)
            out += format_significant(r.location_pct) + ',' + format_significant(r.loss_db) + '\n';
        return out;
    }

    std::string steering_hist_csv(const SteeringHistogram &h)
    {
        std::string out = "phi_scan_lo_deg,vertical_gcs_lo_deg,count\n";
        for (int ia = 0; ia < h.n_azimuth; ++ia)
            for (int iv = 0; iv < h.n_vertical; ++iv)
                out += format_significant(h.azimuth_min_deg + ia * h.azimuth_bin_deg) + ',' +
                       format_significant(h.vertical_min_deg + iv * h.vertical_bin_deg) + ',' +
                       std::to_string(h.count(ia, iv)) + '\n';
        return out;
    }

    std::string gain_ccdf_csv(std::span<const GainSampleSet> sets)
    {
        std::string out = "elevation_deg,prob_exceeded,gain_dbi\n";
        for (const GainSampleSet &set : sets)
        {
            const CcdfTable t(set.gains_dbi);
            const double n = static_cast<double>(t.size());
            // 20 points per decade from 1 down to the last sample.
            for (int k = 0;; ++k)
            {
                const double p = std::pow(10.0, -k / 20.0);
                if (p * n < 1.0)
                    break;
                const std::size_t rank = std::min(t.size() - 1, static_cast<std::size_t>(std::round(n * (1.0 - p))));
                out += format_significant(set.elevation_deg) + ',' + format_significant((n - rank) / n) + ',' +
                       format_significant(t.sorted()[rank]) + '\n';
            }
            out += format_significant(set.elevation_deg) + ',' + format_significant(1.0 / n) + ',' +
                   format_significant(t.sorted().back()) + '\n';
        }
        return out;
    }

    std::string histogram_csv(const Histogram &h, const std::string &value_column)
    {
        std::string out = value_column + "_lo," + value_column + "_hi,count\n";
        for (std::size_t i = 0; i < h.counts.size(); ++i)
            out += format_significant(h.lo + static_cast<double>(i) * h.width) + ',' +
                   format_significant(h.lo + static_cast<double>(i + 1) * h.width) + ',' + std::to_string(h.counts[i]) +
                   '\n';
        return out;
    }

    void write_files_atomic(const std::filesystem::path &dir, const std::vector<OutputFile> &files)
    {
        namespace fs = std::filesystem;
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec)
            throw std::runtime_error("cannot create output directory '" + dir.string() + "': " + ec.message());

        std::vector<fs::path> temps;
        auto cleanup = [&] {
            for (const fs::path &t : temps)
                fs::remove(t, ec);
        };
        for (const OutputFile &f : files)
        {
            const fs::path tmp = dir / ("." + f.name + ".tmp");
            temps.push_back(tmp);
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out.write(f.content.data(), static_cast<std::streamsize>(f.content.size()));
            out.close();
            if (!out)
            {
                cleanup();
                throw std::runtime_error("cannot write '" + (dir / f.name).string() + "'");
            }
        }
        for (std::size_t i = 0; i < files.size(); ++i)
        {
            fs::rename(temps[i], dir / files[i].name, ec);
            if (ec)
            {
                cleanup();
                throw std::runtime_error("cannot rename into '" + (dir / files[i].name).string() + "': " + ec.message());
            }
        }
    }

    void emit_results(const ScenarioResult &result, const RunManifest &manifest, const std::filesystem::path &out_dir,
                      const std::vector<OutputFile> &extra)
    {
        std::vector<OutputFile> files = {
            {"ccdf.csv", ccdf_csv(result.ccdf)},
            {"summary.csv", summary_csv(std::span(&result.report, 1))},
            {"manifest.txt", format_manifest(manifest)},
        };
        files.insert(files.end(), extra.begin(), extra.end());
        write_files_atomic(out_dir, files);
    }
}
