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

#ifndef SARSHARE_RESULTS_IO_HPP
#define SARSHARE_RESULTS_IO_HPP

#include "sarshare/deployment.hpp"
#include "sarshare/distributions.hpp"
#include "sarshare/engine.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sarshare
{
    const char *version_string();

    // Decimal with `digits` significant digits, independent of the global locale.
    std::string format_significant(double x, int digits = 6);

    std::string sha256_hex_file(const std::string &path);
    std::string utc_timestamp();

    struct RunManifest
    {
        ScenarioConfig config;
        std::string tool_version;
        std::string started_utc;
        std::string finished_utc;
        std::vector<std::pair<std::string, std::string>> input_digests; // (key, sha256)
    };

    // Collects digests of every input file the configuration references.
    RunManifest make_manifest(const ScenarioConfig &cfg, std::string started_utc, std::string finished_utc);

    // The fully-resolved configuration with provenance comments; parses back as a config.
    std::string format_manifest(const RunManifest &m);

    std::string ccdf_csv(const CcdfTable &ccdf);
    std::string summary_csv(std::span<const ExceedanceReport> reports);
    // Side-by-side I/N at fixed exceedance probabilities, one column per scenario.
    std::string ccdf_comparison_csv(std::span<const ScenarioResult> results);
    std::string clutter_cdf_csv(std::span<const ClutterCdfRow> rows);
    std::string steering_hist_csv(const SteeringHistogram &h);
    struct GainSampleSet
    {
        double elevation_deg;
        std::vector<double> gains_dbi;
    };
    // Gain at log-spaced exceedance probabilities down to 1/n, one block per elevation.
    std::string gain_ccdf_csv(std::span<const GainSampleSet> sets);
    std::string histogram_csv(const Histogram &h, const std::string &value_column);

    struct OutputFile
    {
        std::string name;
        std::string content;
    };

    // Writes every file to a temporary name first and renames only after all writes succeeded.
    void write_files_atomic(const std::filesystem::path &dir, const std::vector<OutputFile> &files);

    void emit_results(const ScenarioResult &result, const RunManifest &manifest, const std::filesystem::path &out_dir,
                      const std::vector<OutputFile> &extra = {});
}

#endif
