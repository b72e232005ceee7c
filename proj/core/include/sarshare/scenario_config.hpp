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

#ifndef SARSHARE_SCENARIO_CONFIG_HPP
#define SARSHARE_SCENARIO_CONFIG_HPP

#include "sarshare/engine.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sarshare
{
    /*!MD
    # Scenario configuration format

    Flat `key = value` lines with dotted section names. `#` starts a comment, blank lines are
    ignored, every key is optional and defaults to the baseline scenario. A key without a
    section (`operators = 1`) is accepted when its last component is unique in the schema.
    Optional values accept `auto` for "derive from the rest of the configuration".

        scenario.bla_deg = 50
        scenario.operators = 4
        scenario.noise_bandwidth_mhz = 400
        antenna.ssl_enabled = false
        sar.table_path = rs2043_sar_f6.csv

    `format_config` writes every key with round-trip number formatting, so its output parses
    back to an identical configuration.
    MD!*/

    struct ConfigKey
    {
        std::string name;
        std::string description;
    };

    const std::vector<ConfigKey> &config_schema();

    // Parses and validates; errors are ConfigError carrying the offending key path.
    ScenarioConfig parse_config(std::string_view document);
    ScenarioConfig load_config(const std::string &path);

    // Applies one assignment to an existing configuration without validating.
    void set_config_value(ScenarioConfig &cfg, std::string_view key, std::string_view value);

    std::string format_config(const ScenarioConfig &cfg);
}

#endif
