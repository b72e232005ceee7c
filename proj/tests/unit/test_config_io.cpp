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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sarshare;
using doctest::Approx;
namespace fs = std::filesystem;

namespace
{
    std::string slurp(const fs::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    fs::path scratch(const std::string &name)
    {
        const fs::path p = fs::temp_directory_path() / ("sarshare_test_" + name);
        fs::remove_all(p);
        return p;
    }

    std::string key_of(std::string_view doc)
    {
        try
        {
            parse_config(doc);
        }
        catch (const ConfigError &e)
        {
            return e.key();
        }
        return {};
    }
}

TEST_SUITE("config_io")
{
    TEST_CASE("empty document gives the baseline")
    {
        const ScenarioConfig c = parse_config("");
        CHECK(c.bla_deg == 50.0);
        CHECK(c.operators == 4);
        CHECK_FALSE(c.ssl_enabled);
        CHECK(c.snapshots == 163840);
        CHECK(c.noise_bandwidth_mhz == 400.0);
        CHECK(c.deployment.operators == 4);
        CHECK(parse_config("# only a comment\n\n   \n").seed == c.seed);
    }

    TEST_CASE("inconsistent operator and bandwidth")
    {
        CHECK(key_of("scenario.operators = 1\nscenario.noise_bandwidth_mhz = 400\n") == "scenario.noise_bandwidth_mhz");
        CHECK(key_of("operators = 1\nnoise_bandwidth_mhz = 400\n") == "scenario.noise_bandwidth_mhz");
        const ScenarioConfig ok = parse_config("scenario.operators = 1\nscenario.noise_bandwidth_mhz = 100\n");
        CHECK(ok.deployment.operators == 1);
        const ScenarioConfig from_file = load_config(SARSHARE_TEST_DATA_DIR "/../../tools/configs/case1.cfg");
        CHECK(from_file.operators == 1);
        CHECK_THROWS_AS(load_config(SARSHARE_TEST_DATA_DIR "/bad_operators.cfg"), ConfigError);
    }

    TEST_CASE("SSL switches on the Taylor taper")
    {
        const ScenarioConfig c = parse_config("antenna.ssl_enabled = true\n");
        CHECK(c.ssl_sll_db == -30.0);
        CHECK(c.normalized());
        const WeightMatrix w = c.weights();
        CHECK(w.max_coefficient() == Approx(1.0));
        CHECK(w(0, 0) < 0.3);
        CHECK(w(3, 3) == Approx(1.0));
        const WeightMatrix u = parse_config("").weights();
        CHECK(u(0, 0) == Approx(u(3, 3)));
        CHECK_FALSE(parse_config("antenna.ssl_enabled = true\nantenna.normalize = false\n").normalized());
        CHECK(parse_config("antenna.normalize = auto\n").normalize == std::nullopt);
    }

    TEST_CASE("structured errors")
    {
        CHECK(key_of("scenario.bogus = 1\n") == "scenario.bogus");
        CHECK(key_of("scenario.bla_deg = fifty\n") == "scenario.bla_deg");
        CHECK(key_of("scenario.operators = 0\n") == "scenario.operators");
        CHECK(key_of("deployment.ra_u = 1.5\n") == "deployment.ra_u");
        CHECK(key_of("scenario.seed = 1\nscenario.seed = 2\n") == "scenario.seed");
        CHECK(key_of("sar.fallback = false\n") == "sar.table_path");
        CHECK(key_of("scenario.snapshots = 0\n") == "scenario.snapshots");
        CHECK(key_of("this line has no equals sign\n") != "");
        CHECK_THROWS_AS(load_config("/nonexistent/path.cfg"), ConfigError);
    }

    TEST_CASE("format and parse round trip")
    {
        ScenarioConfig c = scenario_for_case(StudyCase::case3);
        c.seed = 0xfedcba9876543210ULL;
        c.bla_deg = 18.0;
        c.deployment.ue_distance_sigma_m = 1.0 / 3.0;
        c.sat_longitude_deg = -52.12345678901234;
        c.sat_latitude_deg = -23.4922;
        c.deployment.z3_count_override = 4;
        const std::string text = format_config(c);
        const ScenarioConfig back = parse_config(text);
        CHECK(format_config(back) == text);
        CHECK(back.seed == c.seed);
        CHECK(back.deployment.ue_distance_sigma_m == c.deployment.ue_distance_sigma_m);
        CHECK(back.sat_longitude_deg == c.sat_longitude_deg);
        CHECK(back.deployment.z3_count_override == 4);
        for (const ConfigKey &k : config_schema())
            CHECK_MESSAGE(text.find(k.name + " = ") != std::string::npos, k.name);
    }

    TEST_CASE("locale-independent CSV numbers")
    {
        CHECK(format_significant(1.23456789) == "1.23457");
        CHECK(format_significant(-0.000123456789) == "-0.000123457");
        CHECK(format_significant(6.41) == "6.41");
        CHECK(format_significant(1.0 / 163840.0) == "6.10352e-06");
        CHECK(format_significant(-400.0) == "-400");
        const CcdfTable t({1.5, -2.25, 0.125});
        CHECK(ccdf_csv(t) == "i_over_n_db,prob_exceeded\n-2.25,1\n0.125,0.666667\n1.5,0.333333\n");
        ExceedanceReport r;
        r.scenario = "baseline";
        r.in_at_1pct_db = 6.5;
        r.margin_db = -12.5;
        CHECK(summary_csv(std::span(&r, 1)) == "scenario,in_at_1pct_db,margin_db,pass\nbaseline,6.5,-12.5,false\n");
    }

    TEST_CASE("atomic writes leave nothing behind on failure")
    {
        const fs::path dir = scratch("atomic");
        CHECK_THROWS(write_files_atomic(dir, {{"a.csv", "x\n"}, {"missing/b.csv", "y\n"}}));
        CHECK(fs::is_empty(dir));

        const fs::path blocker = scratch("blocker");
        std::ofstream(blocker) << "file";
        CHECK_THROWS(write_files_atomic(blocker / "out", {{"a.csv", "x\n"}}));

        write_files_atomic(dir, {{"a.csv", "x\n"}, {"b.csv", "y\n"}});
        CHECK(slurp(dir / "a.csv") == "x\n");
        CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator()) == 2);
        fs::remove_all(dir);
        fs::remove(blocker);
    }

    TEST_CASE("a manifest reproduces every output byte")
    {
        ScenarioConfig c = scenario_for_case(StudyCase::case1);
        c.snapshots = 300;
        c.seed = 42;
        const ScenarioResult first = run_scenario(c);
        const fs::path a = scratch("run_a"), b = scratch("run_b");
        emit_results(first, make_manifest(c, utc_timestamp(), utc_timestamp()), a);

        const ScenarioConfig replay = parse_config(slurp(a / "manifest.txt"));
        CHECK(replay.seed == 42);
        CHECK(replay.snapshots == 300);
        ScenarioConfig threaded = replay;
        threaded.threads = 3;
        const ScenarioResult second = run_scenario(threaded);
        emit_results(second, make_manifest(threaded, "t0", "t1"), b);
        CHECK(slurp(a / "ccdf.csv") == slurp(b / "ccdf.csv"));
        CHECK(slurp(a / "summary.csv") == slurp(b / "summary.csv"));
        CHECK(slurp(a / "ccdf.csv").rfind("i_over_n_db,prob_exceeded\n", 0) == 0);

        const std::string manifest = slurp(a / "manifest.txt");
        CHECK(manifest.find("seed") != std::string::npos);
        CHECK(manifest.find(version_string()) != std::string::npos);
        fs::remove_all(a);
        fs::remove_all(b);
    }

    TEST_CASE("file digests")
    {
        const fs::path p = scratch("digest.txt");
        std::ofstream(p) << "abc";
        CHECK(sha256_hex_file(p.string()) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
        fs::remove(p);
        CHECK_THROWS(sha256_hex_file("/nonexistent/file"));
    }
}
