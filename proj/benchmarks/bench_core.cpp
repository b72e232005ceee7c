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
#include "sarshare/propagation.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace sarshare;

static void BM_CompositeGainUniform(benchmark::State &state)
{
    const WeightMatrix w = WeightMatrix::uniform(8, 8);
    const ArrayConfig cfg;
    double th = 80.0;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(composite_gain_raw({th, 12.0}, {6.0, -20.0}, w, cfg));
        th = th < 100.0 ? th + 0.01 : 80.0;
    }
}
BENCHMARK(BM_CompositeGainUniform);

static void BM_CompositeGainTaylorNormalized(benchmark::State &state)
{
    static const CompositeAntenna ant(ArrayConfig{}, taylor_weights(8, -30.0, 4), true);
    double th = 80.0;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(ant.gain_dbi({th, 12.0}, {6.0, -20.0}));
        th = th < 100.0 ? th + 0.01 : 80.0;
    }
}
BENCHMARK(BM_CompositeGainTaylorNormalized);

static void BM_TotalIntegratedGain(benchmark::State &state)
{
    const WeightMatrix w = taylor_weights(8, -30.0, 4);
    const ArrayConfig cfg;
    const QuadratureSpec quad{state.range(0) / 100.0};
    for (auto _ : state)
        benchmark::DoNotOptimize(total_integrated_gain({7.0, -23.0}, w, cfg, quad));
}
BENCHMARK(BM_TotalIntegratedGain)->Arg(100)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_ClutterLoss(benchmark::State &state)
{
    double p = 0.5;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(clutter_loss_sample(10.2, 34.43, p));
        p = p < 99.0 ? p + 0.37 : 0.5;
    }
}
BENCHMARK(BM_ClutterLoss);

static void BM_AggregateIn(benchmark::State &state)
{
    std::vector<double> x(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = -40.0 + static_cast<double>(i % 97) * 0.3;
    for (auto _ : state)
        benchmark::DoNotOptimize(aggregate_in(x));
}
BENCHMARK(BM_AggregateIn)->Arg(117)->Arg(468);

static void BM_Snapshot(benchmark::State &state)
{
    ScenarioConfig cfg = scenario_for_case(state.range(0) ? StudyCase::baseline : StudyCase::case1);
    const Simulation sim(cfg);
    std::uint64_t k = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(sim.run_snapshot(k++).i_agg_over_n_db);
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Snapshot)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
