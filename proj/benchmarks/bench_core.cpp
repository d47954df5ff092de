// SPDX-License-Identifier: Apache-2.0
//
// harqmimo: antenna dimensioning and outage analysis for MIMO-HARQ links
// Copyright (C) 2026 The harqmimo authors
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

#include "harqmimo/harqmimo.hpp"

#include <benchmark/benchmark.h>

using namespace harqmimo;

static void BM_QFunction(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::q_func(x));
        x = x < 8.0 ? x + 0.37 : 0.1;
    }
}
BENCHMARK(BM_QFunction);

static void BM_InverseQ(benchmark::State& state) {
    double p = 1e-8;
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::inv_q(p));
        p = p < 0.4 ? p * 3.1 : 1e-8;
    }
}
BENCHMARK(BM_InverseQ);

static void BM_LambertW(benchmark::State& state) {
    double x = 1e-6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(specfun::lambert_w(x));
        x = x < 1e6 ? x * 2.3 : 1e-6;
    }
}
BENCHMARK(BM_LambertW);

static void BM_MutualInfo(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SystemGeometry g{n, n, 10.0, Regime::Case4, 1.0};
    const auto key = Philox4x32::key_from_seed(3);
    std::uint64_t sample = 0;
    for (auto _ : state) {
        const ChannelSample h = sample_channel(g, {}, {key, sample++, 0});
        benchmark::DoNotOptimize(mutual_info(h, g.snr, n));
    }
}
BENCHMARK(BM_MutualInfo)->Arg(1)->Arg(4)->Arg(16)->Arg(64);

static void BM_EstimateOutage(benchmark::State& state) {
    const SystemGeometry g{2, 2, 10.0, Regime::Case4, 1.0};
    const HarqConfig h = HarqConfig::make(Fading::FastFading, 2, 2, 4.0);
    McOptions opts;
    opts.samples = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_outage(g, h, {}, std::nullopt, opts));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateOutage)->Arg(10'000)->Unit(benchmark::kMillisecond);

static void BM_SimoCurve(benchmark::State& state) {
    const HarqConfig h = HarqConfig::make(Fading::QuasiStatic, 1, 1, 3.0);
    McOptions opts;
    opts.samples = 100'000;
    for (auto _ : state) {
        const SimoOutageCurve curve(db_to_linear(5.0), h, opts, 60);
        benchmark::DoNotOptimize(curve.violations(16));
    }
    state.SetItemsProcessed(state.iterations() * 100'000);
}
BENCHMARK(BM_SimoCurve)->Unit(benchmark::kMillisecond);

static void BM_SearchCase1(benchmark::State& state) {
    AntennaQuery q;
    q.fixed_antennas = 1;
    q.snr = db_to_linear(5.0);
    q.harq = HarqConfig::make(Fading::QuasiStatic, 1, 1, 3.0);
    q.constraint = {1e-3};
    for (auto _ : state) benchmark::DoNotOptimize(min_antennas_search(q));
}
BENCHMARK(BM_SearchCase1);
BENCHMARK_MAIN();
