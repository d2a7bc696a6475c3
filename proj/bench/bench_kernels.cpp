// SPDX-License-Identifier: Apache-2.0
//
// hapsim: air-to-air HAP channel and beamforming simulator
// Copyright (C) 2026 hapsim contributors
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

#include <benchmark/benchmark.h>

#include "hapsim/array.hpp"
#include "hapsim/channel.hpp"
#include "hapsim/config.hpp"
#include "hapsim/harness.hpp"
#include "hapsim/link.hpp"
#include "hapsim/parallel.hpp"

using namespace hapsim;

namespace {

struct GridFixture
{
    ScenarioConfig cfg = preset_config("mobile");
    array::ArrayGeometry geom = cfg.rx_geometry();
    array::BeamWeights w = harness::rx_weights(cfg);
    array::AngleGrid grid = array::AngleGrid::uniform(0, 90, 0, 90, 0.25);
};

void BM_BeamGainGridSerial(benchmark::State &st)
{
    GridFixture f;
    for (auto _ : st)
        benchmark::DoNotOptimize(array::beam_gain_grid_serial(f.w, f.geom, f.grid, f.cfg.carrier_hz, 9.6e9));
}

void BM_BeamGainGridParallel(benchmark::State &st)
{
    GridFixture f;
    for (auto _ : st)
        benchmark::DoNotOptimize(array::beam_gain_grid(f.w, f.geom, f.grid, f.cfg.carrier_hz, 9.6e9));
}

struct IciFixture
{
    channel::MulticarrierSpec spec{4, 240e3, 4};
    channel::ClusterPathSet paths;
    link::SignalCovariance rxx = link::SignalCovariance::identity(4, 2);
    link::ChannelSampler sampler;

    IciFixture()
    {
        RandomStream rng(7);
        paths = channel::sample_cluster_paths(2, 2, rng);
        sampler = [this](RandomStream &r) {
            const auto t = channel::tapped_channel(paths, 2, 2, spec, 0.0, 40e3, {}, r);
            return channel::carrier_matrices(t, spec.n_c);
        };
    }
};

void BM_IciMonteCarloSerial(benchmark::State &st)
{
    IciFixture f;
    for (auto _ : st)
        benchmark::DoNotOptimize(link::ici_covariance_mc_serial(f.sampler, f.rxx, 0, 2000, 1));
}

void BM_IciMonteCarloParallel(benchmark::State &st)
{
    IciFixture f;
    for (auto _ : st)
        benchmark::DoNotOptimize(link::ici_covariance_mc(f.sampler, f.rxx, 0, 2000, 1));
}

struct LinkGridFixture
{
    std::vector<channel::ScalarCarrierChannel> trials;
    std::vector<double> power;
    link::LinkConfig lc = link::LinkConfig::equal_split(4, 40.0, 1.0);

    LinkGridFixture()
    {
        trials = map_trials_serial(200, 3, [](RandomStream &rng, std::size_t) {
            channel::ScalarCarrierChannel h{4, CMatrix(4, 4)};
            for (int p = 0; p < 4; ++p)
                for (int q = 0; q < 4; ++q)
                    h.h(p, q) = rng.complex_normal() * (p == q ? 1.0 : 0.1);
            return h;
        });
        power.assign(181 * 181, 0.0);
        for (std::size_t i = 0; i < power.size(); ++i)
            power[i] = 256.0 * static_cast<double>(i % 997) / 997.0;
    }
};

void BM_LinkGridSerial(benchmark::State &st)
{
    LinkGridFixture f;
    for (auto _ : st)
        benchmark::DoNotOptimize(link::scaled_link_grid_serial(f.trials, f.power, f.lc));
}

void BM_LinkGridParallel(benchmark::State &st)
{
    LinkGridFixture f;
    for (auto _ : st)
        benchmark::DoNotOptimize(link::scaled_link_grid(f.trials, f.power, f.lc));
}

void BM_PdfSamplesSerial(benchmark::State &st)
{
    const auto cfg = preset_config("table1");
    const auto model = harness::pdf_model(cfg, 60, 30, 0, false);
    for (auto _ : st)
        benchmark::DoNotOptimize(harness::pdf_samples_serial(cfg, model, 20000, 5));
}

void BM_PdfSamplesParallel(benchmark::State &st)
{
    const auto cfg = preset_config("table1");
    const auto model = harness::pdf_model(cfg, 60, 30, 0, false);
    for (auto _ : st)
        benchmark::DoNotOptimize(harness::pdf_samples(cfg, model, 20000, 5));
}

} // namespace

BENCHMARK(BM_BeamGainGridSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BeamGainGridParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IciMonteCarloSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IciMonteCarloParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LinkGridSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LinkGridParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PdfSamplesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PdfSamplesParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
