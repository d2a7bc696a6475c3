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

#include <doctest.h>

#include "hapsim/harness.hpp"
#include "hapsim/stats.hpp"

using namespace hapsim;
using namespace hapsim::harness;
using nlohmann::json;

namespace {

ScenarioConfig quick(const std::string &preset = "table1")
{
    auto c = preset_config(preset);
    c.sweep.trials = 100;
    c.grid.beam_step_deg = 1.0;
    c.grid.doppler_step_deg = 1.0;
    c.grid.doppler_trials = 20;
    c.pdf.trials = 2000;
    c.pdf.points = 50;
    return c;
}

std::string dump(const ExperimentResult &r)
{
    std::string s;
    for (const auto &t : r.tables)
        s += t.file + "\n" + io::to_csv(t);
    return s;
}

} // namespace

TEST_CASE("experiment names round trip")
{
    for (auto e : {Experiment::kMobilityTrace, Experiment::kBeamGainGrid, Experiment::kSinrSweep,
                   Experiment::kCapacitySweep, Experiment::kDopplerShiftGrid, Experiment::kPdfCurves})
        CHECK(parse_experiment(experiment_name(e)) == e);
    CHECK_THROWS_AS(parse_experiment("fig99"), ConfigError);
}

TEST_CASE("beam gain grid peaks at the focus with the full array gain")
{
    auto c = preset_config("table1");
    const auto r = run_experiment(c, Experiment::kBeamGainGrid);
    const auto &t = r.table("fig5_beam_gain.csv");
    CHECK(t.rows.size() == 361u * 361u);
    CHECK(r.metadata["peak"]["theta_deg"] == 60.0);
    CHECK(r.metadata["peak"]["phi_deg"] == 30.0);
    CHECK(std::abs(r.metadata["peak"]["gain_abs"].get<double>() - 16.0) <= 1e-9);
}

TEST_CASE("runs with a fixed seed are identical")
{
    for (auto e : {Experiment::kMobilityTrace, Experiment::kSinrSweep, Experiment::kPdfCurves})
    {
        const auto c = quick();
        CHECK(dump(run_experiment(c, e)) == dump(run_experiment(c, e)));
    }
    auto a = quick();
    auto b = quick();
    b.seed = 2;
    CHECK(dump(run_experiment(a, Experiment::kMobilityTrace)) != dump(run_experiment(b, Experiment::kMobilityTrace)));
}

TEST_CASE("mobility traces stay within the slant bound")
{
    const auto r = run_experiment(quick(), Experiment::kMobilityTrace);
    CHECK(r.table("fig1_hap1_mobility.csv").rows.size() == 101);
    CHECK(r.table("fig3_positions.csv").rows.size() == 202);
    CHECK(r.metadata["max_d3d_m"].get<double>() <= 500.0);
}

TEST_CASE("sweep yields one result per value and follows permutations")
{
    const auto c = quick();
    const std::vector<json> sizes{16, 32, 64};
    const auto rs = sweep(c, "/array_elements", sizes, Experiment::kBeamGainGrid);
    REQUIRE(rs.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(rs[i].metadata["peak"]["gain_abs"].get<double>() == doctest::Approx(sizes[i].get<double>()));

    const std::vector<json> seeds{json(3), json(9)};
    const std::vector<json> swapped{json(9), json(3)};
    const auto fwd = sweep(c, "/hap1/speed_mps", {json(90.0), json(110.0)}, Experiment::kMobilityTrace);
    const auto rev = sweep(c, "/hap1/speed_mps", {json(110.0), json(90.0)}, Experiment::kMobilityTrace);
    CHECK(dump(fwd[0]) == dump(rev[1]));
    CHECK(dump(fwd[1]) == dump(rev[0]));
    CHECK(sweep(c, "/array_elements", {}, Experiment::kBeamGainGrid).empty());
    CHECK_THROWS_AS(sweep(c, "/no_such_field", sizes, Experiment::kBeamGainGrid), ConfigError);
    CHECK_THROWS_AS(sweep(c, "array_elements", sizes, Experiment::kBeamGainGrid), ConfigError);
    CHECK_THROWS_AS(sweep(c, "/array_elements", {json(0)}, Experiment::kBeamGainGrid), ConfigError);
}

TEST_CASE("matched arrivals dominate deviated ones")
{
    auto c = quick();
    c.sweep.trials = 200;
    const auto r = run_experiment(c, Experiment::kSinrSweep);
    const auto cap = run_experiment(c, Experiment::kCapacitySweep);
    double prev_peak = -1e9;
    for (int n : c.sweep.array_sizes)
    {
        const std::string base = "n" + std::to_string(n) + "_dev";
        const auto &m = r.table("fig6_sinr_" + base + "0.csv");
        const auto &mc = cap.table("fig7_capacity_" + base + "0.csv");
        for (const char *d : {"2", "5"})
        {
            const auto &o = r.table("fig6_sinr_" + base + d + ".csv");
            const auto &oc = cap.table("fig7_capacity_" + base + d + ".csv");
            for (std::size_t i = 0; i < m.rows.size(); ++i)
            {
                CHECK(m.rows[i][1] > o.rows[i][1]);
                CHECK(mc.rows[i][1] > oc.rows[i][1]);
            }
        }
        CHECK(m.rows.back()[1] > prev_peak);
        prev_peak = m.rows.back()[1];
    }
}

TEST_CASE("Doppler moves the SINR peak off the focus")
{
    auto c = quick("mobile");
    const auto setup = doppler_setup(c);
    CHECK(setup.f_d != 0.0);
    CHECK(std::abs(setup.f_d) <= setup.f_dmax);
    const auto r = run_experiment(c, Experiment::kDopplerShiftGrid);
    const double th = r.metadata["sinr_peak"]["theta_deg"], ph = r.metadata["sinr_peak"]["phi_deg"];
    CHECK(std::max(std::abs(th - 60.0), std::abs(ph - 30.0)) > 1.0);
    const double dth = r.metadata["dense_gain_peak"]["theta_deg"], dph = r.metadata["dense_gain_peak"]["phi_deg"];
    CHECK(std::abs(th - dth) <= 1.0);
    CHECK(std::abs(ph - dph) <= 1.0);
    // The co-moving Table I pair sees no LoS Doppler.
    CHECK(doppler_setup(preset_config("table1")).f_d == 0.0);
}

TEST_CASE("PDF model uses the beam power as its scale")
{
    const auto c = preset_config("table1");
    const auto m0 = pdf_model(c, 60.0, 30.0, 0.0, false);
    CHECK(m0.beam_power == doctest::Approx(256.0));
    CHECK(m0.params.kappa == doctest::Approx(stats::kappa_const(4, 4)));
    CHECK(m0.leakage == 0.0);
    const auto m5 = pdf_model(c, 65.0, 35.0, 5.0, false);
    CHECK(m5.beam_power < m0.beam_power);
    const auto mob = pdf_model(preset_config("mobile"), 60.0, 30.0, 0.0, true);
    CHECK(mob.leakage > 0.0);
    const auto a = pdf_samples(c, m0, 500, 4);
    const auto b = pdf_samples_serial(c, m0, 500, 4);
    CHECK(a == b);
    const auto cdf = pdf_cdf_table(m0, 400);
    CHECK(cdf.values().back() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(stats::ks_distance(a, [&](double g) { return cdf(g); }) < 0.08);
}

TEST_CASE("PDF curves are normalized densities per dB")
{
    auto c = quick();
    c.pdf.points = 200;
    const auto r = run_experiment(c, Experiment::kPdfCurves);
    CHECK(r.tables.size() == 6);
    const double step = 50.0 / 200;
    for (const auto &t : r.tables)
    {
        double s = 0.0;
        for (const auto &row : t.rows)
        {
            CHECK(row[1] >= 0.0);
            s += row[1] * step;
        }
        CHECK(s == doctest::Approx(1.0).epsilon(0.01));
    }
}

TEST_CASE("reproduce keeps only the requested figure")
{
    auto c = quick();
    const auto r = reproduce(c, 2);
    REQUIRE(r.tables.size() == 1);
    CHECK(r.tables[0].file == "fig2_hap2_mobility.csv");
    CHECK(r.metadata["figure"] == 2);
    CHECK_THROWS_AS(reproduce(c, 11), ConfigError);
    CHECK_THROWS_AS(reproduce(c, 4), ConfigError);
    CHECK(figure_config(8).preset == "mobile");
    CHECK(figure_config(5).preset == "table1");
    CHECK(figure_ids().size() == 10);
}
