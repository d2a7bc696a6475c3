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

// Acceptance checks. Each criterion prints one PASS or FAIL line with the
// measured quantities and its wall time against the budget.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "../support/oracles.hpp"
#include "hapsim/array.hpp"
#include "hapsim/cli.hpp"
#include "hapsim/config.hpp"
#include "hapsim/harness.hpp"
#include "hapsim/link.hpp"
#include "hapsim/mobility.hpp"
#include "hapsim/stats.hpp"

using namespace hapsim;

namespace {

struct Outcome
{
    bool pass = false;
    std::string detail;
};

std::string fmt(const char *f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

int g_failures = 0;

void criterion(const std::string &name, double budget_s, const std::function<Outcome()> &fn)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try
    {
        o = fn();
    }
    catch (const std::exception &e)
    {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = o.pass && dt < budget_s;
    if (!ok)
        ++g_failures;
    std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << o.detail
              << fmt(" [%.2f s, budget %.0f s]", dt, budget_s) << std::endl;
}

Outcome beam_gain_peak()
{
    const auto cfg = preset_config("table1");
    const auto r = harness::run_experiment(cfg, harness::Experiment::kBeamGainGrid);
    const double th = r.metadata["peak"]["theta_deg"], ph = r.metadata["peak"]["phi_deg"];
    const double v = r.metadata["peak"]["gain_abs"];
    const double cell = cfg.grid.beam_step_deg;
    const bool ok = std::abs(th - 60.0) <= cell && std::abs(ph - 30.0) <= cell && std::abs(v - 16.0) <= 1e-9;
    return {ok, fmt("peak %.6g at (%.2f, %.2f), |g - 16| = %.3g", v, th, ph, std::abs(v - 16.0))};
}

Outcome closed_form_equivalence()
{
    const double fc = 60e9;
    RandomStream rng(2024);
    double worst = 0.0;
    const int n = 10000;
    for (int i = 0; i < n; ++i)
    {
        const int nx = 1 + static_cast<int>(rng.uniform(0, 8)), ny = 1 + static_cast<int>(rng.uniform(0, 8));
        const auto g = array::ArrayGeometry::half_wavelength(nx, ny, fc);
        const auto conv = i % 2 ? array::PhaseConvention::kSeparableSine : array::PhaseConvention::kDirectionCosine;
        const auto w = array::beam_weights(g, rng.uniform(0, kPi / 2), rng.uniform(0, kPi / 2), wavelength(fc), conv);
        const double th = rng.uniform(0, kPi / 2), ph = rng.uniform(0, kPi / 2);
        const double fd = rng.uniform(-5e9, 5e9);
        const cplx s = array::beam_gain_sum(w, g, th, ph, fc + fd);
        const cplx c = array::beam_gain_closed(w, g, th, ph, fc, fd);
        worst = std::max(worst, std::abs(s - c) / g.n_total());
    }
    return {worst <= 1e-9, fmt("max |g_closed - g_sum| / n_total = %.3g over %d tuples", worst, n)};
}

Outcome doppler_displacement()
{
    const auto cfg = preset_config("mobile");
    const auto r = harness::run_experiment(cfg, harness::Experiment::kDopplerShiftGrid);
    const double th = r.metadata["sinr_peak"]["theta_deg"], ph = r.metadata["sinr_peak"]["phi_deg"];
    const double dth = r.metadata["dense_gain_peak"]["theta_deg"], dph = r.metadata["dense_gain_peak"]["phi_deg"];
    const double cell = cfg.grid.doppler_step_deg;
    const bool displaced = std::abs(th - cfg.focus_theta_deg) > cell || std::abs(ph - cfg.focus_phi_deg) > cell;
    const bool coincide = std::abs(th - dth) <= cell && std::abs(ph - dph) <= cell;
    return {displaced && coincide, fmt("f_d = %.1f Hz, SINR peak (%.2f, %.2f), dense gain peak (%.2f, %.2f), cell %.2f",
                                       r.metadata["f_d_hz"].get<double>(), th, ph, dth, dph, cell)};
}

Outcome sweep_ordering()
{
    auto cfg = preset_config("table1");
    cfg.sweep.trials = 1000;
    const auto sinr = harness::run_experiment(cfg, harness::Experiment::kSinrSweep);
    const auto cap = harness::run_experiment(cfg, harness::Experiment::kCapacitySweep);
    bool ok = true;
    double min_margin = 1e300;
    std::string peaks;
    double prev = -1e300;
    for (int n : cfg.sweep.array_sizes)
    {
        const std::string base = "n" + std::to_string(n) + "_dev";
        const auto &m = sinr.table("fig6_sinr_" + base + "0.csv");
        const auto &mc = cap.table("fig7_capacity_" + base + "0.csv");
        for (const char *d : {"2", "5"})
        {
            const auto &o = sinr.table("fig6_sinr_" + base + d + ".csv");
            const auto &oc = cap.table("fig7_capacity_" + base + d + ".csv");
            for (std::size_t i = 0; i < m.rows.size(); ++i)
            {
                ok = ok && m.rows[i][1] > o.rows[i][1] && mc.rows[i][1] > oc.rows[i][1];
                min_margin = std::min({min_margin, m.rows[i][1] - o.rows[i][1], mc.rows[i][1] - oc.rows[i][1]});
            }
        }
        const double peak = m.rows.back()[1];
        ok = ok && peak > prev;
        prev = peak;
        peaks += fmt(" N=%d:%.2f dB", n, peak);
    }
    return {ok, fmt("min matched-minus-deviated margin %.3g, peak SINR", min_margin) + peaks};
}

Outcome mobility_statistics()
{
    mobility::MobilityParams p;
    p.alpha_v = p.alpha_da = p.alpha_de = 0.5919;
    p.mu_v = 100.0;
    p.noise_std = 1.0;
    const auto s0 = mobility::make_state(Vec3(0, 0, 20000), 100.0, 0.0, 0.0);
    const auto tr = mobility::generate_trajectory(s0, p, 10000.0, 1.0, 1);
    double mean = 0.0;
    for (std::size_t i = 1; i < tr.states.size(); ++i)
        mean += tr.states[i].process.speed;
    const double n = static_cast<double>(tr.states.size() - 1);
    mean /= n;
    const double band = 4.0 * p.noise_std / std::sqrt(n);

    RandomStream rng(derive_seed(1, 0));
    std::vector<mobility::NoiseDraw> noise(10000);
    for (auto &d : noise)
        d = mobility::draw_noise(rng);
    double worst = 0.0;
    auto s = s0;
    for (std::size_t i = 1; i <= noise.size(); ++i)
    {
        s = mobility::step_gauss_markov(s, p, noise[i - 1]);
        if (i % 97 == 0 || i == noise.size())
        {
            const auto c = mobility::closed_form_state(s0, p, i, std::span(noise).first(i));
            worst = std::max({worst, std::abs(c.speed - s.process.speed) / std::abs(s.process.speed),
                              std::abs(c.az - s.process.az) / std::max(1.0, std::abs(s.process.az)),
                              std::abs(c.el - s.process.el) / std::max(1.0, std::abs(s.process.el))});
        }
    }
    const bool ok = std::abs(mean - 100.0) <= band && worst <= 1e-12;
    return {ok, fmt("mean speed %.5f (|dev| %.4f, band %.4f), closed-form max rel err %.3g", mean,
                    std::abs(mean - 100.0), band, worst)};
}

Outcome ici_equivalence()
{
    RandomStream rng(77);
    double worst = 0.0;
    for (int inst = 0; inst < 10; ++inst)
    {
        const int n_c = 4, v = 4, n_tx = 2, n_rx = 2;
        const auto corr = testing::random_tap_correlation(n_c, v, rng);
        const CMatrix r = inst == 0 ? CMatrix::Identity(n_c * n_tx, n_c * n_tx) : testing::random_psd(n_c * n_tx, rng);
        const link::SignalCovariance rxx(n_c, n_tx, r);
        for (int j = 0; j < n_c; ++j)
        {
            const CMatrix a = link::ici_covariance_analytic(corr, rxx, n_rx, j);
            const CMatrix b = testing::brute_force_ici(corr, r, n_tx, n_rx, j);
            worst = std::max(worst, (a - b).norm() / b.norm());
        }
    }

    RandomStream prng(78);
    const auto paths = channel::sample_cluster_paths(4, 4, prng);
    const channel::MulticarrierSpec spec{4, 240e3, 4};
    const double fdmax = 1.2e5;
    const link::SignalCovariance rxx = link::SignalCovariance::identity(4, 2);
    const link::ChannelSampler sampler = [&](RandomStream &g) {
        return channel::carrier_matrices(channel::tapped_channel(paths, 2, 2, spec, 0.0, fdmax, {}, g), 4);
    };
    const CMatrix analytic = link::ici_covariance_analytic(channel::tap_correlation(paths, spec, fdmax), rxx, 2, 1);
    const CMatrix mc = link::ici_covariance_mc(sampler, rxx, 1, 10000, 79);
    const double rel = (mc - analytic).norm() / analytic.norm();
    return {worst <= 1e-10 && rel <= 0.05,
            fmt("analytic vs brute force max rel %.3g; Monte-Carlo (1e4 trials) rel Frobenius %.4f", worst, rel)};
}

Outcome pdf_checks()
{
    double worst_gamma = 0.0;
    for (double m : {1.0, 2.0, 3.0, 5.0})
    {
        const double hi = stats::gamma_upper_limit(m, 1.0 / m, 1e-15);
        const double mass = stats::integrate([m](double z) { return stats::gamma_pdf(z, m); }, 0.0, hi, 1e-12, 1e-12).value;
        worst_gamma = std::max(worst_gamma, std::abs(mass - 1.0));
    }
    const auto table1 = preset_config("table1");
    double worst_snr = 0.0;
    for (double dev : {0.0, 2.0, 5.0})
    {
        const auto model = harness::pdf_model(table1, 60.0 + dev, 30.0 + dev, dev, false);
        const auto &p = model.params;
        const double hi = stats::gamma_upper_limit(p.m, p.kappa / (p.m * p.noise_scale), 1e-15);
        const double mass = stats::integrate([&](double g) { return stats::snr_pdf(g, p); }, 0.0, hi, 1e-12, 1e-12).value;
        worst_snr = std::max(worst_snr, std::abs(mass - p.mass()));
    }

    const std::size_t n = 100000;
    const auto matched = harness::pdf_model(table1, 60.0, 30.0, 0.0, false);
    const auto cdf0 = harness::pdf_cdf_table(matched);
    const double ks0 = stats::ks_distance(harness::pdf_samples(table1, matched, n, 501), [&](double g) { return cdf0(g); });

    const auto mobile = preset_config("mobile");
    const auto moving = harness::pdf_model(mobile, 60.0, 30.0, 0.0, true);
    const auto cdf1 = harness::pdf_cdf_table(moving);
    const double ks1 = stats::ks_distance(harness::pdf_samples(mobile, moving, n, 502), [&](double g) { return cdf1(g); });

    const bool ok = worst_gamma <= 1e-6 && worst_snr <= 1e-4 && ks0 <= 0.05 && ks1 <= 0.05;
    return {ok, fmt("gamma mass err %.2g, snr mass err %.2g, KS matched %.4f, KS with ICI (eps %.3g) %.4f",
                    worst_gamma, worst_snr, ks0, moving.leakage, ks1)};
}

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int reproduce_into(const std::filesystem::path &dir, int figure)
{
    const std::string out = dir.string();
    const std::string fig = std::to_string(figure);
    const char *argv[] = {"hapsim", "--quiet", "--out", out.c_str(), "reproduce", "--figure", fig.c_str()};
    std::ostringstream o, e;
    return run_cli(7, argv, o, e);
}

Outcome determinism()
{
    const auto root = std::filesystem::temp_directory_path() / "hapsim_acceptance_det";
    std::filesystem::remove_all(root);
    std::size_t files = 0;
    bool ok = true;
    for (int fig : harness::figure_ids())
        for (const char *run : {"a", "b"})
            if (reproduce_into(root / run, fig) != 0)
                return {false, fmt("reproduce --figure %d failed", fig)};
    for (const auto &e : std::filesystem::directory_iterator(root / "a"))
    {
        if (e.path().extension() != ".csv")
            continue;
        ++files;
        const auto twin = root / "b" / e.path().filename();
        ok = ok && std::filesystem::exists(twin) && slurp(e.path()) == slurp(twin);
    }
    std::filesystem::remove_all(root);
    return {ok && files > 0, fmt("%zu CSV files over %zu figures compared byte for byte", files, harness::figure_ids().size())};
}

} // namespace

int main()
{
    criterion("beam-gain peak", 5, beam_gain_peak);
    criterion("closed-form/oracle gain equivalence", 10, closed_form_equivalence);
    criterion("Doppler peak displacement", 60, doppler_displacement);
    criterion("SINR/capacity ordering", 300, sweep_ordering);
    criterion("mobility statistics", 5, mobility_statistics);
    criterion("ICI oracle equivalence", 120, ici_equivalence);
    criterion("PDF mass and cross-validation", 180, pdf_checks);
    criterion("determinism", 600, determinism);
    std::cout << (g_failures == 0 ? "all acceptance criteria passed" : std::to_string(g_failures) + " criteria failed")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
