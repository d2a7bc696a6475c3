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

#include "hapsim/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>

#include "hapsim/config.hpp"
#include "hapsim/harness.hpp"
#include "hapsim/io.hpp"
#include "hapsim/parallel.hpp"

namespace hapsim {

namespace {

const char *kFooter = R"(Output files (CSV, comma separated, one header row; lines starting with '#' are comments):
  mobility-trace   fig1_hap1_mobility.csv, fig2_hap2_mobility.csv
                     t,x_m,y_m,z_m,speed_mps,dir_az_rad,dir_el_rad
                   fig3_positions.csv
                     hap,t,x_m,y_m,z_m
  beam-gain        fig5_beam_gain.csv
                     theta_deg,phi_deg,gain_abs
  sinr-sweep       fig6_sinr_n<N>_dev<deg>.csv
                     snr_db,sinr_db
  capacity-sweep   fig7_capacity_n<N>_dev<deg>.csv
                     snr_db,capacity_bps_hz
  doppler-grid     fig8_doppler_sinr.csv
                     theta_deg,phi_deg,sinr_db
                   fig9_doppler_capacity.csv
                     theta_deg,phi_deg,capacity_bps_hz
  pdf              fig10_pdf_<series>.csv (no Doppler) or fig11_pdf_<series>.csv,
                   each with a _mc twin holding the Monte-Carlo histogram
                     sinr_db,density
snr_db is the per-carrier transmit SNR before array gain; density is per dB.
Each run also writes <name>.meta.json (config hash, seed, git describe, wall time).
Environment: HAPSIM_THREADS caps the number of worker threads.)";

struct Globals
{
    std::string config;
    std::string preset;
    std::string out = ".";
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    bool quiet = false;
};

ScenarioConfig resolve_config(const Globals &g, const ScenarioConfig &fallback)
{
    ScenarioConfig cfg = fallback;
    if (!g.config.empty())
        cfg = load_config(g.config);
    else if (!g.preset.empty())
        cfg = preset_config(g.preset);
    if (g.seed)
        cfg.seed = *g.seed;
    if (g.trials)
    {
        if (*g.trials < 1)
            throw ConfigError("--trials: must be >= 1");
        cfg.sweep.trials = *g.trials;
        cfg.grid.doppler_trials = *g.trials;
        cfg.pdf.trials = *g.trials;
    }
    cfg.validate();
    return cfg;
}

void write_result(const harness::ExperimentResult &r, const Globals &g, const std::string &name, double wall_s,
                  std::ostream &out)
{
    const std::filesystem::path dir(g.out);
    for (const auto &t : r.tables)
    {
        const auto p = io::write_table(dir, t);
        if (!g.quiet)
            out << "wrote " << p.string() << "\n";
    }
    auto meta = r.metadata;
    meta["git_describe"] = io::git_describe();
    meta["wall_time_s"] = wall_s;
    meta["files"] = nlohmann::json::array();
    for (const auto &t : r.tables)
        meta["files"].push_back(t.file);
    const auto mp = dir / (name + ".meta.json");
    io::write_atomic(mp, meta.dump(2) + "\n");
    if (!g.quiet)
        out << "wrote " << mp.string() << "\n";
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"hapsim: air-to-air HAP channel, beamforming and link simulator", "hapsim"};
    app.footer(kFooter);
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    std::uint64_t seed = 0;
    int trials = 0;
    app.add_option("--config", g.config, "Scenario JSON file (angles in degrees)");
    app.add_option("--preset", g.preset, "Embedded scenario when no --config is given: table1, mobile");
    app.add_option("--out", g.out, "Output directory")->capture_default_str();
    auto *seed_opt = app.add_option("--seed", seed, "Override the base random seed (u64)");
    auto *trials_opt = app.add_option("--trials", trials, "Override Monte-Carlo trial counts");
    app.add_flag("--quiet", g.quiet, "Suppress progress output");

    struct Command
    {
        const char *name;
        const char *help;
        harness::Experiment experiment;
        int default_figure;
    };
    const Command commands[] = {
        {"mobility-trace", "Gauss-Markov traces of both HAPs", harness::Experiment::kMobilityTrace, 1},
        {"beam-gain", "Closed-form beam gain over the angle grid", harness::Experiment::kBeamGainGrid, 5},
        {"sinr-sweep", "Mean SINR vs SNR per array size and arrival deviation", harness::Experiment::kSinrSweep, 6},
        {"capacity-sweep", "Ergodic capacity vs SNR per array size and deviation", harness::Experiment::kCapacitySweep, 7},
        {"doppler-grid", "SINR and capacity over arrival angles under Doppler", harness::Experiment::kDopplerShiftGrid, 8},
        {"pdf", "Analytic and Monte-Carlo SINR densities", harness::Experiment::kPdfCurves, 10},
    };
    std::vector<CLI::App *> subs;
    for (const auto &c : commands)
        subs.push_back(app.add_subcommand(c.name, c.help));

    int figure = 0;
    auto *reproduce = app.add_subcommand("reproduce", "Write the data behind one figure");
    reproduce->add_option("--figure", figure, "Figure id: 1,2,3,5,6,7,8,9,10,11")->required();
    auto *validate = app.add_subcommand("validate-config", "Check a configuration and print its hash");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &)
    {
        out << app.help();
        return 0;
    }
    catch (const CLI::CallForAllHelp &)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    }
    catch (const CLI::ParseError &e)
    {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }
    if (seed_opt->count() > 0)
        g.seed = seed;
    if (trials_opt->count() > 0)
        g.trials = trials;

    try
    {
        apply_thread_env();
        const auto start = std::chrono::steady_clock::now();
        auto elapsed = [&] {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        };
        if (validate->parsed())
        {
            const auto cfg = resolve_config(g, preset_config("table1"));
            out << "ok preset=" << cfg.preset << " hash=" << std::hex << config_hash(cfg) << std::dec << "\n";
            return 0;
        }
        if (reproduce->parsed())
        {
            const auto cfg = resolve_config(g, harness::figure_config(figure));
            const auto r = harness::reproduce(cfg, figure);
            write_result(r, g, "fig" + std::to_string(figure), elapsed(), out);
            return 0;
        }
        for (std::size_t i = 0; i < subs.size(); ++i)
            if (subs[i]->parsed())
            {
                const auto &c = commands[i];
                const auto cfg = resolve_config(g, harness::figure_config(c.default_figure));
                const auto r = harness::run_experiment(cfg, c.experiment);
                write_result(r, g, r.experiment, elapsed(), out);
                return 0;
            }
        err << app.help();
        return 1;
    }
    catch (const ConfigError &e)
    {
        err << "configuration error:\n";
        for (const auto &f : e.fields())
            err << "  " << f << "\n";
        return 1;
    }
    catch (const std::exception &e)
    {
        err << "runtime error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace hapsim
