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

#include "hapsim/harness.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "hapsim/channel.hpp"
#include "hapsim/link.hpp"
#include "hapsim/mobility.hpp"
#include "hapsim/parallel.hpp"
#include "hapsim/random.hpp"

namespace hapsim::harness {

using nlohmann::json;

namespace {

const std::map<std::string, Experiment> &experiment_table()
{
    static const std::map<std::string, Experiment> t{
        {"mobility_trace", Experiment::kMobilityTrace},     {"beam_gain_grid", Experiment::kBeamGainGrid},
        {"sinr_sweep", Experiment::kSinrSweep},             {"capacity_sweep", Experiment::kCapacitySweep},
        {"doppler_shift_grid", Experiment::kDopplerShiftGrid}, {"pdf_curves", Experiment::kPdfCurves},
    };
    return t;
}

std::string hex(std::uint64_t v)
{
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

json base_metadata(const ScenarioConfig &cfg, Experiment e)
{
    return json{{"experiment", experiment_name(e)},
                {"config_hash", hex(config_hash(cfg))},
                {"seed", cfg.seed},
                {"preset", cfg.preset}};
}

double db(double x) { return 10.0 * std::log10(x); }
double undb(double x) { return std::pow(10.0, x / 10.0); }

std::string label(double v) { return io::format_number(v); }

// Unit-norm weight vector of a beam.
CVector unit(const array::BeamWeights &w) { return w.column() / std::sqrt(static_cast<double>(w.columns.rows())); }

// Matched transmit beam power |a_tx^H w_tx|^2 with unit-norm weights.
double tx_beam_power(const ScenarioConfig &cfg)
{
    return static_cast<double>(cfg.tx_geometry().n_total());
}

// Receive beam power with unit-norm weights at an arrival angle.
double rx_beam_power(const ScenarioConfig &cfg, const array::BeamWeights &w, double theta, double phi, double f_d)
{
    const auto g = array::beam_gain_closed(w, cfg.rx_geometry(), theta, phi, cfg.carrier_hz, f_d, cfg.axis_mode);
    return std::norm(g) / static_cast<double>(cfg.rx_geometry().n_total());
}

channel::AngleRanges fixed_ranges(double theta_tx, double phi_tx, double theta_rx, double phi_rx)
{
    channel::AngleRanges r;
    r.theta_tx = {theta_tx, theta_tx};
    r.phi_tx = {phi_tx, phi_tx};
    r.theta_rx = {theta_rx, theta_rx};
    r.phi_rx = {phi_rx, phi_rx};
    return r;
}

io::Table trajectory_table(const std::string &file, const mobility::Trajectory &tr)
{
    io::Table t{file, {}, {"t", "x_m", "y_m", "z_m", "speed_mps", "dir_az_rad", "dir_el_rad"}, {}};
    for (const auto &s : tr.states)
        t.rows.push_back({s.t, s.position.x(), s.position.y(), s.position.z(), s.speed(), s.dir_az(), s.dir_el()});
    return t;
}

ExperimentResult run_mobility(const ScenarioConfig &cfg)
{
    const auto pair = mobility::generate_constrained_pair(cfg.initial_state(1), cfg.hap1.mobility,
                                                          cfg.initial_state(2), cfg.hap2.mobility, cfg.duration_s,
                                                          cfg.dt_s, cfg.max_d3d_m, cfg.seed);
    ExperimentResult r;
    r.experiment = experiment_name(Experiment::kMobilityTrace);
    r.tables.push_back(trajectory_table("fig1_hap1_mobility.csv", pair.hap1));
    r.tables.push_back(trajectory_table("fig2_hap2_mobility.csv", pair.hap2));
    io::Table pos{"fig3_positions.csv", {}, {"hap", "t", "x_m", "y_m", "z_m"}, {}};
    for (const auto *tr : {&pair.hap1, &pair.hap2})
    {
        const double id = tr == &pair.hap1 ? 1.0 : 2.0;
        for (const auto &s : tr->states)
            pos.rows.push_back({id, s.t, s.position.x(), s.position.y(), s.position.z()});
    }
    r.tables.push_back(std::move(pos));
    double max_d3d = 0.0;
    for (std::size_t i = 0; i < pair.hap1.states.size(); ++i)
        max_d3d = std::max(max_d3d, (pair.hap1.states[i].position - pair.hap2.states[i].position).norm());
    r.metadata = base_metadata(cfg, Experiment::kMobilityTrace);
    r.metadata["steps"] = pair.hap1.states.size();
    r.metadata["rejected_steps"] = pair.rejected_steps;
    r.metadata["max_d3d_m"] = max_d3d;
    return r;
}

array::AngleGrid grid_for(const ScenarioConfig &cfg, double step)
{
    return array::AngleGrid::uniform(cfg.grid.theta_min_deg, cfg.grid.theta_max_deg, cfg.grid.phi_min_deg,
                                     cfg.grid.phi_max_deg, step);
}

ExperimentResult run_beam_gain(const ScenarioConfig &cfg)
{
    const auto setup = doppler_setup(cfg);
    const auto w = rx_weights(cfg);
    const auto gg = array::beam_gain_grid(w, cfg.rx_geometry(), grid_for(cfg, cfg.grid.beam_step_deg), cfg.carrier_hz,
                                          setup.f_d_beam);
    io::Table t{"fig5_beam_gain.csv", {}, {"theta_deg", "phi_deg", "gain_abs"}, {}};
    const std::size_t np = gg.grid.phi_deg.size();
    for (std::size_t i = 0; i < gg.grid.theta_deg.size(); ++i)
        for (std::size_t j = 0; j < np; ++j)
            t.rows.push_back({gg.grid.theta_deg[i], gg.grid.phi_deg[j], gg.at(i, j)});
    const auto peak = array::grid_peak(gg);
    ExperimentResult r;
    r.experiment = experiment_name(Experiment::kBeamGainGrid);
    r.tables.push_back(std::move(t));
    r.metadata = base_metadata(cfg, Experiment::kBeamGainGrid);
    r.metadata["f_d_beam_hz"] = setup.f_d_beam;
    r.metadata["peak"] = {{"theta_deg", peak.theta_deg}, {"phi_deg", peak.phi_deg}, {"gain_abs", peak.value}};
    return r;
}

ExperimentResult run_link_sweep(const ScenarioConfig &cfg, bool capacity)
{
    const auto &sizes = cfg.sweep.array_sizes;
    const auto &devs = cfg.sweep.deviations_deg;
    const auto &snrs = cfg.sweep.snr_db;
    const auto spec = cfg.multicarrier();
    const auto setup = doppler_setup(cfg);
    const double f_dmax = cfg.sweep.include_doppler ? setup.f_dmax : 0.0;
    const double lambda = wavelength(cfg.carrier_hz);
    const double th_f = deg2rad(cfg.focus_theta_deg);
    const double ph_f = deg2rad(cfg.focus_phi_deg);
    const channel::ChannelOptions opts{cfg.convention, channel::ChannelNormalization::kUnitPower};

    struct Arrays
    {
        array::ArrayGeometry tx, rx;
        CVector w_tx, w_rx;
    };
    std::vector<Arrays> arrays;
    for (int n : sizes)
    {
        ScenarioConfig c = cfg;
        c.array_elements = n;
        c.tx_array = {};
        c.rx_array = {};
        Arrays a{c.tx_geometry(), c.rx_geometry(), {}, {}};
        a.w_tx = unit(array::beam_weights(a.tx, th_f, ph_f, lambda, cfg.convention));
        a.w_rx = unit(array::beam_weights(a.rx, th_f, ph_f, lambda, cfg.convention));
        arrays.push_back(std::move(a));
    }
    std::vector<link::LinkConfig> links;
    for (double s : snrs)
        links.push_back(link::LinkConfig::equal_split(spec.n_c, spec.n_c * undb(s) * cfg.noise_energy, cfg.noise_energy));

    const std::size_t n_out = sizes.size() * devs.size() * snrs.size();
    const auto trials = static_cast<std::size_t>(cfg.sweep.trials);
    const auto per_trial = map_trials(trials, derive_seed(cfg.seed, 11), [&](RandomStream &rng, std::size_t) {
        auto paths = channel::sample_cluster_paths(cfg.clusters, cfg.paths_per_cluster, rng,
                                                   fixed_ranges(th_f, ph_f, th_f, ph_f));
        std::vector<double> out(2 * n_out);
        std::size_t k = 0;
        for (const auto &a : arrays)
            for (double dev : devs)
            {
                for (auto &p : paths.paths)
                {
                    p.theta_rx = th_f + deg2rad(dev);
                    p.phi_rx = ph_f + deg2rad(dev);
                }
                const auto bp = channel::beamformed_paths(paths, a.tx, a.rx, a.w_tx, a.w_rx, cfg.carrier_hz, opts);
                const auto h = channel::scalar_carrier_channel(bp, spec, 0.0, f_dmax, cfg.pdp);
                for (const auto &lc : links)
                {
                    const auto m = link::evaluate_link(h, lc);
                    double mean = 0.0;
                    for (double g : m.gamma)
                        mean += g;
                    out[2 * k] = mean / static_cast<double>(m.gamma.size());
                    out[2 * k + 1] = m.capacity;
                    ++k;
                }
            }
        return out;
    });
    std::vector<double> acc(2 * n_out, 0.0);
    for (const auto &v : per_trial)
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] += v[i];
    for (double &x : acc)
        x /= static_cast<double>(trials);

    ExperimentResult r;
    const Experiment e = capacity ? Experiment::kCapacitySweep : Experiment::kSinrSweep;
    r.experiment = experiment_name(e);
    r.metadata = base_metadata(cfg, e);
    r.metadata["trials"] = trials;
    r.metadata["f_dmax_hz"] = f_dmax;
    std::size_t k = 0;
    for (std::size_t si = 0; si < sizes.size(); ++si)
        for (double dev : devs)
        {
            const std::string tag = "n" + std::to_string(sizes[si]) + "_dev" + label(dev);
            io::Table t;
            t.comments.push_back("snr_db is the per-carrier transmit SNR before array gain");
            if (capacity)
            {
                t.file = "fig7_capacity_" + tag + ".csv";
                t.columns = {"snr_db", "capacity_bps_hz"};
            }
            else
            {
                t.file = "fig6_sinr_" + tag + ".csv";
                t.columns = {"snr_db", "sinr_db"};
            }
            for (double s : snrs)
            {
                t.rows.push_back({s, capacity ? acc[2 * k + 1] : db(acc[2 * k])});
                ++k;
            }
            r.tables.push_back(std::move(t));
        }
    return r;
}

// Beamformed scalar channel of one trial with unit beam amplitude: every
// path arrives on the beam axis, so the grid only rescales it.
channel::ScalarCarrierChannel unit_beam_trial(const ScenarioConfig &cfg, double f_dmax, RandomStream &rng)
{
    const auto paths = channel::sample_cluster_paths(cfg.clusters, cfg.paths_per_cluster, rng);
    const double scale = 1.0 / std::sqrt(static_cast<double>(paths.K) * paths.L);
    std::vector<channel::BeamformedPath> bp;
    for (const auto &p : paths.paths)
        bp.push_back({scale * p.gain, p.doppler_term(), p.cluster});
    return channel::scalar_carrier_channel(bp, cfg.multicarrier(), 0.0, f_dmax, cfg.pdp);
}

ExperimentResult run_doppler_grid(const ScenarioConfig &cfg)
{
    const auto setup = doppler_setup(cfg);
    const auto w = rx_weights(cfg);
    const auto grid = grid_for(cfg, cfg.grid.doppler_step_deg);
    const double g_tx = tx_beam_power(cfg);

    std::vector<double> power;
    power.reserve(grid.size());
    for (double th : grid.theta_deg)
        for (double ph : grid.phi_deg)
            power.push_back(g_tx * rx_beam_power(cfg, w, deg2rad(th), deg2rad(ph), setup.f_d_beam));

    const auto trials = static_cast<std::size_t>(cfg.grid.doppler_trials);
    const auto unit_trials = map_trials(trials, derive_seed(cfg.seed, 12),
                                        [&](RandomStream &rng, std::size_t) { return unit_beam_trial(cfg, setup.f_dmax, rng); });
    const int n_c = cfg.n_carriers;
    const auto lc = link::LinkConfig::equal_split(n_c, n_c * undb(cfg.grid.snr_db) * cfg.noise_energy, cfg.noise_energy);
    const auto gm = link::scaled_link_grid(unit_trials, power, lc);

    io::Table ts{"fig8_doppler_sinr.csv", {}, {"theta_deg", "phi_deg", "sinr_db"}, {}};
    io::Table tc{"fig9_doppler_capacity.csv", {}, {"theta_deg", "phi_deg", "capacity_bps_hz"}, {}};
    std::size_t best = 0;
    const std::size_t np = grid.phi_deg.size();
    for (std::size_t i = 0; i < grid.theta_deg.size(); ++i)
        for (std::size_t j = 0; j < np; ++j)
        {
            const std::size_t c = i * np + j;
            ts.rows.push_back({grid.theta_deg[i], grid.phi_deg[j], db(gm.mean_sinr[c])});
            tc.rows.push_back({grid.theta_deg[i], grid.phi_deg[j], gm.mean_capacity[c]});
            if (gm.mean_sinr[c] > gm.mean_sinr[best])
                best = c;
        }
    const auto dense = dense_gain_peak(cfg, setup.f_d_beam, cfg.grid.dense_step_deg);

    ExperimentResult r;
    r.experiment = experiment_name(Experiment::kDopplerShiftGrid);
    r.tables.push_back(std::move(ts));
    r.tables.push_back(std::move(tc));
    r.metadata = base_metadata(cfg, Experiment::kDopplerShiftGrid);
    r.metadata["trials"] = trials;
    r.metadata["f_d_hz"] = setup.f_d;
    r.metadata["f_d_beam_hz"] = setup.f_d_beam;
    r.metadata["f_dmax_hz"] = setup.f_dmax;
    r.metadata["sinr_peak"] = {{"theta_deg", grid.theta_deg[best / np]}, {"phi_deg", grid.phi_deg[best % np]}};
    r.metadata["dense_gain_peak"] = {{"theta_deg", dense.theta_deg}, {"phi_deg", dense.phi_deg}, {"gain_abs", dense.value}};
    return r;
}

io::Table pdf_table(const std::string &file, const std::vector<double> &x, const std::vector<double> &y)
{
    io::Table t{file, {}, {"sinr_db", "density"}, {}};
    for (std::size_t i = 0; i < x.size(); ++i)
        t.rows.push_back({x[i], y[i]});
    return t;
}

ExperimentResult run_pdf(const ScenarioConfig &cfg)
{
    const auto setup = doppler_setup(cfg);
    const bool with_doppler = setup.f_d != 0.0;
    const std::string prefix = with_doppler ? "fig11" : "fig10";
    const auto &pc = cfg.pdf;
    const int n_pts = pc.points;
    const double step = (pc.sinr_db_max - pc.sinr_db_min) / n_pts;

    struct Series
    {
        std::string tag;
        double theta_deg, phi_deg, dev_deg;
    };
    std::vector<Series> series;
    for (double d : pc.deviations_deg)
        series.push_back({"dev" + label(d), cfg.focus_theta_deg + d, cfg.focus_phi_deg + d, d});
    if (with_doppler)
    {
        const auto peak = dense_gain_peak(cfg, setup.f_d_beam, cfg.grid.dense_step_deg);
        series.push_back({"peak", peak.theta_deg, peak.phi_deg,
                          std::max(std::abs(peak.theta_deg - cfg.focus_theta_deg), std::abs(peak.phi_deg - cfg.focus_phi_deg))});
    }

    ExperimentResult r;
    r.experiment = experiment_name(Experiment::kPdfCurves);
    r.metadata = base_metadata(cfg, Experiment::kPdfCurves);
    r.metadata["trials"] = pc.trials;
    r.metadata["series"] = json::array();
    for (const auto &s : series)
    {
        const auto model = pdf_model(cfg, s.theta_deg, s.phi_deg, s.dev_deg, with_doppler);
        std::vector<double> xs(static_cast<std::size_t>(n_pts)), ys(xs.size());
        for (int i = 0; i < n_pts; ++i)
        {
            const double x = pc.sinr_db_min + (i + 0.5) * step;
            const double g = undb(x);
            xs[static_cast<std::size_t>(i)] = x;
            ys[static_cast<std::size_t>(i)] =
                stats::sinr_pdf(g, model.params, model.n_c) / model.params.mass() * g * std::log(10.0) / 10.0;
        }
        r.tables.push_back(pdf_table(prefix + "_pdf_" + s.tag + ".csv", xs, ys));

        const auto samples = pdf_samples(cfg, model, static_cast<std::size_t>(pc.trials),
                                         derive_seed(cfg.seed, fnv1a64(prefix + s.tag)));
        std::vector<double> counts(xs.size(), 0.0);
        for (double v : samples)
        {
            const double x = db(v);
            const double k = std::floor((x - pc.sinr_db_min) / step);
            if (k >= 0.0 && k < n_pts)
                counts[static_cast<std::size_t>(k)] += 1.0;
        }
        for (double &c : counts)
            c /= static_cast<double>(samples.size()) * step;
        r.tables.push_back(pdf_table(prefix + "_pdf_" + s.tag + "_mc.csv", xs, counts));

        r.metadata["series"].push_back({{"tag", s.tag},
                                        {"theta_deg", s.theta_deg},
                                        {"phi_deg", s.phi_deg},
                                        {"beam_power", model.beam_power},
                                        {"leakage", model.leakage},
                                        {"a_rx", model.params.a_rx},
                                        {"a_tx", model.params.a_tx},
                                        {"mass", model.params.mass()},
                                        {"kappa", model.params.kappa}});
    }
    return r;
}

} // namespace

Experiment parse_experiment(const std::string &name)
{
    const auto &t = experiment_table();
    const auto it = t.find(name);
    if (it == t.end())
        throw ConfigError("experiment: unknown id '" + name + "'");
    return it->second;
}

std::string experiment_name(Experiment e)
{
    for (const auto &[name, v] : experiment_table())
        if (v == e)
            return name;
    throw std::logic_error("experiment_name: unhandled experiment");
}

const io::Table &ExperimentResult::table(const std::string &file) const
{
    for (const auto &t : tables)
        if (t.file == file)
            return t;
    throw std::out_of_range("result " + experiment + ": no table " + file);
}

DopplerSetup doppler_setup(const ScenarioConfig &cfg)
{
    const auto s1 = cfg.initial_state(1);
    const auto s2 = cfg.initial_state(2);
    DopplerSetup d;
    d.geometry = kinematics::link_geometry(s1.position, s2.position);
    const auto phases = kinematics::los_phase_approximation(d.geometry);
    const double lambda = wavelength(cfg.carrier_hz);
    d.f_d = kinematics::doppler_frequency(s1, s2, phases, lambda);
    // Round-off from cos(pi) leaves ~1e-12 Hz residues on co-moving HAPs.
    if (std::abs(d.f_d) < 1e-6)
        d.f_d = 0.0;
    d.f_d_beam = cfg.beam_doppler_scale * d.f_d;
    d.f_dmax = kinematics::max_doppler(s1, s2, lambda);
    return d;
}

array::BeamWeights rx_weights(const ScenarioConfig &cfg)
{
    return array::beam_weights(cfg.rx_geometry(), deg2rad(cfg.focus_theta_deg), deg2rad(cfg.focus_phi_deg),
                               wavelength(cfg.carrier_hz), cfg.convention);
}

array::BeamWeights tx_weights(const ScenarioConfig &cfg)
{
    return array::beam_weights(cfg.tx_geometry(), deg2rad(cfg.focus_theta_deg), deg2rad(cfg.focus_phi_deg),
                               wavelength(cfg.carrier_hz), cfg.convention);
}

array::GridPeak dense_gain_peak(const ScenarioConfig &cfg, double f_d_beam, double step_deg)
{
    const auto gg = array::beam_gain_grid(rx_weights(cfg), cfg.rx_geometry(), grid_for(cfg, step_deg), cfg.carrier_hz,
                                          f_d_beam);
    return array::grid_peak(gg);
}

PdfModel pdf_model(const ScenarioConfig &cfg, double theta_deg, double phi_deg, double deviation_deg,
                   bool with_doppler)
{
    const auto setup = doppler_setup(cfg);
    const auto rx = cfg.rx_geometry();
    const auto tx = cfg.tx_geometry();
    PdfModel m;
    m.n_c = 2;
    const double f_d = with_doppler ? setup.f_d_beam : 0.0;
    m.beam_power = tx_beam_power(cfg) * rx_beam_power(cfg, rx_weights(cfg), deg2rad(theta_deg), deg2rad(phi_deg), f_d);
    if (with_doppler && setup.f_dmax > 0.0)
    {
        // LoS path along the relative motion: sin(theta_rd) cos(phi_rd) = 1.
        channel::ClusterPathSet los;
        channel::PathParams p;
        p.theta_rd = kPi / 2.0;
        los.paths.push_back(p);
        const auto corr = channel::tap_correlation(los, cfg.multicarrier(), setup.f_dmax, cfg.pdp);
        m.leakage = link::leakage_ratio(corr, 0);
    }
    const double phi_f = deg2rad(cfg.focus_phi_deg);
    const double full = static_cast<double>(tx.n_total()) * rx.n_total();
    m.params.m = cfg.pdf.m;
    m.params.kappa = stats::kappa_const(tx.n_x, tx.n_y) * m.beam_power / full;
    m.params.a_rx = stats::alignment_mass(rx.n_x, deg2rad(deviation_deg), phi_f, cfg.pdf.angular_spread);
    m.params.a_tx = stats::alignment_mass(tx.n_x, 0.0, phi_f, cfg.pdf.angular_spread);
    m.params.noise_scale = 1.0 / undb(cfg.pdf.snr_db);
    m.params.ici_leakage = m.leakage;
    if (!(m.params.kappa > 0.0))
        throw ConfigError("/array_elements: the SINR PDF needs even per-axis counts and nonzero beam power");
    return m;
}

namespace {

double pdf_sample(const ScenarioConfig &cfg, const PdfModel &model, const link::LinkConfig &lc, RandomStream &rng)
{
    const channel::FadingModel fading{channel::FadingModel::Kind::kNakagami, cfg.pdf.m};
    const cplx g_p = fading.draw(rng);
    const cplx g_i = fading.draw(rng);
    channel::ScalarCarrierChannel h{2, CMatrix::Zero(2, 2)};
    h.h(0, 0) = std::sqrt(model.beam_power) * g_p;
    h.h(0, 1) = std::sqrt(model.leakage * model.beam_power) * g_i;
    h.h(1, 1) = 1.0;
    return link::sinr_per_carrier(h, lc)[0];
}

link::LinkConfig pdf_link(const ScenarioConfig &cfg)
{
    return link::LinkConfig::equal_split(2, 2.0 * undb(cfg.pdf.snr_db) * cfg.noise_energy, cfg.noise_energy);
}

} // namespace

std::vector<double> pdf_samples(const ScenarioConfig &cfg, const PdfModel &model, std::size_t n, std::uint64_t seed)
{
    const auto lc = pdf_link(cfg);
    return map_trials(n, seed, [&](RandomStream &rng, std::size_t) { return pdf_sample(cfg, model, lc, rng); });
}

std::vector<double> pdf_samples_serial(const ScenarioConfig &cfg, const PdfModel &model, std::size_t n,
                                       std::uint64_t seed)
{
    const auto lc = pdf_link(cfg);
    return map_trials_serial(n, seed, [&](RandomStream &rng, std::size_t) { return pdf_sample(cfg, model, lc, rng); });
}

stats::TabulatedCdf pdf_cdf_table(const PdfModel &model, std::size_t points)
{
    const auto &p = model.params;
    const double mean = p.kappa / p.noise_scale;
    double lo = mean;
    if (p.ici_leakage > 0.0)
        lo = std::min(lo, 1.0 / p.ici_leakage);
    lo *= 1e-7;
    const double hi = mean * 60.0;
    std::vector<double> x(points), f(points);
    for (std::size_t i = 0; i < points; ++i)
    {
        x[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(points - 1));
        f[i] = stats::sinr_cdf(x[i], p, model.n_c) / p.mass();
    }
    return stats::TabulatedCdf(std::move(x), std::move(f));
}

ExperimentResult run_experiment(const ScenarioConfig &cfg, Experiment e)
{
    cfg.validate();
    switch (e)
    {
    case Experiment::kMobilityTrace:
        return run_mobility(cfg);
    case Experiment::kBeamGainGrid:
        return run_beam_gain(cfg);
    case Experiment::kSinrSweep:
        return run_link_sweep(cfg, false);
    case Experiment::kCapacitySweep:
        return run_link_sweep(cfg, true);
    case Experiment::kDopplerShiftGrid:
        return run_doppler_grid(cfg);
    case Experiment::kPdfCurves:
        return run_pdf(cfg);
    }
    throw ConfigError("experiment: invalid id");
}

std::vector<ExperimentResult> sweep(const ScenarioConfig &cfg, const std::string &pointer,
                                    const std::vector<json> &values, Experiment e)
{
    std::vector<ExperimentResult> out;
    if (values.empty())
        return out;
    const json doc = to_json(cfg);
    json::json_pointer ptr;
    try
    {
        ptr = json::json_pointer(pointer);
    }
    catch (const json::exception &)
    {
        throw ConfigError(pointer + ": not a valid parameter path");
    }
    if (pointer.empty() || !doc.contains(ptr))
        throw ConfigError(pointer + ": parameter path does not resolve in the configuration");
    for (const auto &v : values)
    {
        json d = doc;
        d[ptr] = v;
        ScenarioConfig c = from_json(d);
        c.seed = derive_seed(cfg.seed, fnv1a64(v.dump()));
        auto r = run_experiment(c, e);
        r.metadata["sweep"] = {{"path", pointer}, {"value", v}};
        out.push_back(std::move(r));
    }
    return out;
}

const std::vector<int> &figure_ids()
{
    static const std::vector<int> ids{1, 2, 3, 5, 6, 7, 8, 9, 10, 11};
    return ids;
}

Experiment figure_experiment(int figure)
{
    switch (figure)
    {
    case 1:
    case 2:
    case 3:
        return Experiment::kMobilityTrace;
    case 5:
        return Experiment::kBeamGainGrid;
    case 6:
        return Experiment::kSinrSweep;
    case 7:
        return Experiment::kCapacitySweep;
    case 8:
    case 9:
        return Experiment::kDopplerShiftGrid;
    case 10:
    case 11:
        return Experiment::kPdfCurves;
    default:
        throw ConfigError("--figure: expected one of 1,2,3,5,6,7,8,9,10,11");
    }
}

ScenarioConfig figure_config(int figure)
{
    figure_experiment(figure);
    return preset_config(figure == 8 || figure == 9 || figure == 11 ? "mobile" : "table1");
}

ExperimentResult reproduce(const ScenarioConfig &cfg, int figure)
{
    auto r = run_experiment(cfg, figure_experiment(figure));
    const std::string prefix = "fig" + std::to_string(figure) + "_";
    std::vector<io::Table> kept;
    for (auto &t : r.tables)
        if (t.file.rfind(prefix, 0) == 0)
            kept.push_back(std::move(t));
    if (kept.empty())
        throw ConfigError("--figure " + std::to_string(figure) + ": the configuration does not produce this figure" +
                          (figure == 11 ? " (needs nonzero Doppler, e.g. preset \"mobile\")"
                                        : figure == 10 ? " (needs zero Doppler, e.g. preset \"table1\")" : ""));
    r.tables = std::move(kept);
    r.metadata["figure"] = figure;
    return r;
}

} // namespace hapsim::harness
