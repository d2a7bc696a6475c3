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

#include "hapsim/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hapsim/random.hpp"

namespace hapsim {

using nlohmann::json;

std::pair<int, int> array_shape(int n_total)
{
    if (n_total < 1)
        throw ConfigError("/array_elements: must be >= 1");
    int n_y = 1;
    for (int d = 1; static_cast<long long>(d) * d <= n_total; ++d)
        if (n_total % d == 0)
            n_y = d;
    return {n_total / n_y, n_y};
}

namespace {


ScenarioConfig table1()
{
    ScenarioConfig c;
    c.preset = "table1";
    c.hap1.position = Vec3(0.0, 0.0, 20000.0);
    c.hap1.mobility.alpha_v = 0.5919;
    c.hap1.mobility.alpha_da = 0.5919;
    c.hap1.mobility.alpha_de = 0.5919;
    c.hap1.mobility.rotation_rate = 0.02;
    c.hap2.position = Vec3(300.0, 0.0, 20000.0);
    c.hap2.mobility.alpha_v = 0.3718;
    c.hap2.mobility.alpha_da = 0.3718;
    c.hap2.mobility.alpha_de = 0.3718;
    c.hap2.mobility.rotation_rate = 0.02;
    return c;
}

ScenarioConfig mobile()
{
    ScenarioConfig c = table1();
    c.preset = "mobile";
    // Head-on approach: HAP-1 flies east, HAP-2 flies west towards it.
    c.hap2.position = Vec3(400.0, 0.0, 20000.0);
    c.hap2.dir_az_deg = 180.0;
    c.hap2.mobility.mu_da = kPi;
    c.beam_doppler_scale = 2.4e5;
    return c;
}

const char *convention_name(array::PhaseConvention c)
{
    return c == array::PhaseConvention::kSeparableSine ? "separable" : "direction_cosine";
}

const char *axis_name(array::AxisCountMode m) { return m == array::AxisCountMode::kPerAxis ? "per_axis" : "total"; }

const char *pdp_name(channel::PowerDelayProfile::Kind k)
{
    return k == channel::PowerDelayProfile::Kind::kUniform ? "uniform" : "exponential";
}

json hap_json(const HapConfig &h)
{
    const auto &m = h.mobility;
    return json{
        {"position_m", {h.position.x(), h.position.y(), h.position.z()}},
        {"speed_mps", h.speed_mps},
        {"dir_az_deg", h.dir_az_deg},
        {"dir_el_deg", h.dir_el_deg},
        {"mobility",
         {{"alpha_v", m.alpha_v},
          {"alpha_da", m.alpha_da},
          {"alpha_de", m.alpha_de},
          {"mu_v_mps", m.mu_v},
          {"mu_da_deg", rad2deg(m.mu_da)},
          {"mu_de_deg", rad2deg(m.mu_de)},
          {"noise_std", m.noise_std},
          {"rotation_rate_hz", m.rotation_rate}}},
    };
}

// Reads optional fields, recording type errors and unknown keys by path.
class Reader
{
  public:
    explicit Reader(std::vector<std::string> &errs) : errs_(errs) {}

    bool object(const json &j, const std::string &path, std::initializer_list<const char *> allowed)
    {
        if (!j.is_object())
        {
            errs_.push_back(path + ": expected an object");
            return false;
        }
        for (const auto &item : j.items())
        {
            bool ok = false;
            for (const char *a : allowed)
                ok = ok || item.key() == a;
            if (!ok)
                errs_.push_back(path + "/" + item.key() + ": unknown field");
        }
        return true;
    }

    template <typename T>
    void get(const json &j, const std::string &path, const char *key, T &out)
    {
        if (!j.contains(key))
            return;
        try
        {
            out = j.at(key).get<T>();
        }
        catch (const json::exception &)
        {
            errs_.push_back(path + "/" + key + ": wrong type (" + std::string(j.at(key).type_name()) + ")");
        }
    }

    void degrees(const json &j, const std::string &path, const char *key, double &out_rad)
    {
        double deg = rad2deg(out_rad);
        get(j, path, key, deg);
        out_rad = deg2rad(deg);
    }

    void vec3(const json &j, const std::string &path, const char *key, Vec3 &out)
    {
        std::vector<double> v{out.x(), out.y(), out.z()};
        get(j, path, key, v);
        if (v.size() != 3)
        {
            errs_.push_back(path + "/" + key + ": expected 3 numbers");
            return;
        }
        out = Vec3(v[0], v[1], v[2]);
    }

  private:
    std::vector<std::string> &errs_;
};

void read_hap(Reader &r, const json &j, const std::string &path, HapConfig &h)
{
    if (!r.object(j, path, {"position_m", "speed_mps", "dir_az_deg", "dir_el_deg", "mobility"}))
        return;
    r.vec3(j, path, "position_m", h.position);
    r.get(j, path, "speed_mps", h.speed_mps);
    r.get(j, path, "dir_az_deg", h.dir_az_deg);
    r.get(j, path, "dir_el_deg", h.dir_el_deg);
    if (j.contains("mobility"))
    {
        const auto &m = j.at("mobility");
        const std::string mp = path + "/mobility";
        if (r.object(m, mp,
                     {"alpha_v", "alpha_da", "alpha_de", "mu_v_mps", "mu_da_deg", "mu_de_deg", "noise_std",
                      "rotation_rate_hz"}))
        {
            r.get(m, mp, "alpha_v", h.mobility.alpha_v);
            r.get(m, mp, "alpha_da", h.mobility.alpha_da);
            r.get(m, mp, "alpha_de", h.mobility.alpha_de);
            r.get(m, mp, "mu_v_mps", h.mobility.mu_v);
            r.degrees(m, mp, "mu_da_deg", h.mobility.mu_da);
            r.degrees(m, mp, "mu_de_deg", h.mobility.mu_de);
            r.get(m, mp, "noise_std", h.mobility.noise_std);
            r.get(m, mp, "rotation_rate_hz", h.mobility.rotation_rate);
        }
    }
}

void check_hap(const HapConfig &h, const std::string &path, std::vector<std::string> &errs)
{
    if (!h.position.allFinite())
        errs.push_back(path + "/position_m: must be finite");
    if (!(h.speed_mps >= 0.0))
        errs.push_back(path + "/speed_mps: must be >= 0");
    for (const auto &[name, a] : {std::pair{"alpha_v", h.mobility.alpha_v}, std::pair{"alpha_da", h.mobility.alpha_da},
                                  std::pair{"alpha_de", h.mobility.alpha_de}})
        if (!(a >= 0.0 && a <= 1.0))
            errs.push_back(path + "/mobility/" + name + ": must lie in [0, 1]");
    if (!(h.mobility.mu_v >= 0.0))
        errs.push_back(path + "/mobility/mu_v_mps: must be >= 0");
    if (!(h.mobility.noise_std >= 0.0))
        errs.push_back(path + "/mobility/noise_std: must be >= 0");
    if (!(h.mobility.rotation_rate >= 0.0))
        errs.push_back(path + "/mobility/rotation_rate_hz: must be >= 0");
    if (std::abs(h.dir_az_deg) > 180.0 || std::abs(h.dir_el_deg) > 180.0)
        errs.push_back(path + ": direction angles must lie in [-180, 180] deg");
}

} // namespace

const std::vector<std::string> &preset_names()
{
    static const std::vector<std::string> names{"table1", "mobile"};
    return names;
}

ScenarioConfig preset_config(const std::string &name)
{
    if (name == "table1")
        return table1();
    if (name == "mobile")
        return mobile();
    throw ConfigError("/preset: unknown preset '" + name + "'");
}

void ScenarioConfig::validate() const
{
    std::vector<std::string> errs;
    if (!(max_d3d_m > 0.0))
        errs.push_back("/max_d3d_m: must be > 0");
    if (!(carrier_hz > 0.0))
        errs.push_back("/carrier_hz: must be > 0");
    if (n_carriers < 1)
        errs.push_back("/n_carriers: must be >= 1");
    if (n_taps < 1)
        errs.push_back("/n_taps: must be >= 1");
    if (!(subcarrier_spacing_hz > 0.0))
        errs.push_back("/subcarrier_spacing_hz: must be > 0");
    if (clusters < 1)
        errs.push_back("/clusters: must be >= 1");
    if (paths_per_cluster < 1)
        errs.push_back("/paths_per_cluster: must be >= 1");
    if (!(pdp.decay_taps > 0.0))
        errs.push_back("/pdp/decay_taps: must be > 0");
    if (array_elements < 1)
        errs.push_back("/array_elements: must be >= 1");
    for (const auto &[name, o] : {std::pair{"/tx_array", tx_array}, std::pair{"/rx_array", rx_array}})
    {
        const bool derived = o.n_x == 0 && o.n_y == 0;
        if (!derived && (o.n_x < 1 || o.n_y < 1))
            errs.push_back(std::string(name) + ": n_x and n_y must both be >= 1 (or both 0)");
    }
    if (std::abs(focus_theta_deg) > 180.0 || std::abs(focus_phi_deg) > 180.0)
        errs.push_back("/focus_deg: angles must lie in [-180, 180]");
    check_hap(hap1, "/hap1", errs);
    check_hap(hap2, "/hap2", errs);
    if (hap1.position.allFinite() && hap2.position.allFinite() && max_d3d_m > 0.0 &&
        (hap1.position - hap2.position).norm() > max_d3d_m)
        errs.push_back("/hap2/position_m: initial slant distance exceeds max_d3d_m");
    if (!(dt_s > 0.0))
        errs.push_back("/dt_s: must be > 0");
    if (!(duration_s >= dt_s))
        errs.push_back("/duration_s: must be >= dt_s");
    if (!(noise_energy > 0.0))
        errs.push_back("/noise_energy: must be > 0");
    if (!(beam_doppler_scale >= 0.0))
        errs.push_back("/beam_doppler_scale: must be >= 0");
    if (sweep.trials < 1)
        errs.push_back("/sweep/trials: must be >= 1");
    for (int n : sweep.array_sizes)
        if (n < 1)
        {
            errs.push_back("/sweep/array_sizes: sizes must be >= 1");
            break;
        }
    if (!(grid.beam_step_deg > 0.0))
        errs.push_back("/grid/beam_step_deg: must be > 0");
    if (!(grid.doppler_step_deg > 0.0))
        errs.push_back("/grid/doppler_step_deg: must be > 0");
    if (!(grid.dense_step_deg > 0.0))
        errs.push_back("/grid/dense_step_deg: must be > 0");
    if (grid.theta_max_deg < grid.theta_min_deg || grid.phi_max_deg < grid.phi_min_deg)
        errs.push_back("/grid: max must be >= min");
    if (grid.doppler_trials < 1)
        errs.push_back("/grid/doppler_trials: must be >= 1");
    if (!(pdf.m >= 0.5))
        errs.push_back("/pdf/m: Nakagami m must be >= 0.5");
    if (!(pdf.angular_spread > 0.0))
        errs.push_back("/pdf/angular_spread: must be > 0");
    if (pdf.trials < 1)
        errs.push_back("/pdf/trials: must be >= 1");
    if (pdf.points < 2)
        errs.push_back("/pdf/points: must be >= 2");
    if (!(pdf.sinr_db_max > pdf.sinr_db_min))
        errs.push_back("/pdf: sinr_db_max must exceed sinr_db_min");
    if (!errs.empty())
        throw ConfigError(std::move(errs));
}

namespace {

array::ArrayGeometry geometry(int total, const ArrayOverride &o, double f_c)
{
    if (o.n_x > 0 && o.n_y > 0)
        return array::ArrayGeometry::half_wavelength(o.n_x, o.n_y, f_c);
    const auto [nx, ny] = array_shape(total);
    return array::ArrayGeometry::half_wavelength(nx, ny, f_c);
}

} // namespace

array::ArrayGeometry ScenarioConfig::tx_geometry() const { return geometry(array_elements, tx_array, carrier_hz); }
array::ArrayGeometry ScenarioConfig::rx_geometry() const { return geometry(array_elements, rx_array, carrier_hz); }

channel::MulticarrierSpec ScenarioConfig::multicarrier() const
{
    return {n_carriers, subcarrier_spacing_hz, n_taps};
}

mobility::HapState ScenarioConfig::initial_state(int hap) const
{
    const HapConfig &h = hap == 1 ? hap1 : hap2;
    return mobility::make_state(h.position, h.speed_mps, deg2rad(h.dir_az_deg), deg2rad(h.dir_el_deg), 0.0);
}

json to_json(const ScenarioConfig &c)
{
    return json{
        {"preset", c.preset},
        {"seed", c.seed},
        {"max_d3d_m", c.max_d3d_m},
        {"carrier_hz", c.carrier_hz},
        {"n_carriers", c.n_carriers},
        {"n_taps", c.n_taps},
        {"subcarrier_spacing_hz", c.subcarrier_spacing_hz},
        {"clusters", c.clusters},
        {"paths_per_cluster", c.paths_per_cluster},
        {"pdp", {{"kind", pdp_name(c.pdp.kind)}, {"decay_taps", c.pdp.decay_taps}}},
        {"array_elements", c.array_elements},
        {"tx_array", {{"n_x", c.tx_array.n_x}, {"n_y", c.tx_array.n_y}}},
        {"rx_array", {{"n_x", c.rx_array.n_x}, {"n_y", c.rx_array.n_y}}},
        {"focus_deg", {{"theta", c.focus_theta_deg}, {"phi", c.focus_phi_deg}}},
        {"phase_convention", convention_name(c.convention)},
        {"axis_count", axis_name(c.axis_mode)},
        {"hap1", hap_json(c.hap1)},
        {"hap2", hap_json(c.hap2)},
        {"duration_s", c.duration_s},
        {"dt_s", c.dt_s},
        {"noise_energy", c.noise_energy},
        {"beam_doppler_scale", c.beam_doppler_scale},
        {"sweep",
         {{"snr_db", c.sweep.snr_db},
          {"deviations_deg", c.sweep.deviations_deg},
          {"array_sizes", c.sweep.array_sizes},
          {"trials", c.sweep.trials},
          {"include_doppler", c.sweep.include_doppler}}},
        {"grid",
         {{"theta_min_deg", c.grid.theta_min_deg},
          {"theta_max_deg", c.grid.theta_max_deg},
          {"phi_min_deg", c.grid.phi_min_deg},
          {"phi_max_deg", c.grid.phi_max_deg},
          {"beam_step_deg", c.grid.beam_step_deg},
          {"doppler_step_deg", c.grid.doppler_step_deg},
          {"dense_step_deg", c.grid.dense_step_deg},
          {"doppler_trials", c.grid.doppler_trials},
          {"snr_db", c.grid.snr_db}}},
        {"pdf",
         {{"m", c.pdf.m},
          {"snr_db", c.pdf.snr_db},
          {"angular_spread", c.pdf.angular_spread},
          {"deviations_deg", c.pdf.deviations_deg},
          {"trials", c.pdf.trials},
          {"points", c.pdf.points},
          {"sinr_db_min", c.pdf.sinr_db_min},
          {"sinr_db_max", c.pdf.sinr_db_max}}},
    };
}

ScenarioConfig from_json(const json &doc)
{
    std::vector<std::string> errs;
    if (!doc.is_object())
        throw ConfigError("/: expected a JSON object");
    std::string preset = "table1";
    if (doc.contains("preset"))
    {
        if (!doc.at("preset").is_string())
            throw ConfigError("/preset: wrong type");
        preset = doc.at("preset").get<std::string>();
    }
    ScenarioConfig c = preset_config(preset);
    Reader r(errs);
    r.object(doc, "",
             {"preset", "seed", "max_d3d_m", "carrier_hz", "n_carriers", "n_taps", "subcarrier_spacing_hz", "clusters",
              "paths_per_cluster", "pdp", "array_elements", "tx_array", "rx_array", "focus_deg", "phase_convention",
              "axis_count", "hap1", "hap2", "duration_s", "dt_s", "noise_energy", "beam_doppler_scale", "sweep",
              "grid", "pdf"});
    r.get(doc, "", "seed", c.seed);
    r.get(doc, "", "max_d3d_m", c.max_d3d_m);
    r.get(doc, "", "carrier_hz", c.carrier_hz);
    r.get(doc, "", "n_carriers", c.n_carriers);
    r.get(doc, "", "n_taps", c.n_taps);
    r.get(doc, "", "subcarrier_spacing_hz", c.subcarrier_spacing_hz);
    r.get(doc, "", "clusters", c.clusters);
    r.get(doc, "", "paths_per_cluster", c.paths_per_cluster);
    if (doc.contains("pdp") && r.object(doc.at("pdp"), "/pdp", {"kind", "decay_taps"}))
    {
        std::string kind = pdp_name(c.pdp.kind);
        r.get(doc.at("pdp"), "/pdp", "kind", kind);
        if (kind == "uniform")
            c.pdp.kind = channel::PowerDelayProfile::Kind::kUniform;
        else if (kind == "exponential")
            c.pdp.kind = channel::PowerDelayProfile::Kind::kExponential;
        else
            errs.push_back("/pdp/kind: expected 'uniform' or 'exponential'");
        r.get(doc.at("pdp"), "/pdp", "decay_taps", c.pdp.decay_taps);
    }
    r.get(doc, "", "array_elements", c.array_elements);
    for (const auto &[key, o] : {std::pair{"tx_array", &c.tx_array}, std::pair{"rx_array", &c.rx_array}})
        if (doc.contains(key) && r.object(doc.at(key), std::string("/") + key, {"n_x", "n_y"}))
        {
            r.get(doc.at(key), std::string("/") + key, "n_x", o->n_x);
            r.get(doc.at(key), std::string("/") + key, "n_y", o->n_y);
        }
    if (doc.contains("focus_deg") && r.object(doc.at("focus_deg"), "/focus_deg", {"theta", "phi"}))
    {
        r.get(doc.at("focus_deg"), "/focus_deg", "theta", c.focus_theta_deg);
        r.get(doc.at("focus_deg"), "/focus_deg", "phi", c.focus_phi_deg);
    }
    if (doc.contains("phase_convention"))
    {
        std::string s;
        r.get(doc, "", "phase_convention", s);
        if (s == "separable")
            c.convention = array::PhaseConvention::kSeparableSine;
        else if (s == "direction_cosine")
            c.convention = array::PhaseConvention::kDirectionCosine;
        else
            errs.push_back("/phase_convention: expected 'separable' or 'direction_cosine'");
    }
    if (doc.contains("axis_count"))
    {
        std::string s;
        r.get(doc, "", "axis_count", s);
        if (s == "per_axis")
            c.axis_mode = array::AxisCountMode::kPerAxis;
        else if (s == "total")
            c.axis_mode = array::AxisCountMode::kTotalCount;
        else
            errs.push_back("/axis_count: expected 'per_axis' or 'total'");
    }
    if (doc.contains("hap1"))
        read_hap(r, doc.at("hap1"), "/hap1", c.hap1);
    if (doc.contains("hap2"))
        read_hap(r, doc.at("hap2"), "/hap2", c.hap2);
    r.get(doc, "", "duration_s", c.duration_s);
    r.get(doc, "", "dt_s", c.dt_s);
    r.get(doc, "", "noise_energy", c.noise_energy);
    r.get(doc, "", "beam_doppler_scale", c.beam_doppler_scale);
    if (doc.contains("sweep") &&
        r.object(doc.at("sweep"), "/sweep", {"snr_db", "deviations_deg", "array_sizes", "trials", "include_doppler"}))
    {
        const auto &s = doc.at("sweep");
        r.get(s, "/sweep", "snr_db", c.sweep.snr_db);
        r.get(s, "/sweep", "deviations_deg", c.sweep.deviations_deg);
        r.get(s, "/sweep", "array_sizes", c.sweep.array_sizes);
        r.get(s, "/sweep", "trials", c.sweep.trials);
        r.get(s, "/sweep", "include_doppler", c.sweep.include_doppler);
    }
    if (doc.contains("grid") &&
        r.object(doc.at("grid"), "/grid",
                 {"theta_min_deg", "theta_max_deg", "phi_min_deg", "phi_max_deg", "beam_step_deg", "doppler_step_deg",
                  "dense_step_deg", "doppler_trials", "snr_db"}))
    {
        const auto &g = doc.at("grid");
        r.get(g, "/grid", "theta_min_deg", c.grid.theta_min_deg);
        r.get(g, "/grid", "theta_max_deg", c.grid.theta_max_deg);
        r.get(g, "/grid", "phi_min_deg", c.grid.phi_min_deg);
        r.get(g, "/grid", "phi_max_deg", c.grid.phi_max_deg);
        r.get(g, "/grid", "beam_step_deg", c.grid.beam_step_deg);
        r.get(g, "/grid", "doppler_step_deg", c.grid.doppler_step_deg);
        r.get(g, "/grid", "dense_step_deg", c.grid.dense_step_deg);
        r.get(g, "/grid", "doppler_trials", c.grid.doppler_trials);
        r.get(g, "/grid", "snr_db", c.grid.snr_db);
    }
    if (doc.contains("pdf") &&
        r.object(doc.at("pdf"), "/pdf",
                 {"m", "snr_db", "angular_spread", "deviations_deg", "trials", "points", "sinr_db_min", "sinr_db_max"}))
    {
        const auto &p = doc.at("pdf");
        r.get(p, "/pdf", "m", c.pdf.m);
        r.get(p, "/pdf", "snr_db", c.pdf.snr_db);
        r.get(p, "/pdf", "angular_spread", c.pdf.angular_spread);
        r.get(p, "/pdf", "deviations_deg", c.pdf.deviations_deg);
        r.get(p, "/pdf", "trials", c.pdf.trials);
        r.get(p, "/pdf", "points", c.pdf.points);
        r.get(p, "/pdf", "sinr_db_min", c.pdf.sinr_db_min);
        r.get(p, "/pdf", "sinr_db_max", c.pdf.sinr_db_max);
    }
    if (!errs.empty())
        throw ConfigError(std::move(errs));
    c.validate();
    return c;
}

ScenarioConfig load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError(path + ": cannot open config file");
    json doc;
    try
    {
        doc = json::parse(in);
    }
    catch (const json::parse_error &e)
    {
        throw ConfigError(path + ": invalid JSON: " + e.what());
    }
    try
    {
        return from_json(doc);
    }
    catch (const ConfigError &e)
    {
        std::vector<std::string> fields;
        for (const auto &f : e.fields())
            fields.push_back(path + ":" + f);
        throw ConfigError(std::move(fields));
    }
}

std::uint64_t config_hash(const ScenarioConfig &cfg) { return fnv1a64(to_json(cfg).dump()); }

} // namespace hapsim
