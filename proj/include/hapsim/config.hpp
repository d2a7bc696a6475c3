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

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hapsim/array.hpp"
#include "hapsim/channel.hpp"
#include "hapsim/mobility.hpp"

namespace hapsim {

struct HapConfig
{
    Vec3 position = Vec3(0.0, 0.0, 20000.0); // m
    double speed_mps = 100.0;
    double dir_az_deg = 0.0;
    double dir_el_deg = 0.0;
    mobility::MobilityParams mobility;
};

// Zero counts mean "derive from array_elements".
struct ArrayOverride
{
    int n_x = 0;
    int n_y = 0;
};

struct SweepConfig
{
    std::vector<double> snr_db{-10, -5, 0, 5, 10, 15, 20};
    std::vector<double> deviations_deg{0, 2, 5};
    std::vector<int> array_sizes{16, 32, 64};
    int trials = 1000;
    bool include_doppler = false;
};

struct GridConfig
{
    double theta_min_deg = 0.0;
    double theta_max_deg = 90.0;
    double phi_min_deg = 0.0;
    double phi_max_deg = 90.0;
    double beam_step_deg = 0.25;
    double doppler_step_deg = 0.5;
    double dense_step_deg = 0.05;
    int doppler_trials = 200;
    double snr_db = 10.0;
};

struct PdfConfig
{
    double m = 3.0;
    double snr_db = 0.0;
    double angular_spread = 1.0;
    std::vector<double> deviations_deg{0, 2, 5};
    int trials = 10000;
    int points = 200;
    double sinr_db_min = -10.0;
    double sinr_db_max = 40.0;
};

struct ScenarioConfig
{
    std::string preset = "table1";
    double max_d3d_m = 500.0;
    double carrier_hz = 60e9;
    int n_carriers = 4;
    int n_taps = 4;
    double subcarrier_spacing_hz = 240e3;
    int clusters = 4;
    int paths_per_cluster = 4;
    channel::PowerDelayProfile pdp;

    int array_elements = 16;
    ArrayOverride tx_array;
    ArrayOverride rx_array;
    double focus_theta_deg = 60.0;
    double focus_phi_deg = 30.0;
    array::PhaseConvention convention = array::PhaseConvention::kSeparableSine;
    array::AxisCountMode axis_mode = array::AxisCountMode::kPerAxis;

    HapConfig hap1;
    HapConfig hap2;
    double duration_s = 100.0;
    double dt_s = 1.0;

    double noise_energy = 1.0;
    // Multiplies the Doppler offset seen by the array factor (1 = physical).
    double beam_doppler_scale = 1.0;

    SweepConfig sweep;
    GridConfig grid;
    PdfConfig pdf;

    std::uint64_t seed = 1;

    void validate() const;

    array::ArrayGeometry tx_geometry() const;
    array::ArrayGeometry rx_geometry() const;
    channel::MulticarrierSpec multicarrier() const;
    mobility::HapState initial_state(int hap) const;
};

// 16 -> 4x4, 32 -> 8x4, 64 -> 8x8: n_y is the largest divisor <= sqrt(n).
std::pair<int, int> array_shape(int n_total);

ScenarioConfig preset_config(const std::string &name);
const std::vector<std::string> &preset_names();

nlohmann::json to_json(const ScenarioConfig &cfg);
// Starts from the preset named in the document (default "table1"), then
// applies every present field. Errors are collected with JSON paths.
ScenarioConfig from_json(const nlohmann::json &doc);
ScenarioConfig load_config(const std::string &path);

std::uint64_t config_hash(const ScenarioConfig &cfg);

} // namespace hapsim
