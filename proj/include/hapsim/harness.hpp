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
#include <vector>

#include <json.hpp>

#include "hapsim/array.hpp"
#include "hapsim/config.hpp"
#include "hapsim/io.hpp"
#include "hapsim/kinematics.hpp"
#include "hapsim/stats.hpp"

namespace hapsim::harness {

enum class Experiment
{
    kMobilityTrace,
    kBeamGainGrid,
    kSinrSweep,
    kCapacitySweep,
    kDopplerShiftGrid,
    kPdfCurves,
};

Experiment parse_experiment(const std::string &name);
std::string experiment_name(Experiment e);

struct ExperimentResult
{
    std::string experiment;
    std::vector<io::Table> tables;
    nlohmann::json metadata;

    const io::Table &table(const std::string &file) const;
};

ExperimentResult run_experiment(const ScenarioConfig &cfg, Experiment e);

// One result per value; `pointer` is a JSON pointer into the config
// document (e.g. "/array_elements"). Each run's seed is derived from the
// base seed and a hash of the value.
std::vector<ExperimentResult> sweep(const ScenarioConfig &cfg, const std::string &pointer,
                                    const std::vector<nlohmann::json> &values, Experiment e);

const std::vector<int> &figure_ids();
Experiment figure_experiment(int figure);
// Embedded configuration used when no config file is given.
ScenarioConfig figure_config(int figure);
// Runs the figure's experiment and keeps the tables named "fig<id>_*".
ExperimentResult reproduce(const ScenarioConfig &cfg, int figure);

// Motion-induced frequency offsets of the initial HAP states.
struct DopplerSetup
{
    kinematics::LinkGeometry geometry;
    double f_d = 0.0;      // LoS Doppler, Hz
    double f_d_beam = 0.0; // offset applied to the array factor, Hz
    double f_dmax = 0.0;   // (V1 + V2) / lambda, Hz
};

DopplerSetup doppler_setup(const ScenarioConfig &cfg);

array::BeamWeights rx_weights(const ScenarioConfig &cfg);
array::BeamWeights tx_weights(const ScenarioConfig &cfg);

// Peak of the closed-form |g| on a grid of the given step.
array::GridPeak dense_gain_peak(const ScenarioConfig &cfg, double f_d_beam, double step_deg);

// Scalar link model behind the SINR PDF experiment.
struct PdfModel
{
    double beam_power = 0.0; // matched-filter power gain G at the arrival angle
    double leakage = 0.0;    // aggregate ICI power relative to the desired path
    stats::PdfParams params;
    int n_c = 2;
};

PdfModel pdf_model(const ScenarioConfig &cfg, double theta_deg, double phi_deg, double deviation_deg,
                   bool with_doppler);

// Monte-Carlo SINR samples of the model: Nakagami-m desired and aggregate
// interferer gains through the link SINR.
std::vector<double> pdf_samples(const ScenarioConfig &cfg, const PdfModel &model, std::size_t n, std::uint64_t seed);
std::vector<double> pdf_samples_serial(const ScenarioConfig &cfg, const PdfModel &model, std::size_t n,
                                       std::uint64_t seed);

// CDF of the model's normalised analytic SINR density, tabulated in log space.
stats::TabulatedCdf pdf_cdf_table(const PdfModel &model, std::size_t points = 2000);

} // namespace hapsim::harness
