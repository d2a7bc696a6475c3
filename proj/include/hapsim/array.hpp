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
#include <vector>

#include "hapsim/common.hpp"

namespace hapsim::array {

// How the two per-axis phase progressions are derived from (theta, phi).
//   kDirectionCosine: u = sin(theta) cos(phi), v = sin(theta) sin(phi)
//   kSeparableSine:   u = sin(theta),          v = sin(phi)
// Steering vectors, weights and both gain evaluations take the convention
// explicitly; mixing conventions between weights and queries is an error.
enum class PhaseConvention
{
    kDirectionCosine,
    kSeparableSine,
};

// Number of elements used in each Dirichlet factor of the closed form.
enum class AxisCountMode
{
    kPerAxis,    // n_x in the x factor, n_y in the y factor
    kTotalCount, // n_total in both factors, rescaled so the peak is n_total
};

struct ArrayGeometry
{
    int n_x = 4;
    int n_y = 4;
    double d_x = 0.0; // m
    double d_y = 0.0; // m

    int n_total() const { return n_x * n_y; }
    void validate() const;

    static ArrayGeometry half_wavelength(int n_x, int n_y, double carrier_hz);
};

struct SpatialTerms
{
    double u = 0.0;
    double v = 0.0;
};

SpatialTerms spatial_terms(PhaseConvention conv, double theta, double phi);

// Kronecker order: entry (n, m) sits at index n * n_y + m.
struct SteeringVector
{
    CVector entries;
};

struct BeamWeights
{
    CMatrix columns; // n_total x n_rf, unit-modulus entries
    double theta_f = 0.0;
    double phi_f = 0.0;
    double design_frequency = 0.0; // c / lambda_c
    PhaseConvention convention = PhaseConvention::kDirectionCosine;

    CVector column(int rf = 0) const { return columns.col(rf); }
};

SteeringVector steering_vector(const ArrayGeometry &geom, double theta, double phi, double f,
                               PhaseConvention conv = PhaseConvention::kDirectionCosine);

BeamWeights beam_weights(const ArrayGeometry &geom, double theta_f, double phi_f, double lambda_c,
                         PhaseConvention conv = PhaseConvention::kDirectionCosine, int n_rf = 1);

// W^H a(theta, phi, f) as the explicit double sum over elements.
cplx beam_gain_sum(const BeamWeights &weights, const ArrayGeometry &geom, double theta, double phi, double f,
                   int rf = 0);

// Product of per-axis Dirichlet kernels with offsets
//   mu_x = (f_c + f_d) u(theta, phi) - f_c u(theta_f, phi_f)
//   mu_y = (f_c + f_d) v(theta, phi) - f_c v(theta_f, phi_f)
cplx beam_gain_closed(const BeamWeights &weights, const ArrayGeometry &geom, double theta, double phi, double f_c,
                      double f_d, AxisCountMode mode = AxisCountMode::kPerAxis);

// sum_{n=0}^{count-1} exp(-j n psi), evaluated in closed form.
cplx dirichlet_sum(int count, double psi);

// cos^2(pi N_x theta / 2) cos^2(pi N_y phi / 2) inside |theta| <= 1/N_x,
// |phi| <= 1/N_y, zero outside.
double approx_beam_gain(const ArrayGeometry &geom, double theta, double phi);

cplx effective_channel(const BeamWeights &weights, const SteeringVector &steering, int rf = 0);

// Angle grid in degrees; value i is min + i * step.
struct AngleGrid
{
    std::vector<double> theta_deg;
    std::vector<double> phi_deg;

    static AngleGrid uniform(double theta_min, double theta_max, double phi_min, double phi_max, double step);
    std::size_t size() const { return theta_deg.size() * phi_deg.size(); }
};

// |g| over the grid, row-major in theta (outer) then phi.
struct GainGrid
{
    AngleGrid grid;
    std::vector<double> gain_abs;

    double at(std::size_t i_theta, std::size_t i_phi) const { return gain_abs[i_theta * grid.phi_deg.size() + i_phi]; }
};

struct GridPeak
{
    double theta_deg = 0.0;
    double phi_deg = 0.0;
    double value = 0.0;
};

// Closed-form |g| on a grid; OpenMP over theta rows.
GainGrid beam_gain_grid(const BeamWeights &weights, const ArrayGeometry &geom, const AngleGrid &grid, double f_c,
                        double f_d);
GainGrid beam_gain_grid_serial(const BeamWeights &weights, const ArrayGeometry &geom, const AngleGrid &grid,
                               double f_c, double f_d);

// First maximum in row-major order.
GridPeak grid_peak(const GainGrid &g);

} // namespace hapsim::array
