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

#include "hapsim/array.hpp"

#include <omp.h>

#include <cmath>
#include <string>

namespace hapsim::array {

void ArrayGeometry::validate() const
{
    std::vector<std::string> errs;
    if (n_x < 1)
        errs.push_back("n_x: must be >= 1");
    if (n_y < 1)
        errs.push_back("n_y: must be >= 1");
    if (!(d_x > 0.0))
        errs.push_back("d_x: must be > 0");
    if (!(d_y > 0.0))
        errs.push_back("d_y: must be > 0");
    if (!errs.empty())
        throw ConfigError(std::move(errs));
}

ArrayGeometry ArrayGeometry::half_wavelength(int n_x, int n_y, double carrier_hz)
{
    if (!(carrier_hz > 0.0))
        throw ConfigError("carrier_hz: must be > 0");
    const double d = 0.5 * wavelength(carrier_hz);
    ArrayGeometry g{n_x, n_y, d, d};
    g.validate();
    return g;
}

SpatialTerms spatial_terms(PhaseConvention conv, double theta, double phi)
{
    if (conv == PhaseConvention::kSeparableSine)
        return {std::sin(theta), std::sin(phi)};
    const double s = std::sin(theta);
    return {s * std::cos(phi), s * std::sin(phi)};
}

namespace {

// Phase progression exp(-j (n kx + m ky)) in Kronecker order.
CVector kron_phases(const ArrayGeometry &geom, double kx, double ky)
{
    CVector out(geom.n_total());
    for (int n = 0; n < geom.n_x; ++n)
        for (int m = 0; m < geom.n_y; ++m)
            out[n * geom.n_y + m] = std::polar(1.0, -(n * kx + m * ky));
    return out;
}

} // namespace

SteeringVector steering_vector(const ArrayGeometry &geom, double theta, double phi, double f, PhaseConvention conv)
{
    if (!(f > 0.0))
        throw std::invalid_argument("steering_vector: frequency must be > 0");
    const auto st = spatial_terms(conv, theta, phi);
    const double k = kTwoPi * f / kSpeedOfLight;
    return {kron_phases(geom, k * geom.d_x * st.u, k * geom.d_y * st.v)};
}

BeamWeights beam_weights(const ArrayGeometry &geom, double theta_f, double phi_f, double lambda_c,
                         PhaseConvention conv, int n_rf)
{
    if (!(lambda_c > 0.0))
        throw std::invalid_argument("beam_weights: lambda_c must be > 0");
    if (n_rf < 1)
        throw std::invalid_argument("beam_weights: n_rf must be >= 1");
    const auto st = spatial_terms(conv, theta_f, phi_f);
    const double k = kTwoPi / lambda_c;
    const CVector w = kron_phases(geom, k * geom.d_x * st.u, k * geom.d_y * st.v);

    BeamWeights out;
    out.columns = w.replicate(1, n_rf);
    out.theta_f = theta_f;
    out.phi_f = phi_f;
    out.design_frequency = kSpeedOfLight / lambda_c;
    out.convention = conv;
    return out;
}

cplx beam_gain_sum(const BeamWeights &weights, const ArrayGeometry &geom, double theta, double phi, double f, int rf)
{
    const auto a = steering_vector(geom, theta, phi, f, weights.convention);
    cplx g{0.0, 0.0};
    for (int n = 0; n < geom.n_x; ++n)
        for (int m = 0; m < geom.n_y; ++m)
        {
            const int idx = n * geom.n_y + m;
            g += std::conj(weights.columns(idx, rf)) * a.entries[idx];
        }
    return g;
}

cplx dirichlet_sum(int count, double psi)
{
    if (count < 1)
        throw std::invalid_argument("dirichlet_sum: count must be >= 1");
    const double half = 0.5 * psi;
    const double k = std::round(half / kPi);
    const double delta = half - k * kPi;
    // (-1)^{k (N-1)}
    const long long kk = static_cast<long long>(k);
    const double sign = ((kk * (count - 1)) % 2 == 0) ? 1.0 : -1.0;
    double ratio;
    if (std::abs(delta) < 1e-12)
        ratio = sign * count;
    else
        ratio = sign * std::sin(count * delta) / std::sin(delta);
    return std::polar(1.0, -(count - 1) * half) * ratio;
}

cplx beam_gain_closed(const BeamWeights &weights, const ArrayGeometry &geom, double theta, double phi, double f_c,
                      double f_d, AxisCountMode mode)
{
    const auto q = spatial_terms(weights.convention, theta, phi);
    const auto foc = spatial_terms(weights.convention, weights.theta_f, weights.phi_f);
    const double f_q = f_c + f_d;
    const double f_w = weights.design_frequency > 0.0 ? weights.design_frequency : f_c;
    const double mu_x = f_q * q.u - f_w * foc.u;
    const double mu_y = f_q * q.v - f_w * foc.v;
    const double psi_x = kTwoPi * geom.d_x * mu_x / kSpeedOfLight;
    const double psi_y = kTwoPi * geom.d_y * mu_y / kSpeedOfLight;
    if (mode == AxisCountMode::kTotalCount)
    {
        const int n = geom.n_total();
        return dirichlet_sum(n, psi_x) * dirichlet_sum(n, psi_y) / static_cast<double>(n);
    }
    return dirichlet_sum(geom.n_x, psi_x) * dirichlet_sum(geom.n_y, psi_y);
}

double approx_beam_gain(const ArrayGeometry &geom, double theta, double phi)
{
    const double x = geom.n_x * theta;
    const double y = geom.n_y * phi;
    if (std::abs(x) > 1.0 || std::abs(y) > 1.0)
        return 0.0;
    const double cx = std::cos(0.5 * kPi * x);
    const double cy = std::cos(0.5 * kPi * y);
    return cx * cx * cy * cy;
}

cplx effective_channel(const BeamWeights &weights, const SteeringVector &steering, int rf)
{
    if (weights.columns.rows() != steering.entries.size())
        throw std::invalid_argument("effective_channel: weight length " + std::to_string(weights.columns.rows()) +
                                    " != steering length " + std::to_string(steering.entries.size()));
    if (rf < 0 || rf >= weights.columns.cols())
        throw std::invalid_argument("effective_channel: rf chain out of range");
    return weights.columns.col(rf).dot(steering.entries);
}

AngleGrid AngleGrid::uniform(double theta_min, double theta_max, double phi_min, double phi_max, double step)
{
    if (!(step > 0.0))
        throw ConfigError("grid.step_deg: must be > 0");
    if (theta_max < theta_min || phi_max < phi_min)
        throw ConfigError("grid: max must be >= min");
    AngleGrid g;
    const auto nt = static_cast<std::size_t>(std::llround((theta_max - theta_min) / step)) + 1;
    const auto np = static_cast<std::size_t>(std::llround((phi_max - phi_min) / step)) + 1;
    g.theta_deg.resize(nt);
    g.phi_deg.resize(np);
    for (std::size_t i = 0; i < nt; ++i)
        g.theta_deg[i] = theta_min + static_cast<double>(i) * step;
    for (std::size_t i = 0; i < np; ++i)
        g.phi_deg[i] = phi_min + static_cast<double>(i) * step;
    return g;
}

GainGrid beam_gain_grid(const BeamWeights &weights, const ArrayGeometry &geom, const AngleGrid &grid, double f_c,
                        double f_d)
{
    GainGrid out{grid, std::vector<double>(grid.size())};
    const auto nt = static_cast<std::int64_t>(grid.theta_deg.size());
    const std::size_t np = grid.phi_deg.size();
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < nt; ++i)
    {
        const double th = deg2rad(grid.theta_deg[static_cast<std::size_t>(i)]);
        for (std::size_t j = 0; j < np; ++j)
            out.gain_abs[static_cast<std::size_t>(i) * np + j] =
                std::abs(beam_gain_closed(weights, geom, th, deg2rad(grid.phi_deg[j]), f_c, f_d));
    }
    return out;
}

GainGrid beam_gain_grid_serial(const BeamWeights &weights, const ArrayGeometry &geom, const AngleGrid &grid,
                               double f_c, double f_d)
{
    GainGrid out{grid, std::vector<double>(grid.size())};
    const std::size_t np = grid.phi_deg.size();
    for (std::size_t i = 0; i < grid.theta_deg.size(); ++i)
    {
        const double th = deg2rad(grid.theta_deg[i]);
        for (std::size_t j = 0; j < np; ++j)
            out.gain_abs[i * np + j] = std::abs(beam_gain_closed(weights, geom, th, deg2rad(grid.phi_deg[j]), f_c, f_d));
    }
    return out;
}

GridPeak grid_peak(const GainGrid &g)
{
    if (g.gain_abs.empty())
        throw std::invalid_argument("grid_peak: empty grid");
    std::size_t best = 0;
    for (std::size_t i = 1; i < g.gain_abs.size(); ++i)
        if (g.gain_abs[i] > g.gain_abs[best])
            best = i;
    const std::size_t np = g.grid.phi_deg.size();
    return {g.grid.theta_deg[best / np], g.grid.phi_deg[best % np], g.gain_abs[best]};
}

} // namespace hapsim::array
