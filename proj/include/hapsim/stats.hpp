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

#include <functional>
#include <stdexcept>
#include <vector>

namespace hapsim::stats {

// 1 for |x| <= 1, else 0.
double rect(double x);

// Gaussian tail probability.
double q_function(double x);

// A = Q(n t / (s n phi)) - [Q((1 + n t) / (s n phi)) + Q((1 - n t) / (s n phi))]
// with t the deviation from the focus and s an angular spread scale.
// phi == 0 collapses the distribution and is rejected.
double alignment_mass(int n_per_axis, double theta_prime, double phi, double angular_spread = 1.0);

// N^2 cos^4(pi n_x / 2) cos^4(pi n_y / 2) with N = n_x n_y.
// Zero (degenerate) when either axis count is odd.
double kappa_const(int n_x, int n_y);

// Gamma(m, 1/m) density: (m z)^m exp(-m z) / (z Gamma(m)).
double gamma_pdf(double zeta, double m);

struct PdfParams
{
    double m = 3.0;
    double kappa = 256.0;
    double a_rx = 1.0;
    double a_tx = 1.0;
    double noise_scale = 1.0; // E_{x,w} |w| relative to the carrier energy
    double ici_leakage = 0.0; // aggregate ICI gain relative to the desired gain

    double mass() const { return a_rx * a_tx; }
    void validate() const;
};

double snr_pdf(double gamma, const PdfParams &params);
double snr_cdf(double gamma, const PdfParams &params);
double ici_pdf(double gamma, const PdfParams &params, int n_c);

// Density of gamma = kappa z_p / (s (1 + eps x)) with x distributed as one
// interferer's gamma_q; reduces to snr_pdf when eps == 0 or n_c == 1.
double sinr_pdf(double gamma, const PdfParams &params, int n_c);
double sinr_cdf(double gamma, const PdfParams &params, int n_c);

struct QuadratureResult
{
    double value = 0.0;
    double error = 0.0;
};

class QuadratureError : public std::runtime_error
{
  public:
    QuadratureError(const std::string &msg, double residual) : std::runtime_error(msg), residual_(residual) {}
    double residual() const { return residual_; }

  private:
    double residual_;
};

// Adaptive Gauss-Kronrod over [a, b]. Throws when the error estimate
// exceeds max(abs_tol, rel_tol |value|).
QuadratureResult integrate(const std::function<double(double)> &f, double a, double b, double abs_tol = 1e-8,
                           double rel_tol = 1e-10);

// x with P(Gamma(m, scale) > x) = tail.
double gamma_upper_limit(double m, double scale, double tail = 1e-12);

// Linear interpolation of a CDF tabulated on increasing abscissae.
class TabulatedCdf
{
  public:
    TabulatedCdf(std::vector<double> x, std::vector<double> cdf);

    double operator()(double v) const;
    const std::vector<double> &x() const { return x_; }
    const std::vector<double> &values() const { return cdf_; }

  private:
    std::vector<double> x_;
    std::vector<double> cdf_;
};

// sup |F_n - F| from samples (sorted in place).
double ks_distance(std::vector<double> samples, const std::function<double(double)> &cdf);

} // namespace hapsim::stats
