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

#include "hapsim/stats.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include "hapsim/common.hpp"

namespace hapsim::stats {

double rect(double x) { return std::abs(x) <= 1.0 ? 1.0 : 0.0; }

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double alignment_mass(int n_per_axis, double theta_prime, double phi, double angular_spread)
{
    if (n_per_axis < 1)
        throw std::invalid_argument("alignment_mass: n_per_axis must be >= 1");
    if (!(angular_spread > 0.0))
        throw std::invalid_argument("alignment_mass: angular spread must be > 0");
    if (phi == 0.0)
        throw std::domain_error("alignment_mass: phi = 0 is degenerate");
    const double n = n_per_axis;
    const double den = angular_spread * n * phi;
    const double nt = n * theta_prime;
    return q_function(nt / den) - (q_function((1.0 + nt) / den) + q_function((1.0 - nt) / den));
}

double kappa_const(int n_x, int n_y)
{
    if (n_x < 1 || n_y < 1)
        throw std::invalid_argument("kappa_const: axis counts must be >= 1");
    // cos^4(pi n / 2) is 1 for even n and 0 for odd n.
    if (n_x % 2 != 0 || n_y % 2 != 0)
        return 0.0;
    const double n = static_cast<double>(n_x) * n_y;
    return n * n;
}

double gamma_pdf(double zeta, double m)
{
    if (!(m > 0.0))
        throw std::invalid_argument("gamma_pdf: m must be > 0");
    if (!(zeta > 0.0))
        return 0.0;
    return std::exp(m * std::log(m * zeta) - m * zeta - std::log(zeta) - std::lgamma(m));
}

void PdfParams::validate() const
{
    std::vector<std::string> errs;
    if (!(m > 0.0))
        errs.push_back("pdf.m: must be > 0");
    if (!(kappa >= 0.0))
        errs.push_back("pdf.kappa: must be >= 0");
    if (!(std::abs(a_rx) <= 1.0))
        errs.push_back("pdf.a_rx: must satisfy |A| <= 1");
    if (!(std::abs(a_tx) <= 1.0))
        errs.push_back("pdf.a_tx: must satisfy |A| <= 1");
    if (!(noise_scale > 0.0))
        errs.push_back("pdf.noise_scale: must be > 0");
    if (!(ici_leakage >= 0.0))
        errs.push_back("pdf.ici_leakage: must be >= 0");
    if (!errs.empty())
        throw ConfigError(std::move(errs));
}

namespace {

void require_kappa(const PdfParams &p)
{
    p.validate();
    if (!(p.kappa > 0.0))
        throw std::domain_error("snr_pdf: kappa = 0 (odd axis count) is degenerate");
}

// Normalised Gamma(m, kappa / (m s)) density.
double shape_density(double gamma, double m, double kappa, double s)
{
    if (!(gamma > 0.0))
        return 0.0;
    const double c = m * s / kappa;
    return std::exp(m * std::log(c) - std::lgamma(m) + (m - 1.0) * std::log(gamma) - c * gamma);
}

double shape_cdf(double gamma, double m, double kappa, double s)
{
    if (!(gamma > 0.0))
        return 0.0;
    return boost::math::gamma_p(m, m * s * gamma / kappa);
}

template <typename Inner>
double mix_over_interference(const PdfParams &p, Inner inner)
{
    // x ~ Gamma(m, kappa / (m s))
    const double scale = p.kappa / (p.m * p.noise_scale);
    const double hi = gamma_upper_limit(p.m, scale);
    auto f = [&](double x) { return inner(x) * shape_density(x, p.m, p.kappa, p.noise_scale); };
    return integrate(f, 0.0, hi, 1e-12, 1e-10).value;
}

} // namespace

double snr_pdf(double gamma, const PdfParams &params)
{
    require_kappa(params);
    return params.mass() * shape_density(gamma, params.m, params.kappa, params.noise_scale);
}

double snr_cdf(double gamma, const PdfParams &params)
{
    require_kappa(params);
    return params.mass() * shape_cdf(gamma, params.m, params.kappa, params.noise_scale);
}

double ici_pdf(double gamma, const PdfParams &params, int n_c)
{
    if (n_c < 1)
        throw std::invalid_argument("ici_pdf: n_c must be >= 1");
    require_kappa(params);
    double acc = 0.0;
    for (int q = 1; q < n_c; ++q)
        acc += snr_pdf(gamma, params);
    return acc;
}

double sinr_pdf(double gamma, const PdfParams &params, int n_c)
{
    if (n_c < 1)
        throw std::invalid_argument("sinr_pdf: n_c must be >= 1");
    require_kappa(params);
    if (params.ici_leakage == 0.0 || n_c == 1)
        return snr_pdf(gamma, params);
    if (!(gamma > 0.0))
        return 0.0;
    const double eps = params.ici_leakage;
    return params.mass() * mix_over_interference(params, [&](double x) {
               return shape_density(gamma, params.m, params.kappa, params.noise_scale * (1.0 + eps * x));
           });
}

double sinr_cdf(double gamma, const PdfParams &params, int n_c)
{
    if (n_c < 1)
        throw std::invalid_argument("sinr_cdf: n_c must be >= 1");
    require_kappa(params);
    if (params.ici_leakage == 0.0 || n_c == 1)
        return snr_cdf(gamma, params);
    if (!(gamma > 0.0))
        return 0.0;
    const double eps = params.ici_leakage;
    return params.mass() * mix_over_interference(params, [&](double x) {
               return shape_cdf(gamma, params.m, params.kappa, params.noise_scale * (1.0 + eps * x));
           });
}

QuadratureResult integrate(const std::function<double(double)> &f, double a, double b, double abs_tol,
                           double rel_tol)
{
    double err = 0.0;
    double l1 = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, rel_tol, &err, &l1);
    if (!std::isfinite(v))
        throw QuadratureError("integrate: non-finite result", err);
    if (err > std::max(abs_tol, rel_tol * std::abs(v)) && err > 1e-6 * std::max(1.0, l1))
        throw QuadratureError("integrate: no convergence, error estimate " + std::to_string(err), err);
    return {v, err};
}

double gamma_upper_limit(double m, double scale, double tail)
{
    return scale * boost::math::gamma_q_inv(m, tail);
}

TabulatedCdf::TabulatedCdf(std::vector<double> x, std::vector<double> cdf) : x_(std::move(x)), cdf_(std::move(cdf))
{
    if (x_.size() != cdf_.size() || x_.size() < 2)
        throw std::invalid_argument("TabulatedCdf: need >= 2 matching points");
    for (std::size_t i = 1; i < x_.size(); ++i)
        if (!(x_[i] > x_[i - 1]))
            throw std::invalid_argument("TabulatedCdf: abscissae must increase");
}

double TabulatedCdf::operator()(double v) const
{
    if (v <= x_.front())
        return v < x_.front() ? 0.0 : cdf_.front();
    if (v >= x_.back())
        return cdf_.back();
    const auto it = std::upper_bound(x_.begin(), x_.end(), v);
    const std::size_t i = static_cast<std::size_t>(it - x_.begin());
    const double w = (v - x_[i - 1]) / (x_[i] - x_[i - 1]);
    return cdf_[i - 1] + w * (cdf_[i] - cdf_[i - 1]);
}

double ks_distance(std::vector<double> samples, const std::function<double(double)> &cdf)
{
    if (samples.empty())
        throw std::invalid_argument("ks_distance: no samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i)
    {
        const double f = cdf(samples[i]);
        d = std::max(d, std::max(std::abs(f - static_cast<double>(i) / n), std::abs(static_cast<double>(i + 1) / n - f)));
    }
    return d;
}

} // namespace hapsim::stats
