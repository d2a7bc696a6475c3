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

#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>

#include "hapsim/channel.hpp"
#include "hapsim/stats.hpp"

using namespace hapsim;
using namespace hapsim::stats;

namespace {

PdfParams params(double m, double a_rx = 1.0, double a_tx = 1.0, double eps = 0.0)
{
    PdfParams p;
    p.m = m;
    p.kappa = 256.0;
    p.a_rx = a_rx;
    p.a_tx = a_tx;
    p.noise_scale = 1.0;
    p.ici_leakage = eps;
    return p;
}

double mass_of(const std::function<double(double)> &f, double hi)
{
    return integrate(f, 0.0, hi, 1e-12, 1e-12).value;
}

} // namespace

TEST_CASE("rect")
{
    CHECK(rect(0.0) == 1.0);
    CHECK(rect(1.0) == 1.0);
    CHECK(rect(-1.0) == 1.0);
    CHECK(rect(1.0001) == 0.0);
}

TEST_CASE("alignment mass")
{
    const int n = 4;
    const double phi = 0.3;
    CHECK(alignment_mass(n, 0.0, phi) == doctest::Approx(0.5 - 2.0 * q_function(1.0 / (n * phi))));
    for (double t : {0.05, 0.1, 0.2})
        CHECK(alignment_mass(n, t, phi) == doctest::Approx(q_function(n * t / (n * phi)) -
                                                           q_function((1 + n * t) / (n * phi)) -
                                                           q_function((1 - n * t) / (n * phi))));
    // Wide spread drives the bracket to Q(0) - 2 Q(0).
    CHECK(alignment_mass(n, 0.0, 1e9) == doctest::Approx(-0.5));
    RandomStream rng(1);
    for (int i = 0; i < 1000; ++i)
        CHECK(std::abs(alignment_mass(n, rng.uniform(-0.5, 0.5), rng.uniform(0.01, 3.0))) <= 1.0);
    CHECK_THROWS_AS(alignment_mass(n, 0.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(alignment_mass(0, 0.1, 0.1), std::invalid_argument);
}

TEST_CASE("kappa constant")
{
    CHECK(kappa_const(4, 4) == 256.0);
    CHECK(kappa_const(3, 4) == 0.0);
    CHECK(kappa_const(8, 4) == 1024.0);
    CHECK(kappa_const(8, 8) / kappa_const(4, 4) == doctest::Approx(16.0));
}

TEST_CASE("gamma density")
{
    for (double z : {0.1, 1.0, 3.0})
        CHECK(gamma_pdf(z, 1.0) == doctest::Approx(std::exp(-z)));
    for (double m : {1.0, 1.5, 3.0, 7.5})
    {
        const double hi = gamma_upper_limit(m, 1.0 / m, 1e-15);
        CHECK(std::abs(mass_of([m](double z) { return gamma_pdf(z, m); }, hi) - 1.0) <= 1e-6);
        CHECK(std::abs(mass_of([m](double z) { return z * gamma_pdf(z, m); }, hi) - 1.0) <= 1e-6);
    }
    CHECK(gamma_pdf(-1.0, 2.0) == 0.0);
    CHECK_THROWS_AS(gamma_pdf(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("SNR density mass, shape and mode")
{
    for (auto p : {params(3.0), params(3.0, 0.8, 0.6), params(1.5, -0.4, 0.9)})
    {
        const double hi = gamma_upper_limit(p.m, p.kappa / p.m, 1e-15);
        CHECK(std::abs(mass_of([&](double g) { return snr_pdf(g, p); }, hi) - p.mass()) <= 1e-4);
        CHECK(snr_cdf(hi, p) == doctest::Approx(p.mass()));
    }
    const auto e = params(1.0);
    for (double g : {10.0, 100.0, 500.0})
        CHECK(snr_pdf(g, e) == doctest::Approx(std::exp(-g / 256.0) / 256.0));

    const auto p = params(3.0);
    const double mode = (p.m - 1.0) * p.kappa / (p.m * p.noise_scale);
    const double h = 1e-3 * mode;
    CHECK(snr_pdf(mode, p) > snr_pdf(mode - h, p));
    CHECK(snr_pdf(mode, p) > snr_pdf(mode + h, p));

    auto odd = p;
    odd.kappa = 0.0;
    CHECK_THROWS_AS(snr_pdf(1.0, odd), std::domain_error);
    auto bad = p;
    bad.a_rx = 1.2;
    CHECK_THROWS_AS(snr_pdf(1.0, bad), ConfigError);
}

TEST_CASE("interference density")
{
    const auto p = params(3.0, 0.9, 0.7);
    CHECK(ici_pdf(100.0, p, 1) == 0.0);
    CHECK(ici_pdf(100.0, p, 2) == snr_pdf(100.0, p));
    const double hi = gamma_upper_limit(p.m, p.kappa / p.m, 1e-15);
    CHECK(mass_of([&](double g) { return ici_pdf(g, p, 4); }, hi) == doctest::Approx(3.0 * p.mass()).epsilon(1e-6));
}

TEST_CASE("SINR density")
{
    const auto p0 = params(3.0, 0.9, 0.8);
    for (double g : {1.0, 50.0, 200.0, 700.0})
        CHECK(std::abs(sinr_pdf(g, p0, 4) - snr_pdf(g, p0)) <= 1e-8);

    const auto p = params(3.0, 0.9, 0.8, 0.01);
    for (int i = 0; i < 1000; ++i)
        CHECK(sinr_pdf(0.5 + i, p, 2) >= 0.0);
    // Shrinks toward lower SINR as leakage grows.
    CHECK(sinr_cdf(100.0, p, 2) > snr_cdf(100.0, p));
    // Mixing keeps the total mass.
    const double hi = gamma_upper_limit(p.m, p.kappa / p.m, 1e-15);
    CHECK(mass_of([&](double g) { return sinr_pdf(g, p, 2); }, hi) == doctest::Approx(p.mass()).epsilon(1e-6));
    CHECK(sinr_cdf(150.0, p, 2) ==
          doctest::Approx(mass_of([&](double g) { return sinr_pdf(g, p, 2); }, 150.0)).epsilon(1e-7));
    CHECK(sinr_pdf(-1.0, p, 2) == 0.0);
    CHECK_THROWS_AS(sinr_pdf(1.0, p, 0), std::invalid_argument);
}

TEST_CASE("quadrature helpers")
{
    CHECK(integrate([](double x) { return x * x; }, 0.0, 3.0).value == doctest::Approx(9.0));
    const double hi = gamma_upper_limit(3.0, 2.0, 1e-12);
    CHECK(boost::math::gamma_q(3.0, hi / 2.0) == doctest::Approx(1e-12).epsilon(1e-6));
    CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, 0.0, 1.0), QuadratureError);
}

TEST_CASE("tabulated CDF and KS distance")
{
    const TabulatedCdf cdf({0.0, 1.0, 2.0}, {0.0, 0.5, 1.0});
    CHECK(cdf(-1.0) == 0.0);
    CHECK(cdf(0.5) == doctest::Approx(0.25));
    CHECK(cdf(1.5) == doctest::Approx(0.75));
    CHECK(cdf(3.0) == 1.0);
    CHECK_THROWS_AS(TabulatedCdf({0.0, 0.0}, {0.0, 1.0}), std::invalid_argument);

    RandomStream rng(2);
    std::vector<double> s(20000);
    for (auto &x : s)
        x = rng.gamma(3.0, 1.0 / 3.0);
    const auto p = params(3.0);
    auto unit = p;
    unit.kappa = 1.0;
    CHECK(ks_distance(s, [&](double g) { return snr_cdf(g, unit); }) < 0.015);
    CHECK(ks_distance(s, [](double g) { return 1.0 - std::exp(-g); }) > 0.05);
    CHECK_THROWS_AS(ks_distance({}, [](double) { return 0.0; }), std::invalid_argument);
}

TEST_CASE("Nakagami fading power recovers its shape parameter")
{
    for (double m : {1.0, 3.0, 5.0})
    {
        const channel::FadingModel f{channel::FadingModel::Kind::kNakagami, m};
        RandomStream rng(3);
        const int n = 100000;
        double s = 0.0, slog = 0.0;
        for (int i = 0; i < n; ++i)
        {
            const double w = std::norm(f.draw(rng));
            s += w;
            slog += std::log(w);
        }
        // Gamma ML for the shape: log m - digamma(m) = log(mean) - mean(log).
        const double target = std::log(s / n) - slog / n;
        double lo = 0.05, hi = 50.0;
        for (int it = 0; it < 100; ++it)
        {
            const double mid = 0.5 * (lo + hi);
            if (std::log(mid) - boost::math::digamma(mid) > target)
                lo = mid;
            else
                hi = mid;
        }
        CHECK(0.5 * (lo + hi) == doctest::Approx(m).epsilon(0.03));
    }
}
