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

#include "hapsim/link.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

#include "hapsim/parallel.hpp"

namespace hapsim::link {

LinkConfig LinkConfig::equal_split(int n_c, double total_energy, double noise_energy)
{
    if (n_c < 1)
        throw ConfigError("n_carriers: must be >= 1");
    LinkConfig cfg;
    cfg.n_c = n_c;
    cfg.energy_per_carrier.assign(static_cast<std::size_t>(n_c), total_energy / n_c);
    cfg.noise_energy = noise_energy;
    cfg.validate();
    return cfg;
}

void LinkConfig::validate() const
{
    std::vector<std::string> errs;
    if (n_c < 1)
        errs.push_back("link.n_carriers: must be >= 1");
    if (energy_per_carrier.size() != static_cast<std::size_t>(n_c > 0 ? n_c : 0))
        errs.push_back("link.energy_per_carrier: expected " + std::to_string(n_c) + " entries");
    for (double e : energy_per_carrier)
        if (!(e >= 0.0))
        {
            errs.push_back("link.energy_per_carrier: energies must be >= 0");
            break;
        }
    if (!(noise_energy > 0.0))
        errs.push_back("link.noise_energy: must be > 0");
    if (!(rho >= 0.0))
        errs.push_back("link.rho: must be >= 0");
    if (!errs.empty())
        throw ConfigError(std::move(errs));
}

SignalCovariance::SignalCovariance(int n_c, int n_tx, CMatrix full) : n_c_(n_c), n_tx_(n_tx), full_(std::move(full))
{
    if (n_c < 1 || n_tx < 1)
        throw std::invalid_argument("SignalCovariance: dimensions must be >= 1");
    const Eigen::Index n = static_cast<Eigen::Index>(n_c) * n_tx;
    if (full_.rows() != n || full_.cols() != n)
        throw std::invalid_argument("SignalCovariance: expected " + std::to_string(n) + "x" + std::to_string(n));
    const double scale = std::max(1.0, full_.norm());
    if ((full_ - full_.adjoint()).norm() > 1e-10 * scale)
        throw std::invalid_argument("SignalCovariance: R_XX is not Hermitian");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(full_);
    eigenvalues_ = es.eigenvalues();
    eigenvectors_ = es.eigenvectors();
    if (eigenvalues_.minCoeff() < -1e-10 * scale)
        throw std::invalid_argument("SignalCovariance: R_XX is not positive semidefinite");
    sqrt_factor_ = eigenvectors_ * eigenvalues_.cwiseMax(0.0).cwiseSqrt().asDiagonal();
}

SignalCovariance SignalCovariance::identity(int n_c, int n_tx)
{
    const Eigen::Index n = static_cast<Eigen::Index>(n_c) * n_tx;
    return SignalCovariance(n_c, n_tx, CMatrix::Identity(n, n));
}

CMatrix SignalCovariance::block(int p, int q) const
{
    return full_.block(static_cast<Eigen::Index>(p) * n_tx_, static_cast<Eigen::Index>(q) * n_tx_, n_tx_, n_tx_);
}

CMatrix SignalCovariance::reconstruct() const
{
    return eigenvectors_ * eigenvalues_.asDiagonal() * eigenvectors_.adjoint();
}

cplx SignalCovariance::block_eigen_trace(int p, int q) const
{
    const CMatrix b = block(p, q);
    if (p == q)
    {
        Eigen::SelfAdjointEigenSolver<CMatrix> es(b, Eigen::EigenvaluesOnly);
        return {es.eigenvalues().sum(), 0.0};
    }
    Eigen::ComplexEigenSolver<CMatrix> es(b, false);
    return es.eigenvalues().sum();
}

std::vector<CVector> received_signal(const channel::ChannelRealization &ch, const std::vector<CVector> &symbols,
                                     const LinkConfig &cfg, const std::vector<CVector> &noise_draws)
{
    cfg.validate();
    const int n = ch.n_c;
    if (cfg.n_c != n || symbols.size() != static_cast<std::size_t>(n) || noise_draws.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("received_signal: carrier count mismatch");
    for (int p = 0; p < n; ++p)
    {
        if (symbols[static_cast<std::size_t>(p)].size() != ch.n_tx)
            throw std::invalid_argument("received_signal: symbol vector " + std::to_string(p) + " has wrong length");
        if (noise_draws[static_cast<std::size_t>(p)].size() != ch.n_rx)
            throw std::invalid_argument("received_signal: noise vector " + std::to_string(p) + " has wrong length");
    }
    const double noise_amp = std::sqrt(cfg.noise_energy);
    std::vector<CVector> y;
    y.reserve(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p)
    {
        CVector acc = noise_amp * noise_draws[static_cast<std::size_t>(p)];
        for (int q = 0; q < n; ++q)
            acc.noalias() += std::sqrt(cfg.energy(q)) * (ch.at(p, q) * symbols[static_cast<std::size_t>(q)]);
        y.push_back(std::move(acc));
    }
    return y;
}

CMatrix ici_covariance_given_channel(const channel::ChannelRealization &ch, const SignalCovariance &rxx, int j)
{
    if (rxx.n_c() != ch.n_c || rxx.n_tx() != ch.n_tx)
        throw std::invalid_argument("ici_covariance_given_channel: R_XX dimensions do not match the channel");
    CMatrix out = CMatrix::Zero(ch.n_rx, ch.n_rx);
    for (int p = 0; p < ch.n_c; ++p)
    {
        if (p == j)
            continue;
        for (int q = 0; q < ch.n_c; ++q)
        {
            if (q == j)
                continue;
            out.noalias() += ch.at(j, p) * rxx.block(p, q) * ch.at(j, q).adjoint();
        }
    }
    return out;
}

namespace {

CMatrix ici_outer(const channel::ChannelRealization &ch, const SignalCovariance &rxx, int j, RandomStream &rng)
{
    if (rxx.n_c() != ch.n_c || rxx.n_tx() != ch.n_tx)
        throw std::invalid_argument("ici_covariance_mc: R_XX dimensions do not match the channel");
    CVector z(rxx.full().rows());
    for (Eigen::Index i = 0; i < z.size(); ++i)
        z[i] = rng.complex_normal();
    const CVector x = rxx.sqrt_factor() * z;
    CVector w = CVector::Zero(ch.n_rx);
    for (int q = 0; q < ch.n_c; ++q)
        if (q != j)
            w.noalias() += ch.at(j, q) * x.segment(static_cast<Eigen::Index>(q) * ch.n_tx, ch.n_tx);
    return w * w.adjoint();
}

CMatrix mean_of(const std::vector<CMatrix> &v)
{
    CMatrix acc = CMatrix::Zero(v.front().rows(), v.front().cols());
    for (const auto &m : v)
        acc += m;
    return acc / static_cast<double>(v.size());
}

} // namespace

CMatrix ici_covariance_mc(const ChannelSampler &sampler, const SignalCovariance &rxx, int j, std::size_t trials,
                          std::uint64_t seed)
{
    if (trials == 0)
        throw std::invalid_argument("ici_covariance_mc: empty ensemble");
    const auto outer = map_trials(trials, seed, [&](RandomStream &rng, std::size_t) {
        const auto ch = sampler(rng);
        return ici_outer(ch, rxx, j, rng);
    });
    return mean_of(outer);
}

CMatrix ici_covariance_mc_serial(const ChannelSampler &sampler, const SignalCovariance &rxx, int j,
                                 std::size_t trials, std::uint64_t seed)
{
    if (trials == 0)
        throw std::invalid_argument("ici_covariance_mc: empty ensemble");
    const auto outer = map_trials_serial(trials, seed, [&](RandomStream &rng, std::size_t) {
        const auto ch = sampler(rng);
        return ici_outer(ch, rxx, j, rng);
    });
    return mean_of(outer);
}

CMatrix ici_covariance_mc(const std::vector<channel::ChannelRealization> &ensemble, const SignalCovariance &rxx,
                          int j, std::uint64_t seed)
{
    if (ensemble.empty())
        throw std::invalid_argument("ici_covariance_mc: empty ensemble");
    const auto outer = map_trials(ensemble.size(), seed, [&](RandomStream &rng, std::size_t i) {
        return ici_outer(ensemble[i], rxx, j, rng);
    });
    return mean_of(outer);
}

cplx carrier_coupling(const channel::TapCorrelation &corr, int j, int p, int q)
{
    const int n = corr.n_samples();
    cplx total{};
    for (int l = 0; l < corr.n_taps(); ++l)
    {
        const auto &r = corr.per_tap[static_cast<std::size_t>(l)];
        cplx inner{};
        for (int r1 = 0; r1 < n; ++r1)
            for (int r2 = 0; r2 < n; ++r2)
            {
                const double ph = kTwoPi * (static_cast<double>(r1) * (p - j) - static_cast<double>(r2) * (q - j)) / n;
                inner += r(r1, r2) * std::polar(1.0, ph);
            }
        total += std::polar(1.0, -kTwoPi * l * (p - q) / n) * inner;
    }
    return total / (static_cast<double>(n) * n);
}

CMatrix ici_covariance_analytic(const channel::TapCorrelation &corr, const SignalCovariance &rxx, int n_rx, int j)
{
    const int n = corr.n_samples();
    if (rxx.n_c() != n)
        throw std::invalid_argument("ici_covariance_analytic: R_XX carrier count does not match the tap correlation");
    if (j < 0 || j >= n)
        throw std::invalid_argument("ici_covariance_analytic: carrier index out of range");
    cplx s{};
    for (int p = 0; p < n; ++p)
    {
        if (p == j)
            continue;
        for (int q = 0; q < n; ++q)
        {
            if (q == j)
                continue;
            s += rxx.block_eigen_trace(p, q) * carrier_coupling(corr, j, p, q);
        }
    }
    return s * CMatrix::Identity(n_rx, n_rx);
}

double leakage_ratio(const channel::TapCorrelation &corr, int j)
{
    const int n = corr.n_samples();
    double ici = 0.0;
    for (int p = 0; p < n; ++p)
        if (p != j)
            ici += carrier_coupling(corr, j, p, p).real();
    const double sig = carrier_coupling(corr, j, j, j).real();
    if (!(sig > 0.0))
        throw std::runtime_error("leakage_ratio: desired carrier has zero power");
    return ici / sig;
}

std::vector<double> sinr_per_carrier(const channel::ScalarCarrierChannel &h, const LinkConfig &cfg)
{
    cfg.validate();
    if (cfg.n_c != h.n_c)
        throw std::invalid_argument("sinr_per_carrier: carrier count mismatch");
    std::vector<double> gamma(static_cast<std::size_t>(h.n_c));
    for (int p = 0; p < h.n_c; ++p)
    {
        double ici = 0.0;
        for (int q = 0; q < h.n_c; ++q)
            if (q != p)
                ici += cfg.energy(q) * std::norm(h.h(p, q));
        gamma[static_cast<std::size_t>(p)] = cfg.energy(p) * std::norm(h.h(p, p)) / (ici + cfg.noise_energy);
    }
    return gamma;
}

std::vector<double> sinr_per_carrier(const channel::ChannelRealization &ch, const CVector &w_rx, const CVector &w_tx,
                                     const LinkConfig &cfg)
{
    return sinr_per_carrier(channel::beamform(ch, w_rx, w_tx), cfg);
}

double ergodic_capacity(const std::vector<double> &gamma)
{
    double c = 0.0;
    for (double g : gamma)
    {
        if (!(g >= 0.0))
            throw std::invalid_argument("ergodic_capacity: SINR must be >= 0");
        c += std::log2(1.0 + g);
    }
    return c;
}

LinkMetrics evaluate_link(const channel::ScalarCarrierChannel &h, const LinkConfig &cfg)
{
    LinkMetrics m;
    m.gamma = sinr_per_carrier(h, cfg);
    m.capacity = ergodic_capacity(m.gamma);
    m.ici_power.resize(static_cast<std::size_t>(h.n_c));
    for (int p = 0; p < h.n_c; ++p)
    {
        double ici = 0.0;
        for (int q = 0; q < h.n_c; ++q)
            if (q != p)
                ici += cfg.energy(q) * std::norm(h.h(p, q));
        m.ici_power[static_cast<std::size_t>(p)] = ici;
    }
    return m;
}

namespace {

struct CarrierPowers
{
    std::vector<double> signal; // per trial and carrier, row-major
    std::vector<double> ici;
    int n_c = 0;
};

CarrierPowers carrier_powers(const std::vector<channel::ScalarCarrierChannel> &trials, const LinkConfig &cfg)
{
    cfg.validate();
    CarrierPowers out;
    out.n_c = cfg.n_c;
    for (const auto &h : trials)
    {
        if (h.n_c != cfg.n_c)
            throw std::invalid_argument("scaled_link_grid: carrier count mismatch");
        for (int p = 0; p < h.n_c; ++p)
        {
            double ici = 0.0;
            for (int q = 0; q < h.n_c; ++q)
                if (q != p)
                    ici += cfg.energy(q) * std::norm(h.h(p, q));
            out.signal.push_back(cfg.energy(p) * std::norm(h.h(p, p)));
            out.ici.push_back(ici);
        }
    }
    return out;
}

void grid_cell(const CarrierPowers &pw, double g, double noise, double &sinr, double &cap)
{
    const std::size_t n = pw.signal.size();
    double s_acc = 0.0;
    double c_acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double gamma = g * pw.signal[i] / (g * pw.ici[i] + noise);
        s_acc += gamma;
        c_acc += std::log2(1.0 + gamma);
    }
    const double n_trials = static_cast<double>(n) / pw.n_c;
    sinr = s_acc / static_cast<double>(n);
    cap = c_acc / n_trials;
}

} // namespace

GridMetrics scaled_link_grid(const std::vector<channel::ScalarCarrierChannel> &unit_trials,
                             const std::vector<double> &beam_power, const LinkConfig &cfg)
{
    if (unit_trials.empty())
        throw std::invalid_argument("scaled_link_grid: no trials");
    const auto pw = carrier_powers(unit_trials, cfg);
    GridMetrics out{std::vector<double>(beam_power.size()), std::vector<double>(beam_power.size())};
    const auto n = static_cast<std::int64_t>(beam_power.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < n; ++c)
    {
        const auto i = static_cast<std::size_t>(c);
        grid_cell(pw, beam_power[i], cfg.noise_energy, out.mean_sinr[i], out.mean_capacity[i]);
    }
    return out;
}

GridMetrics scaled_link_grid_serial(const std::vector<channel::ScalarCarrierChannel> &unit_trials,
                                    const std::vector<double> &beam_power, const LinkConfig &cfg)
{
    if (unit_trials.empty())
        throw std::invalid_argument("scaled_link_grid: no trials");
    const auto pw = carrier_powers(unit_trials, cfg);
    GridMetrics out{std::vector<double>(beam_power.size()), std::vector<double>(beam_power.size())};
    for (std::size_t i = 0; i < beam_power.size(); ++i)
        grid_cell(pw, beam_power[i], cfg.noise_energy, out.mean_sinr[i], out.mean_capacity[i]);
    return out;
}

} // namespace hapsim::link
