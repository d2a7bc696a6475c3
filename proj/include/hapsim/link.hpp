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
#include <functional>
#include <vector>

#include "hapsim/channel.hpp"
#include "hapsim/common.hpp"
#include "hapsim/random.hpp"

namespace hapsim::link {

struct LinkConfig
{
    int n_c = 4;
    std::vector<double> energy_per_carrier{1.0, 1.0, 1.0, 1.0}; // E_{x,p}
    double noise_energy = 1.0;                                    // E_{x,w} |w|
    double rho = 1.0;                                             // per-element transmit power, W

    static LinkConfig equal_split(int n_c, double total_energy, double noise_energy);
    double energy(int p) const { return energy_per_carrier.at(static_cast<std::size_t>(p)); }
    void validate() const;
};

// Covariance of the stacked transmit vector [X(0); ...; X(n_c - 1)].
class SignalCovariance
{
  public:
    SignalCovariance(int n_c, int n_tx, CMatrix full);

    static SignalCovariance identity(int n_c, int n_tx);

    int n_c() const { return n_c_; }
    int n_tx() const { return n_tx_; }
    const CMatrix &full() const { return full_; }
    CMatrix block(int p, int q) const;

    const Eigen::VectorXd &eigenvalues() const { return eigenvalues_; }
    const CMatrix &eigenvectors() const { return eigenvectors_; }
    CMatrix reconstruct() const;
    // U diag(sqrt(lambda)), so that S z has covariance R_XX for white z.
    const CMatrix &sqrt_factor() const { return sqrt_factor_; }

    // Sum of the eigenvalues of block (p, q).
    cplx block_eigen_trace(int p, int q) const;

  private:
    int n_c_;
    int n_tx_;
    CMatrix full_;
    Eigen::VectorXd eigenvalues_;
    CMatrix eigenvectors_;
    CMatrix sqrt_factor_;
};

std::vector<CVector> received_signal(const channel::ChannelRealization &ch, const std::vector<CVector> &symbols,
                                     const LinkConfig &cfg, const std::vector<CVector> &noise_draws);

// sum_{p != j} sum_{q != j} H(j, p) R(p, q) H(j, q)^H
CMatrix ici_covariance_given_channel(const channel::ChannelRealization &ch, const SignalCovariance &rxx, int j);

using ChannelSampler = std::function<channel::ChannelRealization(RandomStream &)>;

// Sample covariance of the ICI at carrier j over channel and symbol draws.
CMatrix ici_covariance_mc(const ChannelSampler &sampler, const SignalCovariance &rxx, int j, std::size_t trials,
                          std::uint64_t seed);
CMatrix ici_covariance_mc_serial(const ChannelSampler &sampler, const SignalCovariance &rxx, int j,
                                 std::size_t trials, std::uint64_t seed);
// Fixed ensemble, symbols drawn per member.
CMatrix ici_covariance_mc(const std::vector<channel::ChannelRealization> &ensemble, const SignalCovariance &rxx,
                          int j, std::uint64_t seed);

// E[H(j, p)_ab conj(H(j, q)_ab)] for uncorrelated element pairs.
cplx carrier_coupling(const channel::TapCorrelation &corr, int j, int p, int q);

CMatrix ici_covariance_analytic(const channel::TapCorrelation &corr, const SignalCovariance &rxx, int n_rx, int j);

// ICI power over desired power on carrier j for white unit-power streams.
double leakage_ratio(const channel::TapCorrelation &corr, int j);

std::vector<double> sinr_per_carrier(const channel::ScalarCarrierChannel &h, const LinkConfig &cfg);
std::vector<double> sinr_per_carrier(const channel::ChannelRealization &ch, const CVector &w_rx, const CVector &w_tx,
                                     const LinkConfig &cfg);

double ergodic_capacity(const std::vector<double> &gamma);

struct LinkMetrics
{
    std::vector<double> gamma;
    double capacity = 0.0;
    std::vector<double> ici_power;
};

LinkMetrics evaluate_link(const channel::ScalarCarrierChannel &h, const LinkConfig &cfg);

// Trial-averaged metrics when the beamformed channel of every trial is
// scaled by sqrt(beam_power[c]) for grid cell c.
struct GridMetrics
{
    std::vector<double> mean_sinr;     // linear, averaged over carriers and trials
    std::vector<double> mean_capacity; // bit/s/Hz
};

GridMetrics scaled_link_grid(const std::vector<channel::ScalarCarrierChannel> &unit_trials,
                             const std::vector<double> &beam_power, const LinkConfig &cfg);
GridMetrics scaled_link_grid_serial(const std::vector<channel::ScalarCarrierChannel> &unit_trials,
                                    const std::vector<double> &beam_power, const LinkConfig &cfg);

} // namespace hapsim::link
