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

#include <vector>

#include "hapsim/array.hpp"
#include "hapsim/common.hpp"
#include "hapsim/random.hpp"

namespace hapsim::channel {

struct PathParams
{
    cplx gain{1.0, 0.0};
    double theta_tx = 0.0; // AAOD
    double phi_tx = 0.0;   // EAOD
    double theta_rx = 0.0; // AAOA
    double phi_rx = 0.0;   // EAOA
    double theta_rd = 0.0; // arrival azimuth relative to the direction of motion
    double phi_rd = 0.0;   // arrival elevation relative to the direction of motion
    int cluster = 0;

    // sin(theta_rd) cos(phi_rd), the fraction of f_dmax seen by this path.
    double doppler_term() const;
};

struct ClusterPathSet
{
    int K = 1;
    int L = 1;
    std::vector<PathParams> paths; // cluster-major: index k * L + l

    const PathParams &at(int k, int l) const { return paths.at(static_cast<std::size_t>(k * L + l)); }
    void validate() const;
};

struct AngleRange
{
    double lo = -kPi;
    double hi = kPi;
};

struct AngleRanges
{
    AngleRange theta_tx, phi_tx, theta_rx, phi_rx, theta_rd, phi_rd;
};

struct FadingModel
{
    enum class Kind
    {
        kRayleigh,
        kNakagami,
    };
    Kind kind = Kind::kRayleigh;
    double m = 1.0;

    // Unit mean power complex gain.
    cplx draw(RandomStream &rng) const;
};

struct ElementDelays
{
    double tau_x = 0.0;
    double tau_y = 0.0;
    double tau_max = 0.0;
};

ElementDelays element_delays(const array::ArrayGeometry &geom, double theta_rx, double phi_rx);

ClusterPathSet sample_cluster_paths(int K, int L, RandomStream &rng, const AngleRanges &ranges = {},
                                    const FadingModel &fading = {});

enum class ChannelNormalization
{
    kPaper,     // N_Tx N_Rx / sqrt(K L)
    kUnitPower, // 1 / sqrt(K L)
};

struct ChannelOptions
{
    array::PhaseConvention convention = array::PhaseConvention::kDirectionCosine;
    ChannelNormalization normalization = ChannelNormalization::kPaper;
};

double normalization_factor(ChannelNormalization norm, int n_tx, int n_rx, int K, int L);

CMatrix channel_matrix(const ClusterPathSet &paths, const array::ArrayGeometry &tx, const array::ArrayGeometry &rx,
                       double f, double t, double f_dmax, const ChannelOptions &opts = {});

struct MulticarrierSpec
{
    int n_c = 4;
    double subcarrier_spacing = 240e3; // Hz
    int n_taps = 4;

    // Time between the n_c samples of one multicarrier symbol.
    double sample_period() const { return 1.0 / (n_c * subcarrier_spacing); }
    void validate() const;
};

struct PowerDelayProfile
{
    enum class Kind
    {
        kUniform,
        kExponential,
    };
    Kind kind = Kind::kUniform;
    double decay_taps = 1.0; // e-folding length of the exponential profile

    // Tap powers, summing to 1.
    std::vector<double> weights(int n_taps) const;
};

struct ChannelRealization
{
    int n_c = 0;
    int n_rx = 0;
    int n_tx = 0;
    double t = 0.0;
    double f_dmax = 0.0;
    std::vector<CMatrix> blocks; // H(p, q) at index p * n_c + q

    const CMatrix &at(int p, int q) const { return blocks.at(static_cast<std::size_t>(p * n_c + q)); }
    CMatrix &at(int p, int q) { return blocks.at(static_cast<std::size_t>(p * n_c + q)); }
};

// Deterministic multicarrier channel of a path set. Cluster k feeds tap
// k mod n_taps; the channel evolves across the n_c samples of the symbol
// starting at t0 and the carrier coupling H(p, q) follows from a DFT.
ChannelRealization channel_realization(const ClusterPathSet &paths, const array::ArrayGeometry &tx,
                                       const array::ArrayGeometry &rx, double f_c, const MulticarrierSpec &spec,
                                       double t0, double f_dmax, const PowerDelayProfile &pdp = {},
                                       const ChannelOptions &opts = {});

// Stochastic tapped channel: independent gains per element pair, tap and
// path, with the Doppler terms of the path set.
//   h_ab(r, l) = sqrt(P_l / KL) sum_i g_{ab,l,i} exp(j 2 pi f_dmax (t0 + r T_s) s_i)
struct TappedChannel
{
    int n_rx = 0;
    int n_tx = 0;
    int n_samples = 0;
    int n_taps = 0;
    std::vector<cplx> taps;

    std::size_t index(int rx, int tx, int r, int l) const
    {
        return ((static_cast<std::size_t>(rx) * n_tx + tx) * n_samples + r) * n_taps + l;
    }
    cplx at(int rx, int tx, int r, int l) const { return taps[index(rx, tx, r, l)]; }
    cplx &at(int rx, int tx, int r, int l) { return taps[index(rx, tx, r, l)]; }
};

TappedChannel tapped_channel(const ClusterPathSet &paths, int n_rx, int n_tx, const MulticarrierSpec &spec, double t0,
                             double f_dmax, const PowerDelayProfile &pdp, RandomStream &rng);

// E[h(r1, l) conj(h(r2, l))] of tapped_channel, one n_c x n_c matrix per tap.
struct TapCorrelation
{
    std::vector<CMatrix> per_tap;

    int n_taps() const { return static_cast<int>(per_tap.size()); }
    int n_samples() const { return per_tap.empty() ? 0 : static_cast<int>(per_tap.front().rows()); }
};

TapCorrelation tap_correlation(const ClusterPathSet &paths, const MulticarrierSpec &spec, double f_dmax,
                               const PowerDelayProfile &pdp = {});

// DFT of the taps of one element pair at time sample r.
std::vector<cplx> frequency_response(const TappedChannel &ch, int rx, int tx, int r, int n_c);

ChannelRealization carrier_matrices(const TappedChannel &ch, int n_c);

struct ScalarCarrierChannel
{
    int n_c = 0;
    CMatrix h; // h(p, q)
};

ScalarCarrierChannel beamform(const ChannelRealization &ch, const CVector &w_rx, const CVector &w_tx);

// One path after receive and transmit beamforming.
struct BeamformedPath
{
    cplx amplitude; // normalisation * g * (w_rx^H a_rx) (a_tx^H w_tx)
    double doppler_term = 0.0;
    int cluster = 0;
};

std::vector<BeamformedPath> beamformed_paths(const ClusterPathSet &paths, const array::ArrayGeometry &tx,
                                             const array::ArrayGeometry &rx, const CVector &w_tx,
                                             const CVector &w_rx, double f, const ChannelOptions &opts = {});

// Same construction as channel_realization followed by beamform, on scalars.
ScalarCarrierChannel scalar_carrier_channel(const std::vector<BeamformedPath> &paths, const MulticarrierSpec &spec,
                                            double t0, double f_dmax, const PowerDelayProfile &pdp = {});

// Per-tap amplitude scale for clusters mapped onto taps by k mod n_taps.
std::vector<double> tap_amplitudes(const std::vector<int> &clusters, int n_taps, const PowerDelayProfile &pdp);

} // namespace hapsim::channel
