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

#include "hapsim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace hapsim::channel {

double PathParams::doppler_term() const { return std::sin(theta_rd) * std::cos(phi_rd); }

void ClusterPathSet::validate() const
{
    if (K < 1 || L < 1)
        throw ConfigError("paths: K and L must be >= 1");
    if (paths.size() != static_cast<std::size_t>(K) * static_cast<std::size_t>(L))
        throw ConfigError("paths: expected K*L = " + std::to_string(K * L) + " entries, got " +
                          std::to_string(paths.size()));
}

cplx FadingModel::draw(RandomStream &rng) const
{
    if (kind == Kind::kRayleigh)
        return rng.complex_normal();
    if (!(m >= 0.5))
        throw ConfigError("fading.m: Nakagami m must be >= 0.5");
    const double power = rng.gamma(m, 1.0 / m);
    const double phase = rng.uniform(-kPi, kPi);
    return std::polar(std::sqrt(power), phase);
}

ElementDelays element_delays(const array::ArrayGeometry &geom, double theta_rx, double phi_rx)
{
    const double s = std::sin(theta_rx);
    const double px = geom.d_x * s * std::cos(phi_rx);
    const double py = geom.d_y * s * std::sin(phi_rx);
    return {px / kSpeedOfLight, py / kSpeedOfLight,
            std::abs((geom.n_total() - 1) * (px + py) / kSpeedOfLight)};
}

ClusterPathSet sample_cluster_paths(int K, int L, RandomStream &rng, const AngleRanges &ranges,
                                    const FadingModel &fading)
{
    if (K < 1 || L < 1)
        throw ConfigError("paths: K and L must be >= 1");
    auto draw = [&rng](const AngleRange &r) { return r.hi > r.lo ? rng.uniform(r.lo, r.hi) : r.lo; };
    ClusterPathSet set;
    set.K = K;
    set.L = L;
    set.paths.reserve(static_cast<std::size_t>(K * L));
    for (int k = 0; k < K; ++k)
        for (int l = 0; l < L; ++l)
        {
            PathParams p;
            p.gain = fading.draw(rng);
            p.theta_tx = draw(ranges.theta_tx);
            p.phi_tx = draw(ranges.phi_tx);
            p.theta_rx = draw(ranges.theta_rx);
            p.phi_rx = draw(ranges.phi_rx);
            p.theta_rd = draw(ranges.theta_rd);
            p.phi_rd = draw(ranges.phi_rd);
            p.cluster = k;
            set.paths.push_back(p);
        }
    return set;
}

double normalization_factor(ChannelNormalization norm, int n_tx, int n_rx, int K, int L)
{
    const double base = 1.0 / std::sqrt(static_cast<double>(K) * L);
    return norm == ChannelNormalization::kPaper ? static_cast<double>(n_tx) * n_rx * base : base;
}

CMatrix channel_matrix(const ClusterPathSet &paths, const array::ArrayGeometry &tx, const array::ArrayGeometry &rx,
                       double f, double t, double f_dmax, const ChannelOptions &opts)
{
    paths.validate();
    tx.validate();
    rx.validate();
    if (!(f > 0.0))
        throw std::invalid_argument("channel_matrix: frequency must be > 0");
    const double scale = normalization_factor(opts.normalization, tx.n_total(), rx.n_total(), paths.K, paths.L);
    CMatrix h = CMatrix::Zero(rx.n_total(), tx.n_total());
    for (const auto &p : paths.paths)
    {
        const auto a_rx = array::steering_vector(rx, p.theta_rx, p.phi_rx, f, opts.convention);
        const auto a_tx = array::steering_vector(tx, p.theta_tx, p.phi_tx, f, opts.convention);
        const cplx dop = std::polar(1.0, kTwoPi * f_dmax * t * p.doppler_term());
        h.noalias() += (scale * p.gain * dop) * (a_rx.entries * a_tx.entries.adjoint());
    }
    return h;
}

void MulticarrierSpec::validate() const
{
    std::vector<std::string> errs;
    if (n_c < 1)
        errs.push_back("n_carriers: must be >= 1");
    if (!(subcarrier_spacing > 0.0))
        errs.push_back("subcarrier_spacing_hz: must be > 0");
    if (n_taps < 1)
        errs.push_back("n_taps: must be >= 1");
    if (!errs.empty())
        throw ConfigError(std::move(errs));
}

std::vector<double> PowerDelayProfile::weights(int n_taps) const
{
    if (n_taps < 1)
        throw ConfigError("n_taps: must be >= 1");
    std::vector<double> w(static_cast<std::size_t>(n_taps), 1.0);
    if (kind == Kind::kExponential)
    {
        if (!(decay_taps > 0.0))
            throw ConfigError("pdp.decay_taps: must be > 0");
        for (int l = 0; l < n_taps; ++l)
            w[static_cast<std::size_t>(l)] = std::exp(-l / decay_taps);
    }
    double sum = 0.0;
    for (double x : w)
        sum += x;
    for (double &x : w)
        x /= sum;
    return w;
}

std::vector<double> tap_amplitudes(const std::vector<int> &clusters, int n_taps, const PowerDelayProfile &pdp)
{
    const auto w = pdp.weights(n_taps);
    std::set<int> used;
    for (int k : clusters)
        used.insert(k % n_taps);
    double used_power = 0.0;
    for (int l : used)
        used_power += w[static_cast<std::size_t>(l)];
    std::vector<double> amp(static_cast<std::size_t>(n_taps), 0.0);
    for (int l : used)
        amp[static_cast<std::size_t>(l)] =
            std::sqrt(w[static_cast<std::size_t>(l)] * static_cast<double>(used.size()) / used_power);
    return amp;
}

namespace {

std::vector<cplx> unit_roots(int n)
{
    std::vector<cplx> r(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        r[static_cast<std::size_t>(k)] = std::polar(1.0, kTwoPi * k / n);
    return r;
}

int mod(long long a, int n)
{
    long long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

// H(p, q) = (1/N) sum_r sum_l h[r][l] exp(-j2pi l q / N) exp(j2pi r (q - p) / N)
template <typename T>
std::vector<T> couple(const std::vector<std::vector<T>> &h, int n, const T &zero)
{
    const auto w = unit_roots(n);
    const int n_taps = h.empty() ? 0 : static_cast<int>(h.front().size());
    std::vector<T> out(static_cast<std::size_t>(n * n), zero);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
        {
            T acc = zero;
            for (int r = 0; r < n; ++r)
                for (int l = 0; l < n_taps; ++l)
                {
                    const long long e = static_cast<long long>(r) * (q - p) - static_cast<long long>(l) * q;
                    acc += h[static_cast<std::size_t>(r)][static_cast<std::size_t>(l)] *
                           w[static_cast<std::size_t>(mod(e, n))];
                }
            out[static_cast<std::size_t>(p * n + q)] = acc / static_cast<double>(n);
        }
    return out;
}

} // namespace

ChannelRealization channel_realization(const ClusterPathSet &paths, const array::ArrayGeometry &tx,
                                       const array::ArrayGeometry &rx, double f_c, const MulticarrierSpec &spec,
                                       double t0, double f_dmax, const PowerDelayProfile &pdp,
                                       const ChannelOptions &opts)
{
    paths.validate();
    spec.validate();
    const int n = spec.n_c;
    const int v = spec.n_taps;
    const double ts = spec.sample_period();
    const double scale = normalization_factor(opts.normalization, tx.n_total(), rx.n_total(), paths.K, paths.L);

    std::vector<int> clusters;
    for (const auto &p : paths.paths)
        clusters.push_back(p.cluster);
    const auto amp = tap_amplitudes(clusters, v, pdp);

    std::vector<CMatrix> outer;
    outer.reserve(paths.paths.size());
    for (const auto &p : paths.paths)
    {
        const auto a_rx = array::steering_vector(rx, p.theta_rx, p.phi_rx, f_c, opts.convention);
        const auto a_tx = array::steering_vector(tx, p.theta_tx, p.phi_tx, f_c, opts.convention);
        outer.emplace_back((scale * p.gain) * (a_rx.entries * a_tx.entries.adjoint()));
    }

    const CMatrix zero = CMatrix::Zero(rx.n_total(), tx.n_total());
    std::vector<std::vector<CMatrix>> h(static_cast<std::size_t>(n), std::vector<CMatrix>(static_cast<std::size_t>(v), zero));
    for (int r = 0; r < n; ++r)
    {
        const double t = t0 + r * ts;
        for (std::size_t i = 0; i < paths.paths.size(); ++i)
        {
            const auto &p = paths.paths[i];
            const int l = p.cluster % v;
            const cplx dop = std::polar(amp[static_cast<std::size_t>(l)], kTwoPi * f_dmax * t * p.doppler_term());
            h[static_cast<std::size_t>(r)][static_cast<std::size_t>(l)] += dop * outer[i];
        }
    }

    ChannelRealization out;
    out.n_c = n;
    out.n_rx = rx.n_total();
    out.n_tx = tx.n_total();
    out.t = t0;
    out.f_dmax = f_dmax;
    out.blocks = couple(h, n, zero);
    return out;
}

TappedChannel tapped_channel(const ClusterPathSet &paths, int n_rx, int n_tx, const MulticarrierSpec &spec, double t0,
                             double f_dmax, const PowerDelayProfile &pdp, RandomStream &rng)
{
    paths.validate();
    spec.validate();
    if (n_rx < 1 || n_tx < 1)
        throw std::invalid_argument("tapped_channel: element counts must be >= 1");
    const int v = spec.n_taps;
    const int n = spec.n_c;
    const double ts = spec.sample_period();
    const auto w = pdp.weights(v);
    const std::size_t n_paths = paths.paths.size();

    std::vector<double> omega(n_paths);
    for (std::size_t i = 0; i < n_paths; ++i)
        omega[i] = kTwoPi * f_dmax * paths.paths[i].doppler_term();

    TappedChannel ch;
    ch.n_rx = n_rx;
    ch.n_tx = n_tx;
    ch.n_samples = n;
    ch.n_taps = v;
    ch.taps.assign(static_cast<std::size_t>(n_rx) * n_tx * n * v, cplx{});
    std::vector<cplx> g(n_paths);
    for (int a = 0; a < n_rx; ++a)
        for (int b = 0; b < n_tx; ++b)
            for (int l = 0; l < v; ++l)
            {
                const double amp = std::sqrt(w[static_cast<std::size_t>(l)] / static_cast<double>(n_paths));
                for (auto &x : g)
                    x = rng.complex_normal();
                for (int r = 0; r < n; ++r)
                {
                    const double t = t0 + r * ts;
                    cplx acc{};
                    for (std::size_t i = 0; i < n_paths; ++i)
                        acc += g[i] * std::polar(1.0, omega[i] * t);
                    ch.at(a, b, r, l) = amp * acc;
                }
            }
    return ch;
}

TapCorrelation tap_correlation(const ClusterPathSet &paths, const MulticarrierSpec &spec, double f_dmax,
                               const PowerDelayProfile &pdp)
{
    paths.validate();
    spec.validate();
    const int n = spec.n_c;
    const double ts = spec.sample_period();
    const auto w = pdp.weights(spec.n_taps);
    const double n_paths = static_cast<double>(paths.paths.size());

    CMatrix base = CMatrix::Zero(n, n);
    for (int r1 = 0; r1 < n; ++r1)
        for (int r2 = 0; r2 < n; ++r2)
        {
            cplx acc{};
            for (const auto &p : paths.paths)
                acc += std::polar(1.0, kTwoPi * f_dmax * ts * (r1 - r2) * p.doppler_term());
            base(r1, r2) = acc / n_paths;
        }
    TapCorrelation out;
    for (double pl : w)
        out.per_tap.push_back(pl * base);
    return out;
}

std::vector<cplx> frequency_response(const TappedChannel &ch, int rx, int tx, int r, int n_c)
{
    if (n_c < 1)
        throw std::invalid_argument("frequency_response: n_c must be >= 1");
    const auto w = unit_roots(n_c);
    std::vector<cplx> out(static_cast<std::size_t>(n_c));
    for (int p = 0; p < n_c; ++p)
    {
        cplx acc{};
        for (int l = 0; l < ch.n_taps; ++l)
            acc += ch.at(rx, tx, r, l) * std::conj(w[static_cast<std::size_t>(mod(static_cast<long long>(l) * p, n_c))]);
        out[static_cast<std::size_t>(p)] = acc;
    }
    return out;
}

ChannelRealization carrier_matrices(const TappedChannel &ch, int n_c)
{
    if (n_c != ch.n_samples)
        throw std::invalid_argument("carrier_matrices: n_c must equal the number of time samples");
    ChannelRealization out;
    out.n_c = n_c;
    out.n_rx = ch.n_rx;
    out.n_tx = ch.n_tx;
    out.blocks.assign(static_cast<std::size_t>(n_c * n_c), CMatrix::Zero(ch.n_rx, ch.n_tx));
    std::vector<std::vector<cplx>> h(static_cast<std::size_t>(n_c), std::vector<cplx>(static_cast<std::size_t>(ch.n_taps)));
    for (int a = 0; a < ch.n_rx; ++a)
        for (int b = 0; b < ch.n_tx; ++b)
        {
            for (int r = 0; r < n_c; ++r)
                for (int l = 0; l < ch.n_taps; ++l)
                    h[static_cast<std::size_t>(r)][static_cast<std::size_t>(l)] = ch.at(a, b, r, l);
            const auto c = couple(h, n_c, cplx{});
            for (int k = 0; k < n_c * n_c; ++k)
                out.blocks[static_cast<std::size_t>(k)](a, b) = c[static_cast<std::size_t>(k)];
        }
    return out;
}

ScalarCarrierChannel beamform(const ChannelRealization &ch, const CVector &w_rx, const CVector &w_tx)
{
    if (w_rx.size() != ch.n_rx || w_tx.size() != ch.n_tx)
        throw std::invalid_argument("beamform: weight lengths do not match the channel dimensions");
    ScalarCarrierChannel out{ch.n_c, CMatrix(ch.n_c, ch.n_c)};
    for (int p = 0; p < ch.n_c; ++p)
        for (int q = 0; q < ch.n_c; ++q)
            out.h(p, q) = w_rx.dot(ch.at(p, q) * w_tx);
    return out;
}

std::vector<BeamformedPath> beamformed_paths(const ClusterPathSet &paths, const array::ArrayGeometry &tx,
                                             const array::ArrayGeometry &rx, const CVector &w_tx,
                                             const CVector &w_rx, double f, const ChannelOptions &opts)
{
    paths.validate();
    if (w_rx.size() != rx.n_total() || w_tx.size() != tx.n_total())
        throw std::invalid_argument("beamformed_paths: weight lengths do not match the arrays");
    const double scale = normalization_factor(opts.normalization, tx.n_total(), rx.n_total(), paths.K, paths.L);
    std::vector<BeamformedPath> out;
    out.reserve(paths.paths.size());
    for (const auto &p : paths.paths)
    {
        const auto a_rx = array::steering_vector(rx, p.theta_rx, p.phi_rx, f, opts.convention);
        const auto a_tx = array::steering_vector(tx, p.theta_tx, p.phi_tx, f, opts.convention);
        const cplx g_rx = w_rx.dot(a_rx.entries);
        const cplx g_tx = a_tx.entries.dot(w_tx);
        out.push_back({scale * p.gain * g_rx * g_tx, p.doppler_term(), p.cluster});
    }
    return out;
}

ScalarCarrierChannel scalar_carrier_channel(const std::vector<BeamformedPath> &paths, const MulticarrierSpec &spec,
                                            double t0, double f_dmax, const PowerDelayProfile &pdp)
{
    spec.validate();
    const int n = spec.n_c;
    const int v = spec.n_taps;
    const double ts = spec.sample_period();
    std::vector<int> clusters;
    for (const auto &p : paths)
        clusters.push_back(p.cluster);
    const auto amp = tap_amplitudes(clusters, v, pdp);

    std::vector<std::vector<cplx>> h(static_cast<std::size_t>(n), std::vector<cplx>(static_cast<std::size_t>(v)));
    for (int r = 0; r < n; ++r)
    {
        const double t = t0 + r * ts;
        for (const auto &p : paths)
        {
            const int l = p.cluster % v;
            h[static_cast<std::size_t>(r)][static_cast<std::size_t>(l)] +=
                p.amplitude * std::polar(amp[static_cast<std::size_t>(l)], kTwoPi * f_dmax * t * p.doppler_term);
        }
    }
    const auto c = couple(h, n, cplx{});
    ScalarCarrierChannel out{n, CMatrix(n, n)};
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            out.h(p, q) = c[static_cast<std::size_t>(p * n + q)];
    return out;
}

} // namespace hapsim::channel
