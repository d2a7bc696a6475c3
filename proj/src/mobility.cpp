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

#include "hapsim/mobility.hpp"

#include <string>

namespace hapsim::mobility {

namespace {

double gm_update(double prev, double alpha, double mu, double sigma, double drive)
{
    return alpha * prev + (1.0 - alpha) * mu + std::sqrt(1.0 - alpha * alpha) * sigma * drive;
}

double gm_closed(double initial, double alpha, double mu, double sigma, std::size_t i,
                 std::span<const NoiseDraw> noise, double NoiseDraw::*member)
{
    double alpha_i = std::pow(alpha, static_cast<double>(i));
    // Horner form of sum_j alpha^(i-j-1) X_j
    double acc = 0.0;
    for (std::size_t j = 0; j < i; ++j)
        acc = alpha * acc + noise[j].*member;
    return alpha_i * initial + (1.0 - alpha_i) * mu + std::sqrt(1.0 - alpha * alpha) * sigma * acc;
}

// Rotation instants from a Poisson process on (t0, t0 + duration].
std::vector<double> rotation_instants(double rate, double t0, double duration, RandomStream &rng)
{
    std::vector<double> out;
    if (rate <= 0.0)
        return out;
    double t = t0 + rng.exponential(rate);
    while (t <= t0 + duration)
    {
        out.push_back(t);
        t += rng.exponential(rate);
    }
    return out;
}

// True if any instant falls in (lo, hi].
bool has_instant(const std::vector<double> &instants, std::size_t &cursor, double lo, double hi)
{
    bool hit = false;
    while (cursor < instants.size() && instants[cursor] <= hi)
    {
        if (instants[cursor] > lo)
            hit = true;
        ++cursor;
    }
    return hit;
}

} // namespace

void MobilityParams::validate() const
{
    std::vector<std::string> errors;
    auto check_alpha = [&](double a, const char *name) {
        if (!(a >= 0.0 && a <= 1.0))
            errors.push_back(std::string(name) + ": must lie in [0, 1], got " + std::to_string(a));
    };
    check_alpha(alpha_v, "alpha_v");
    check_alpha(alpha_da, "alpha_da");
    check_alpha(alpha_de, "alpha_de");
    if (!(mu_v >= 0.0))
        errors.push_back("mu_v: must be >= 0");
    if (!(rotation_rate >= 0.0))
        errors.push_back("rotation_rate: must be >= 0");
    if (!(noise_std >= 0.0))
        errors.push_back("noise_std: must be >= 0");
    if (!errors.empty())
        throw ConfigError(errors);
}

Vec3 HapState::heading() const
{
    const double az = dir_az(), el = dir_el();
    return {std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el)};
}

HapState make_state(const Vec3 &position, double speed, double dir_az, double dir_el, double t)
{
    HapState s;
    s.t = t;
    s.position = position;
    s.process = {speed, dir_az, dir_el};
    return s;
}

HapState step_gauss_markov(const HapState &state, const MobilityParams &params, const NoiseDraw &noise)
{
    params.validate();
    HapState next = state;
    const double sigma = params.noise_std;
    next.process.speed = gm_update(state.process.speed, params.alpha_v, params.mu_v, sigma, noise.x);
    next.process.az = gm_update(state.process.az, params.alpha_da, params.mu_da, sigma, noise.y);
    next.process.el = gm_update(state.process.el, params.alpha_de, params.mu_de, sigma, noise.z);
    return next;
}

ProcessValues closed_form_state(const HapState &initial, const MobilityParams &params, std::size_t i,
                                std::span<const NoiseDraw> noise_history)
{
    params.validate();
    if (noise_history.size() != i)
        throw std::invalid_argument("closed_form_state: noise history has " + std::to_string(noise_history.size()) +
                                    " entries, expected " + std::to_string(i));
    const double sigma = params.noise_std;
    ProcessValues out;
    out.speed = gm_closed(initial.process.speed, params.alpha_v, params.mu_v, sigma, i, noise_history, &NoiseDraw::x);
    out.az = gm_closed(initial.process.az, params.alpha_da, params.mu_da, sigma, i, noise_history, &NoiseDraw::y);
    out.el = gm_closed(initial.process.el, params.alpha_de, params.mu_de, sigma, i, noise_history, &NoiseDraw::z);
    return out;
}

HapState apply_random_rotation(const HapState &state, const RotationDraw &draw)
{
    HapState next = state;
    next.process.az = draw.az;
    next.process.el = draw.el;
    return next;
}

HapState apply_random_rotation(const HapState &state, RandomStream &rng)
{
    RotationDraw d;
    d.az = rng.uniform(-kPi, kPi);
    d.el = rng.uniform(-kPi, kPi);
    return apply_random_rotation(state, d);
}

Vec3 integrate_position(const HapState &state, double dt)
{
    return state.position + state.speed() * dt * state.heading();
}

NoiseDraw draw_noise(RandomStream &rng)
{
    NoiseDraw n;
    n.x = rng.normal();
    n.y = rng.normal();
    n.z = rng.normal();
    return n;
}

Trajectory generate_trajectory(const HapState &initial, const MobilityParams &params, double duration, double dt,
                               std::uint64_t seed)
{
    params.validate();
    if (!(dt > 0.0) || !(duration >= dt))
        throw ConfigError("trajectory: require duration >= dt > 0");

    RandomStream noise_rng(derive_seed(seed, 0));
    RandomStream rotation_rng(derive_seed(seed, 1));
    const auto n_steps = static_cast<std::size_t>(std::llround(duration / dt));
    const auto instants = rotation_instants(params.rotation_rate, initial.t, duration, rotation_rng);

    Trajectory traj;
    traj.dt = dt;
    traj.states.reserve(n_steps + 1);
    traj.states.push_back(initial);
    std::size_t cursor = 0;
    for (std::size_t i = 1; i <= n_steps; ++i)
    {
        const HapState &prev = traj.states.back();
        HapState next = step_gauss_markov(prev, params, draw_noise(noise_rng));
        next.t = initial.t + static_cast<double>(i) * dt;
        next.position = integrate_position(prev, dt);
        if (has_instant(instants, cursor, prev.t, next.t))
            next = apply_random_rotation(next, rotation_rng);
        traj.states.push_back(next);
    }
    return traj;
}

TrajectoryPair generate_constrained_pair(const HapState &initial1, const MobilityParams &params1,
                                         const HapState &initial2, const MobilityParams &params2, double duration,
                                         double dt, double max_d3d, std::uint64_t seed, std::size_t max_redraws)
{
    params1.validate();
    params2.validate();
    if (!(dt > 0.0) || !(duration >= dt))
        throw ConfigError("trajectory: require duration >= dt > 0");
    if ((initial1.position - initial2.position).norm() > max_d3d)
        throw ConfigError("initial positions: slant distance exceeds max_d3d");

    RandomStream rng(derive_seed(seed, 2));
    RandomStream timing_rng(derive_seed(seed, 3));
    const auto n_steps = static_cast<std::size_t>(std::llround(duration / dt));
    const auto instants1 = rotation_instants(params1.rotation_rate, initial1.t, duration, timing_rng);
    const auto instants2 = rotation_instants(params2.rotation_rate, initial2.t, duration, timing_rng);

    TrajectoryPair out;
    out.hap1.dt = out.hap2.dt = dt;
    out.hap1.states.push_back(initial1);
    out.hap2.states.push_back(initial2);
    std::size_t cursor1 = 0, cursor2 = 0;
    for (std::size_t i = 1; i <= n_steps; ++i)
    {
        const HapState &prev1 = out.hap1.states.back();
        const HapState &prev2 = out.hap2.states.back();
        const double t = initial1.t + static_cast<double>(i) * dt;
        const bool rot1 = has_instant(instants1, cursor1, prev1.t, t);
        const bool rot2 = has_instant(instants2, cursor2, prev2.t, t);

        // Positions depend only on the previous states; the constraint is
        // evaluated on the state the step leads to at the next instant.
        const Vec3 p1 = integrate_position(prev1, dt);
        const Vec3 p2 = integrate_position(prev2, dt);
        bool accepted = false;
        for (std::size_t attempt = 0; attempt <= max_redraws; ++attempt)
        {
            HapState n1 = step_gauss_markov(prev1, params1, draw_noise(rng));
            HapState n2 = step_gauss_markov(prev2, params2, draw_noise(rng));
            if (rot1)
                n1 = apply_random_rotation(n1, rng);
            if (rot2)
                n2 = apply_random_rotation(n2, rng);
            n1.t = n2.t = t;
            n1.position = p1;
            n2.position = p2;
            // Look one step ahead: the drawn velocities must keep the pair in range.
            if ((integrate_position(n1, dt) - integrate_position(n2, dt)).norm() <= max_d3d &&
                (p1 - p2).norm() <= max_d3d)
            {
                out.hap1.states.push_back(n1);
                out.hap2.states.push_back(n2);
                accepted = true;
                break;
            }
            ++out.rejected_steps;
        }
        if (!accepted)
            throw std::runtime_error("generate_constrained_pair: no admissible step after " +
                                     std::to_string(max_redraws) + " redraws at t=" + std::to_string(t));
    }
    return out;
}

} // namespace hapsim::mobility
