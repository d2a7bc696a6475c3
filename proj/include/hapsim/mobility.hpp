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
#include <span>
#include <vector>

#include "hapsim/common.hpp"
#include "hapsim/random.hpp"

namespace hapsim::mobility {

// Gauss-Markov tuning for one platform. The three processes (speed, azimuth
// direction, elevation direction) share the driver standard deviation.
struct MobilityParams
{
    double alpha_v = 0.5919;
    double alpha_da = 0.5919;
    double alpha_de = 0.5919;
    double mu_v = 100.0;  // m/s
    double mu_da = 0.0;   // rad
    double mu_de = 0.0;   // rad
    double noise_std = 1.0;
    double rotation_rate = 0.0; // expected sudden rotations per second

    void validate() const;
};

// Raw process values. The recursion runs on these; clamping and wrapping are
// applied only when the state is read through HapState accessors.
struct ProcessValues
{
    double speed = 0.0;
    double az = 0.0;
    double el = 0.0;
};

struct HapState
{
    double t = 0.0;
    Vec3 position = Vec3::Zero(); // ENU, z is altitude
    ProcessValues process;

    double speed() const { return process.speed > 0.0 ? process.speed : 0.0; }
    double dir_az() const { return wrap_angle(process.az); }
    double dir_el() const { return wrap_angle(process.el); }

    // Unit vector of the direction of motion.
    Vec3 heading() const;
};

HapState make_state(const Vec3 &position, double speed, double dir_az, double dir_el, double t = 0.0);

struct NoiseDraw
{
    double x = 0.0; // speed driver
    double y = 0.0; // azimuth driver
    double z = 0.0; // elevation driver
};

struct RotationDraw
{
    double az = 0.0;
    double el = 0.0;
};

struct Trajectory
{
    double dt = 1.0;
    std::vector<HapState> states;
};

// One Gauss-Markov iteration of speed, azimuth and elevation direction.
// Time and position are left untouched.
HapState step_gauss_markov(const HapState &state, const MobilityParams &params, const NoiseDraw &noise);

// Direct evaluation of the i-th iterate from the initial values and the
// driver history. `noise_history.size()` must equal `i`.
ProcessValues closed_form_state(const HapState &initial, const MobilityParams &params, std::size_t i,
                                std::span<const NoiseDraw> noise_history);

// Replaces both directions by values independent of the current ones.
HapState apply_random_rotation(const HapState &state, const RotationDraw &draw);
HapState apply_random_rotation(const HapState &state, RandomStream &rng);

Vec3 integrate_position(const HapState &state, double dt);

NoiseDraw draw_noise(RandomStream &rng);

Trajectory generate_trajectory(const HapState &initial, const MobilityParams &params, double duration, double dt,
                               std::uint64_t seed);

struct TrajectoryPair
{
    Trajectory hap1;
    Trajectory hap2;
    std::size_t rejected_steps = 0;
};

// Steps both platforms jointly and re-draws a whole step (drivers and rotated
// angles; rotation instants are fixed up front) whenever the slant distance
// would exceed `max_d3d`.
TrajectoryPair generate_constrained_pair(const HapState &initial1, const MobilityParams &params1,
                                         const HapState &initial2, const MobilityParams &params2, double duration,
                                         double dt, double max_d3d, std::uint64_t seed,
                                         std::size_t max_redraws = 10000);

} // namespace hapsim::mobility
