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

#include "hapsim/common.hpp"
#include "hapsim/mobility.hpp"

namespace hapsim::kinematics {

struct LinkGeometry
{
    double d2d = 0.0;      // horizontal distance (m)
    double d3d = 0.0;      // slant distance (m)
    double rel_elev = 0.0; // elevation of HAP-1 relative to HAP-2 (rad)
    bool degenerate = false; // coincident positions
};

// Phase angles of both ends. Index 1 is the transmitter (HAP-1), index 2 the
// receiver (HAP-2).
struct PhaseAngles
{
    double theta_tx = 0.0;
    double phi_tx = 0.0;
    double theta_rx = 0.0;
    double phi_rx = 0.0;
};

LinkGeometry link_geometry(const Vec3 &pos1, const Vec3 &pos2);

// LoS Doppler frequency of the HAP-1 -> HAP-2 link for the given phase angles.
double doppler_frequency(const mobility::HapState &s1, const mobility::HapState &s2, const PhaseAngles &phases,
                         double lambda);

// Upper bound (v1 + v2) / lambda, used as f_dmax.
double max_doppler(const mobility::HapState &s1, const mobility::HapState &s2, double lambda);

// Phase angles under line of sight: theta_tx ~ 0, theta_rx ~ pi, both
// elevations equal to the relative elevation.
PhaseAngles los_phase_approximation(const LinkGeometry &geom);

} // namespace hapsim::kinematics
