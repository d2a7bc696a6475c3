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

#include "hapsim/kinematics.hpp"

namespace hapsim::kinematics {

LinkGeometry link_geometry(const Vec3 &pos1, const Vec3 &pos2)
{
    LinkGeometry g;
    const Vec3 delta = pos1 - pos2;
    g.d2d = std::hypot(delta.x(), delta.y());
    g.d3d = delta.norm();
    const double dh = delta.z();
    if (g.d3d == 0.0)
    {
        g.degenerate = true;
        g.rel_elev = 0.0;
    }
    else if (g.d2d == 0.0)
        g.rel_elev = std::copysign(kPi / 2.0, dh);
    else
        g.rel_elev = std::atan(dh / g.d2d);
    return g;
}

namespace {

double projection(double speed, double theta, double phi, double dir_az, double dir_el)
{
    return speed * (std::cos(theta - dir_az) * std::cos(phi) * std::cos(dir_el) + std::sin(phi) * std::sin(dir_el));
}

} // namespace

double doppler_frequency(const mobility::HapState &s1, const mobility::HapState &s2, const PhaseAngles &phases,
                         double lambda)
{
    if (!(lambda > 0.0))
        throw std::invalid_argument("doppler_frequency: wavelength must be positive");
    return (projection(s1.speed(), phases.theta_tx, phases.phi_tx, s1.dir_az(), s1.dir_el()) +
            projection(s2.speed(), phases.theta_rx, phases.phi_rx, s2.dir_az(), s2.dir_el())) /
           lambda;
}

double max_doppler(const mobility::HapState &s1, const mobility::HapState &s2, double lambda)
{
    return (s1.speed() + s2.speed()) / lambda;
}

PhaseAngles los_phase_approximation(const LinkGeometry &geom)
{
    PhaseAngles p;
    p.theta_tx = 0.0;
    p.theta_rx = kPi;
    p.phi_tx = geom.rel_elev;
    p.phi_rx = geom.rel_elev;
    return p;
}

} // namespace hapsim::kinematics
