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

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace hapsim {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kSpeedOfLight = 299792458.0;

inline constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

// Wraps to [-pi, pi]. +pi is kept as +pi.
inline double wrap_angle(double a)
{
    if (a >= -kPi && a <= kPi)
        return a;
    double w = std::remainder(a, kTwoPi);
    if (w < -kPi)
        w += kTwoPi;
    return w;
}

inline double wavelength(double frequency_hz) { return kSpeedOfLight / frequency_hz; }

// Configuration problems (bad parameters, malformed files). Carries the
// offending field paths so the CLI can report them one per line.
class ConfigError : public std::invalid_argument
{
  public:
    explicit ConfigError(const std::string &msg) : std::invalid_argument(msg), fields_{msg} {}
    explicit ConfigError(std::vector<std::string> fields)
        : std::invalid_argument(join(fields)), fields_(std::move(fields)) {}

    const std::vector<std::string> &fields() const { return fields_; }

  private:
    static std::string join(const std::vector<std::string> &f)
    {
        std::string s;
        for (const auto &x : f)
        {
            if (!s.empty())
                s += "; ";
            s += x;
        }
        return s;
    }
    std::vector<std::string> fields_;
};

} // namespace hapsim
