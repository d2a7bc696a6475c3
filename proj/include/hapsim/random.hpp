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
#include <random>

#include "hapsim/common.hpp"

namespace hapsim {

// SplitMix64 finaliser; used to derive independent stream seeds.
std::uint64_t mix64(std::uint64_t x);

// Stream seed for (base seed, index). Trials, sweep values and grid rows each
// get their own stream so results do not depend on scheduling.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// FNV-1a over bytes.
std::uint64_t fnv1a64(std::string_view bytes);

class RandomStream
{
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(mix64(seed)) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    double normal() { return normal_(engine_); }
    double exponential(double rate) { return std::exponential_distribution<double>(rate)(engine_); }
    double gamma(double shape, double scale) { return std::gamma_distribution<double>(shape, scale)(engine_); }

    // Circular complex Gaussian with E|z|^2 = 1.
    cplx complex_normal()
    {
        const double s = std::sqrt(0.5);
        double re = normal_(engine_);
        double im = normal_(engine_);
        return {s * re, s * im};
    }

    std::mt19937_64 &engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace hapsim
