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

#include <doctest.h>

#include <set>

#include "hapsim/random.hpp"

using namespace hapsim;

TEST_CASE("derive_seed separates indices and bases")
{
    std::set<std::uint64_t> seen;
    for (std::uint64_t b = 0; b < 8; ++b)
        for (std::uint64_t i = 0; i < 256; ++i)
            seen.insert(derive_seed(b, i));
    CHECK(seen.size() == 8 * 256);
    CHECK(derive_seed(3, 7) == derive_seed(3, 7));
}

TEST_CASE("fnv1a64 matches published vectors")
{
    CHECK(fnv1a64("") == 0xCBF29CE484222325ULL);
    CHECK(fnv1a64("a") == 0xAF63DC4C8601EC8CULL);
    CHECK(fnv1a64("foobar") == 0x85944171F73967E8ULL);
}

TEST_CASE("complex_normal has unit mean power")
{
    RandomStream rng(42);
    double acc = 0.0;
    double re = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i)
    {
        const cplx z = rng.complex_normal();
        acc += std::norm(z);
        re += z.real();
    }
    CHECK(acc / n == doctest::Approx(1.0).epsilon(0.01));
    CHECK(std::abs(re / n) < 0.01);
}

TEST_CASE("streams built from the same seed agree")
{
    RandomStream a(9), b(9);
    for (int i = 0; i < 100; ++i)
        CHECK(a.normal() == b.normal());
}
