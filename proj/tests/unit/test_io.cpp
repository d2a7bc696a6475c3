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

#include <filesystem>
#include <fstream>

#include "hapsim/io.hpp"

using namespace hapsim;

TEST_CASE("number formatting is stable")
{
    CHECK(io::format_number(0.0) == "0");
    CHECK(io::format_number(-0.0) == "0");
    CHECK(io::format_number(16.0) == "16");
    CHECK(io::format_number(0.25) == "0.25");
    CHECK(io::format_number(1.0 / 3.0) == "0.333333333333");
}

TEST_CASE("CSV text layout")
{
    io::Table t{"x.csv", {"note"}, {"a", "b"}, {{1.0, 2.5}, {-3.0, 0.0}}};
    CHECK(io::to_csv(t) == "# note\na,b\n1,2.5\n-3,0\n");
    CHECK(t.column("b") == 1);
    CHECK_THROWS(t.column("c"));
}

TEST_CASE("write and read back")
{
    const auto dir = std::filesystem::temp_directory_path() / "hapsim_io_test";
    std::filesystem::remove_all(dir);
    io::Table t{"y.csv", {"c1"}, {"theta_deg", "gain_abs"}, {{0.0, 16.0}, {0.25, 15.5}}};
    const auto p = io::write_table(dir, t);
    CHECK(std::filesystem::exists(p));
    for (const auto &e : std::filesystem::directory_iterator(dir))
        CHECK(e.path().extension() == ".csv");
    const auto back = io::read_csv(p);
    CHECK(back.columns == t.columns);
    CHECK(back.rows == t.rows);
    CHECK(back.comments == t.comments);
    CHECK_THROWS(io::read_csv(dir / "absent.csv"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("git describe is never empty")
{
    CHECK_FALSE(io::git_describe().empty());
}
