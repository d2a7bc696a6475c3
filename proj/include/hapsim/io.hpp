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

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace hapsim::io {

struct Table
{
    std::string file;                  // e.g. "fig5_beam_gain.csv"
    std::vector<std::string> comments; // emitted as leading "# " lines
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::size_t column(const std::string &name) const;
};

// %.12g, with -0 printed as 0.
std::string format_number(double v);

std::string to_csv(const Table &t);

// Writes to a sibling temporary file and renames it over the target.
void write_atomic(const std::filesystem::path &path, const std::string &content);

std::filesystem::path write_table(const std::filesystem::path &dir, const Table &t);

// Parses CSV produced by to_csv (comment lines skipped).
Table read_csv(const std::filesystem::path &path);

std::string git_describe();

} // namespace hapsim::io
