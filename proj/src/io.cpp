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

#include "hapsim/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#ifndef HAPSIM_GIT_DESCRIBE
#define HAPSIM_GIT_DESCRIBE "unknown"
#endif

namespace hapsim::io {

std::size_t Table::column(const std::string &name) const
{
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name)
            return i;
    throw std::out_of_range("table " + file + ": no column '" + name + "'");
}

std::string format_number(double v)
{
    if (v == 0.0)
        return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string to_csv(const Table &t)
{
    std::string out;
    for (const auto &c : t.comments)
        out += "# " + c + "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        out += (i ? "," : "") + t.columns[i];
    out += "\n";
    for (const auto &row : t.rows)
    {
        if (row.size() != t.columns.size())
            throw std::logic_error("table " + t.file + ": row width does not match header");
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            if (i)
                out += ",";
            out += format_number(row[i]);
        }
        out += "\n";
    }
    return out;
}

void write_atomic(const std::filesystem::path &path, const std::string &content)
{
    namespace fs = std::filesystem;
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw std::runtime_error(tmp.string() + ": cannot open for writing");
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        f.flush();
        if (!f)
        {
            f.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error(tmp.string() + ": write failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec)
    {
        fs::remove(tmp, ec);
        throw std::runtime_error(path.string() + ": rename failed");
    }
}

std::filesystem::path write_table(const std::filesystem::path &dir, const Table &t)
{
    std::filesystem::create_directories(dir);
    const auto path = dir / t.file;
    write_atomic(path, to_csv(t));
    return path;
}

Table read_csv(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error(path.string() + ": cannot open");
    Table t;
    t.file = path.filename().string();
    std::string line;
    bool header = false;
    while (std::getline(in, line))
    {
        if (line.empty())
            continue;
        if (line[0] == '#')
        {
            t.comments.push_back(line.size() > 2 ? line.substr(2) : "");
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        if (!header)
        {
            while (std::getline(ss, cell, ','))
                t.columns.push_back(cell);
            header = true;
            continue;
        }
        std::vector<double> row;
        while (std::getline(ss, cell, ','))
            row.push_back(std::stod(cell));
        if (row.size() != t.columns.size())
            throw std::runtime_error(path.string() + ": ragged row");
        t.rows.push_back(std::move(row));
    }
    if (!header)
        throw std::runtime_error(path.string() + ": missing header");
    return t;
}

std::string git_describe() { return HAPSIM_GIT_DESCRIBE; }

} // namespace hapsim::io
