// SPDX-License-Identifier: Apache-2.0
//
// harqmimo: antenna dimensioning and outage analysis for MIMO-HARQ links
// Copyright (C) 2026 The harqmimo authors
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

#include "harqmimo/cli/table.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <json.hpp>

namespace harqmimo::cli {

std::string format_real(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    return fmt::format("{}", value);
}

Row& Row::set(const std::string& column, std::string value) {
    for (auto& cell : cells_) {
        if (cell.first == column) {
            cell.second = std::move(value);
            return *this;
        }
    }
    cells_.emplace_back(column, std::move(value));
    return *this;
}

Row& Row::set(const std::string& column, double value) { return set(column, format_real(value)); }
Row& Row::set(const std::string& column, int value) { return set(column, std::to_string(value)); }
Row& Row::set(const std::string& column, std::uint64_t value) { return set(column, std::to_string(value)); }

const std::string* Row::find(const std::string& column) const {
    for (const auto& cell : cells_) {
        if (cell.first == column) return &cell.second;
    }
    return nullptr;
}

void Table::add(const Row& row) {
    for (const auto& cell : row.cells()) {
        if (std::find(columns_.begin(), columns_.end(), cell.first) == columns_.end()) columns_.push_back(cell.first);
    }
    rows_.push_back(row);
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + '"';
}

} // namespace

void Table::write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << csv_field(columns_[i]);
    os << '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            const std::string* v = row.find(columns_[i]);
            os << (i ? "," : "") << (v ? csv_field(*v) : std::string());
        }
        os << '\n';
    }
}

void Table::write_json(std::ostream& os) const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (const auto& column : columns_) {
            const std::string* v = row.find(column);
            obj[column] = v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
        }
        arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << '\n';
}

} // namespace harqmimo::cli
