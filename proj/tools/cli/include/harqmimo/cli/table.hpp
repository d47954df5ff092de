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

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace harqmimo::cli {

/// Ordered (column, value) pairs; values are already formatted.
class Row {
public:
    Row& set(const std::string& column, std::string value);
    Row& set(const std::string& column, double value);
    Row& set(const std::string& column, int value);
    Row& set(const std::string& column, std::uint64_t value);
    Row& set(const std::string& column, const char* value) { return set(column, std::string(value)); }
    Row& set(const std::string& column, bool value) = delete;

    const std::vector<std::pair<std::string, std::string>>& cells() const { return cells_; }
    const std::string* find(const std::string& column) const;

private:
    std::vector<std::pair<std::string, std::string>> cells_;
};

/// Rows with the union of their columns, in first-seen order.
class Table {
public:
    void add(const Row& row);

    const std::vector<std::string>& columns() const { return columns_; }
    std::size_t size() const { return rows_.size(); }
    const Row& row(std::size_t i) const { return rows_[i]; }

    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;

private:
    std::vector<std::string> columns_;
    std::vector<Row> rows_;
};

std::string format_real(double value);

} // namespace harqmimo::cli
