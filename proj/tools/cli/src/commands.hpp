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

#include "harqmimo/cli/run_config.hpp"
#include "harqmimo/cli/table.hpp"
#include "harqmimo/harqmimo.hpp"

#include <functional>
#include <string>
#include <vector>

namespace harqmimo::cli {

/// One point of a parameter grid.
struct Point {
    int regime = 1;
    std::string fading = "quasi";
    int m = 1;
    int t = 1;
    double rate = 1.0;
    double snr_db = 5.0;
    double theta = 1e-3;
    int nt = 1;
    int nr = 1;
    double k = 1.0;
    double beta = 0.0;
};

std::vector<Point> expand_grid(const RunConfig& config);

Regime regime_of(int regime);
Fading fading_of(const std::string& name);
HarqConfig harq_of(const Point& p);

/// Geometry from explicit counts; Cases 3/4 take k = n_t / n_r.
SystemGeometry geometry_of(const Point& p);
AntennaQuery query_of(const Point& p);

std::uint64_t default_samples(double theta);

/// Computes one row into `table`. With `tolerant`, failures become rows with
/// a status and note; otherwise the exception propagates.
void emit(Table& table, Row row, bool tolerant, const std::function<void(Row&)>& fill);

void dimension_rows(const Point& p, const std::vector<std::string>& methods, const RunConfig& config, Table& table,
                    bool tolerant);
void outage_rows(const Point& p, const RunConfig& config, Table& table, bool tolerant);
void rate_rows(const Point& p, const RunConfig& config, Table& table, bool tolerant);
void gamma_rows(const Point& p, const RunConfig& config, Table& table, bool tolerant);
void simulate_rows(const Point& p, const RunConfig& config, Table& table, bool tolerant);

/// Table for a named preset; throws std::invalid_argument for unknown names.
Table run_preset(const RunConfig& config);
const std::vector<std::string>& preset_names();
/// One-line description of a preset's fixed parameters.
std::string preset_summary(const std::string& name);

} // namespace harqmimo::cli
