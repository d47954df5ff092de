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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace harqmimo::cli {

/// Every parameter a command can read. List-valued fields span a grid; the
/// commands evaluate their Cartesian product.
struct RunConfig {
    std::string command;
    int regime = 1;
    std::vector<int> nt{1};
    std::vector<int> nr{1};
    std::vector<double> k{1.0};
    std::vector<std::string> fading{"quasi"};
    std::vector<int> m{1};
    std::vector<int> t{1};
    std::vector<double> rate{1.0};
    std::vector<double> snr_db{5.0};
    std::vector<double> theta{1e-3};
    std::vector<double> beta{0.0};
    std::optional<double> pa_eps;
    std::optional<double> pa_theta;
    std::optional<double> pa_max_db;
    std::vector<double> power_cons_db;
    std::vector<double> schedule_db;
    std::optional<std::uint64_t> samples;
    std::uint64_t seed = 1;
    int workers = 1;
    std::vector<std::string> method;
    std::string preset;
    std::string of;
    std::string out;
    std::string format = "csv";

    bool has_pa() const { return pa_eps || pa_theta || pa_max_db; }
};

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);

/// Flag names accepted on the command line and in config files.
const std::vector<std::string>& flag_names();

/// Applies one flag value ("--rate 1,2,3" is apply_flag(c, "rate", "1,2,3")).
/// Lists are comma separated; numeric lists also accept start:stop:step.
/// Throws std::invalid_argument on malformed input.
void apply_flag(RunConfig& config, const std::string& name, const std::string& value);

std::vector<double> parse_real_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);
std::uint64_t parse_count(const std::string& text);

} // namespace harqmimo::cli
