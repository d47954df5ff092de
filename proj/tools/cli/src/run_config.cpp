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

#include "harqmimo/cli/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace harqmimo::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep)) parts.push_back(item);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double parse_real(const std::string& raw) {
    const std::string s = trim(raw);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument("not a finite number: '" + s + "'");
    return v;
}

int parse_int(const std::string& raw) {
    const double v = parse_real(raw);
    if (v != std::floor(v) || std::fabs(v) > 2e9) throw std::invalid_argument("not an integer: '" + trim(raw) + "'");
    return static_cast<int>(v);
}

std::vector<std::string> parse_word_list(const std::string& text) {
    std::vector<std::string> out;
    for (const auto& part : split(text, ',')) {
        const std::string w = trim(part);
        if (w.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
        out.push_back(w);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

template <class T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& v) {
    if (v) {
        j[key] = *v;
    } else {
        j[key] = nullptr;
    }
}

template <class T>
void get_optional(const nlohmann::json& j, const char* key, std::optional<T>& v) {
    if (!j.contains(key)) return;
    if (j.at(key).is_null()) {
        v.reset();
    } else {
        v = j.at(key).get<T>();
    }
}

template <class T>
void get_if(const nlohmann::json& j, const char* key, T& v) {
    if (j.contains(key)) v = j.at(key).get<T>();
}

} // namespace

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& part : split(text, ',')) {
        const std::string item = trim(part);
        if (item.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
        const auto range = split(item, ':');
        if (range.size() == 1) {
            out.push_back(parse_real(item));
            continue;
        }
        if (range.size() != 3) throw std::invalid_argument("range must be start:stop:step, got '" + item + "'");
        const double start = parse_real(range[0]);
        const double stop = parse_real(range[1]);
        const double step = parse_real(range[2]);
        if (!(step > 0.0) || stop < start) throw std::invalid_argument("range needs step > 0 and stop >= start");
        const double span = (stop - start) / step;
        if (span > 1e6) throw std::invalid_argument("range has too many points");
        const auto count = static_cast<long>(std::floor(span + 1e-9)) + 1;
        for (long i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (double v : parse_real_list(text)) {
        if (v != std::floor(v) || std::fabs(v) > 2e9) throw std::invalid_argument("not an integer in list '" + text + "'");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

std::uint64_t parse_count(const std::string& text) {
    const double v = parse_real(text);
    if (!(v >= 1.0) || v != std::floor(v) || v > 1e15) {
        throw std::invalid_argument("expected a positive integer count, got '" + trim(text) + "'");
    }
    return static_cast<std::uint64_t>(v);
}

const std::vector<std::string>& flag_names() {
    static const std::vector<std::string> names{
        "case", "nt", "nr", "k", "fading", "m", "t", "rate", "snr-db", "theta", "beta", "pa-eps", "pa-theta",
        "pa-max-db", "power-cons-db", "schedule", "samples", "seed", "workers", "method", "preset", "of", "out",
        "format"};
    return names;
}

void apply_flag(RunConfig& c, const std::string& name, const std::string& value) {
    if (name == "case") {
        c.regime = parse_int(value);
        if (c.regime < 1 || c.regime > 4) throw std::invalid_argument("--case must be 1, 2, 3 or 4");
    } else if (name == "nt") {
        c.nt = parse_int_list(value);
    } else if (name == "nr") {
        c.nr = parse_int_list(value);
    } else if (name == "k") {
        c.k = parse_real_list(value);
    } else if (name == "fading") {
        c.fading = parse_word_list(value);
        for (const auto& f : c.fading) {
            if (f != "quasi" && f != "slow" && f != "fast") {
                throw std::invalid_argument("--fading must be quasi, slow or fast, got '" + f + "'");
            }
        }
    } else if (name == "m") {
        c.m = parse_int_list(value);
    } else if (name == "t") {
        c.t = parse_int_list(value);
    } else if (name == "rate") {
        c.rate = parse_real_list(value);
    } else if (name == "snr-db") {
        c.snr_db = parse_real_list(value);
    } else if (name == "theta") {
        c.theta = parse_real_list(value);
    } else if (name == "beta") {
        c.beta = parse_real_list(value);
    } else if (name == "pa-eps") {
        c.pa_eps = parse_real(value);
    } else if (name == "pa-theta") {
        c.pa_theta = parse_real(value);
    } else if (name == "pa-max-db") {
        c.pa_max_db = parse_real(value);
    } else if (name == "power-cons-db") {
        c.power_cons_db = parse_real_list(value);
    } else if (name == "schedule") {
        c.schedule_db = parse_real_list(value);
    } else if (name == "samples") {
        c.samples = parse_count(value);
    } else if (name == "seed") {
        const std::string s = trim(value);
        std::size_t used = 0;
        try {
            c.seed = std::stoull(s, &used, 0);
        } catch (const std::exception&) {
            throw std::invalid_argument("--seed must be a non-negative integer");
        }
        if (used != s.size()) throw std::invalid_argument("--seed must be a non-negative integer");
    } else if (name == "workers") {
        c.workers = static_cast<int>(parse_count(value));
    } else if (name == "method") {
        c.method = parse_word_list(value);
    } else if (name == "preset") {
        c.preset = trim(value);
    } else if (name == "of") {
        c.of = trim(value);
    } else if (name == "out") {
        c.out = value;
    } else if (name == "format") {
        c.format = trim(value);
        if (c.format != "csv" && c.format != "json") throw std::invalid_argument("--format must be csv or json");
    } else {
        throw std::invalid_argument("unknown flag --" + name);
    }
}

void to_json(nlohmann::json& j, const RunConfig& c) {
    j = nlohmann::json::object();
    j["command"] = c.command;
    j["case"] = c.regime;
    j["nt"] = c.nt;
    j["nr"] = c.nr;
    j["k"] = c.k;
    j["fading"] = c.fading;
    j["m"] = c.m;
    j["t"] = c.t;
    j["rate"] = c.rate;
    j["snr_db"] = c.snr_db;
    j["theta"] = c.theta;
    j["beta"] = c.beta;
    put_optional(j, "pa_eps", c.pa_eps);
    put_optional(j, "pa_theta", c.pa_theta);
    put_optional(j, "pa_max_db", c.pa_max_db);
    j["power_cons_db"] = c.power_cons_db;
    j["schedule_db"] = c.schedule_db;
    put_optional(j, "samples", c.samples);
    j["seed"] = c.seed;
    j["workers"] = c.workers;
    j["method"] = c.method;
    j["preset"] = c.preset;
    j["of"] = c.of;
    j["out"] = c.out;
    j["format"] = c.format;
}

void from_json(const nlohmann::json& j, RunConfig& c) {
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    for (const auto& [key, _] : j.items()) {
        static const std::vector<std::string> known{
            "command", "case",   "nt",          "nr",          "k",       "fading", "m",      "t",
            "rate",    "snr_db", "theta",       "beta",        "pa_eps",  "pa_theta", "pa_max_db", "power_cons_db",
            "schedule_db", "samples", "seed",   "workers",     "method",  "preset", "of",     "out", "format"};
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw std::invalid_argument("unknown config key '" + key + "'");
        }
    }
    try {
        get_if(j, "command", c.command);
        get_if(j, "case", c.regime);
        get_if(j, "nt", c.nt);
        get_if(j, "nr", c.nr);
        get_if(j, "k", c.k);
        get_if(j, "fading", c.fading);
        get_if(j, "m", c.m);
        get_if(j, "t", c.t);
        get_if(j, "rate", c.rate);
        get_if(j, "snr_db", c.snr_db);
        get_if(j, "theta", c.theta);
        get_if(j, "beta", c.beta);
        get_optional(j, "pa_eps", c.pa_eps);
        get_optional(j, "pa_theta", c.pa_theta);
        get_optional(j, "pa_max_db", c.pa_max_db);
        get_if(j, "power_cons_db", c.power_cons_db);
        get_if(j, "schedule_db", c.schedule_db);
        get_optional(j, "samples", c.samples);
        get_if(j, "seed", c.seed);
        get_if(j, "workers", c.workers);
        get_if(j, "method", c.method);
        get_if(j, "preset", c.preset);
        get_if(j, "of", c.of);
        get_if(j, "out", c.out);
        get_if(j, "format", c.format);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed config: ") + e.what());
    }
}

} // namespace harqmimo::cli
