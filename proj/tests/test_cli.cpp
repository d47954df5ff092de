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

#include "harqmimo/cli/app.hpp"
#include "harqmimo/cli/run_config.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace cli = harqmimo::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

using Record = std::map<std::string, std::string>;

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cell += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cell += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            cells.push_back(cell);
            cell.clear();
        } else {
            cell += ch;
        }
    }
    cells.push_back(cell);
    return cells;
}

std::vector<Record> parse_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::getline(is, line);
    const auto header = split_line(line);
    std::vector<Record> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto cells = split_line(line);
        Record r;
        for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i) r[header[i]] = cells[i];
        rows.push_back(r);
    }
    return rows;
}

} // namespace

TEST(Cli, DimensionSearchExample) {
    const Result r = run({"dimension", "--case", "1", "--nt", "1", "--fading", "quasi", "--m", "1", "--snr-db", "5",
                          "--rate", "3", "--theta", "1e-3", "--method", "search"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].at("n_r_hat"), "15");
    EXPECT_EQ(rows[0].at("method"), "search");
}

TEST(Cli, VanishingQuantileCase3) {
    const Result r =
        run({"dimension", "--theta", "0.5", "--case", "3", "--k", "1", "--m", "1", "--snr-db", "-10", "--rate", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(std::stod(parse_csv(r.out).at(0).at("raw_value")), 20.0, 1e-9);
}

TEST(Cli, InfeasibleCase2ExitsWithThree) {
    const Result r = run({"dimension", "--case", "2", "--nr", "1", "--snr-db", "0", "--rate", "1"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("N_r ln(1 + snr)"), std::string::npos);
}

TEST(Cli, SearchBoundExitsWithFour) {
    const Result r = run({"dimension", "--case", "2", "--nr", "1", "--snr-db", "0", "--rate", "1", "--method", "search"});
    EXPECT_EQ(r.code, 4);
}

TEST(Cli, SimulateSisoWithinPrintedInterval) {
    const Result r = run({"simulate", "--snr-db", "5", "--rate", "1", "--samples", "1e6", "--seed", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto row = parse_csv(r.out).at(0);
    const double exact = std::stod(row.at("siso_closed"));
    EXPECT_NEAR(exact, 0.4192, 1e-4);
    EXPECT_LE(std::stod(row.at("ci_low")), exact);
    EXPECT_GE(std::stod(row.at("ci_high")), exact);
    EXPECT_EQ(row.at("samples"), "1000000");
}

TEST(Cli, SimulateZeroRate) {
    const Result r = run({"simulate", "--rate", "0", "--samples", "10000"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(parse_csv(r.out).at(0).at("p_hat"), "0");
}

TEST(Cli, SimulateIsByteIdenticalAcrossRunsAndWorkers) {
    const std::vector<std::string> base{"simulate", "--nt", "2", "--nr", "2", "--fading", "fast", "--m", "2", "--t", "2",
                                        "--rate", "4", "--samples", "40000", "--seed", "12"};
    const Result a = run(base);
    const Result b = run(base);
    auto with_workers = base;
    with_workers.insert(with_workers.end(), {"--workers", "3"});
    const Result c = run(with_workers);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"sweep"}).code, 2);
    const Result empty = run({"sweep", "--of", "dimension", "--rate", ""});
    EXPECT_EQ(empty.code, 2);
    EXPECT_NE(empty.err.find("Usage"), std::string::npos);
    EXPECT_EQ(run({"sweep", "--preset", "fig99"}).code, 2);
    EXPECT_EQ(run({"dimension", "--case", "7"}).code, 2);
    EXPECT_EQ(run({"dimension", "--rate", "abc"}).code, 2);
    EXPECT_EQ(run({"dimension", "--bogus", "1"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"dimension", "--theta", "0.7"}).code, 2);
    EXPECT_EQ(run({"dimension", "--case", "4", "--k", "1", "--snr-db", "15", "--method", "search,closed", "--rate",
                   "8"}).code,
              0);
    EXPECT_EQ(run({"gamma", "--case", "4", "--nt", "4", "--nr", "4", "--snr-db", "15"}).code, 2);
    EXPECT_EQ(run({"simulate", "--nt", "4", "--nr", "2", "--beta", "0.5", "--samples", "10"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Fig5aPresetHeadline) {
    const Result r = run({"sweep", "--preset", "fig5a", "--samples", "1e6", "--seed", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    bool found = false;
    for (const auto& row : parse_csv(r.out)) {
        if (row.at("series") == "min" && row.at("rate") == "3" && row.at("theta") == "0.001") {
            EXPECT_EQ(row.at("n_r_hat"), "16");
            found = true;
        }
    }
    EXPECT_TRUE(found);
}

TEST(Cli, Fig1ClosedAndSearchAgree) {
    const Result closed = run({"sweep", "--preset", "fig1", "--method", "closed"});
    const Result search = run({"sweep", "--preset", "fig1", "--method", "search"});
    ASSERT_EQ(closed.code, 0);
    ASSERT_EQ(search.code, 0);
    const auto a = parse_csv(closed.out);
    const auto b = parse_csv(search.out);
    ASSERT_EQ(a.size(), b.size());
    ASSERT_EQ(a.size(), 2u * 4u * 16u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        ASSERT_EQ(a[i].at("status"), "ok");
        EXPECT_EQ(a[i].at("rate"), b[i].at("rate"));
        EXPECT_LE(std::abs(std::stoi(a[i].at("n_r_hat")) - std::stoi(b[i].at("n_r_hat"))), 2)
            << "rate " << a[i].at("rate") << " snr " << a[i].at("snr_db") << " theta " << a[i].at("theta");
    }
}

TEST(Cli, RowsReproduceFromTheirOwnParameters) {
    const Result sweep = run({"sweep", "--preset", "fig3"});
    ASSERT_EQ(sweep.code, 0);
    for (const auto& row : parse_csv(sweep.out)) {
        if (row.at("status") != "ok") continue;
        const Result again = run({"dimension", "--case", row.at("case"), "--nt", row.at("n_t"), "--fading",
                                  row.at("fading"), "--m", row.at("m"), "--t", row.at("t"), "--rate", row.at("rate"),
                                  "--snr-db", row.at("snr_db"), "--theta", row.at("theta"), "--method",
                                  row.at("method")});
        ASSERT_EQ(again.code, 0) << again.err;
        const auto rerun = parse_csv(again.out).at(0);
        EXPECT_EQ(rerun.at("raw_value"), row.at("raw_value"));
        EXPECT_EQ(rerun.at("n_r_hat"), row.at("n_r_hat"));
    }
}

TEST(Cli, ConfigRoundTripIsIdempotent) {
    const auto dir = std::filesystem::temp_directory_path();
    const auto first = dir / "harqmimo_cfg_a.json";
    const Result dump = run({"dimension", "--case", "4", "--k", "0.5,2", "--rate", "1:4:1", "--snr-db", "15",
                             "--theta", "1e-3", "--samples", "1e7", "--pa-eps", "0.65", "--schedule", "0,3",
                             "--dump-config"});
    ASSERT_EQ(dump.code, 0);
    {
        std::ofstream(first) << dump.out;
    }
    const Result again = run({"--config", first.string(), "--dump-config"});
    ASSERT_EQ(again.code, 0) << again.err;
    EXPECT_EQ(again.out, dump.out);

    const auto j = nlohmann::json::parse(dump.out);
    EXPECT_EQ(j.at("rate").size(), 4u);
    EXPECT_EQ(j.at("samples").get<std::uint64_t>(), 10'000'000u);
    cli::RunConfig c = j.get<cli::RunConfig>();
    EXPECT_EQ(nlohmann::json(c), j);

    // Flags override file values.
    const Result overridden = run({"--config", first.string(), "--rate", "2", "--dump-config"});
    EXPECT_EQ(nlohmann::json::parse(overridden.out).at("rate"), nlohmann::json::array({2.0}));

    const Result via_file = run({"--config", first.string(), "--method", "closed", "--schedule", ""});
    EXPECT_EQ(via_file.code, 2);
    std::filesystem::remove(first);
}

TEST(Cli, JsonOutputMirrorsCsv) {
    const Result csv = run({"outage", "--nr", "4,8", "--rate", "1"});
    const Result json = run({"outage", "--nr", "4,8", "--rate", "1", "--format", "json"});
    ASSERT_EQ(json.code, 0);
    const auto rows = parse_csv(csv.out);
    const auto arr = nlohmann::json::parse(json.out);
    ASSERT_EQ(arr.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (const auto& [key, value] : rows[i]) {
            const auto& cell = arr[i].at(key);
            if (cell.is_null()) {
                EXPECT_EQ(value, "");
            } else if (cell.is_string()) {
                EXPECT_EQ(cell.get<std::string>(), value);
            } else {
                EXPECT_EQ(cell.dump(), value) << key;
            }
        }
    }
}

TEST(Cli, WritesOutputFile) {
    const auto path = std::filesystem::temp_directory_path() / "harqmimo_out.csv";
    const Result r = run({"rate", "--nt", "64", "--nr", "2", "--case", "2", "--fading", "fast", "--m", "2", "--t", "2",
                          "--theta", "1e-4", "--snr-db", "10", "--out", path.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_GT(std::stod(parse_csv(ss.str()).at(0).at("supported_rate")), 0.0);
    std::filesystem::remove(path);
}

TEST(Cli, ListParsing) {
    EXPECT_EQ(cli::parse_real_list("1:3:0.5"), (std::vector<double>{1.0, 1.5, 2.0, 2.5, 3.0}));
    EXPECT_EQ(cli::parse_int_list("1,5"), (std::vector<int>{1, 5}));
    EXPECT_EQ(cli::parse_count("1e8"), 100'000'000u);
    EXPECT_THROW(cli::parse_count("1.5"), std::invalid_argument);
    EXPECT_THROW(cli::parse_real_list("1,,2"), std::invalid_argument);
    EXPECT_THROW(cli::parse_real_list("3:1:1"), std::invalid_argument);
}

TEST(Cli, ExecutableExitCodes) {
    const std::string exe = HARQMIMO_CLI_PATH;
    auto code_of = [&](const std::string& args) {
        const int status = std::system((exe + " " + args + " >/dev/null 2>&1").c_str());
        return WEXITSTATUS(status);
    };
    EXPECT_EQ(code_of("dimension --case 1 --nt 1 --snr-db 5 --rate 3 --theta 1e-3"), 0);
    EXPECT_EQ(code_of("dimension --case 2 --nr 1 --snr-db 0 --rate 1"), 3);
    EXPECT_EQ(code_of("dimension --case 2 --nr 1 --snr-db 0 --rate 1 --method search"), 4);
    EXPECT_EQ(code_of("sweep"), 2);
}
