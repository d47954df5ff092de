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

#include "commands.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

namespace harqmimo::cli {

namespace {

const char* kCommands = "dimension, simulate, outage, rate, gamma, sweep";

std::string usage_footer() {
    std::string s = "Commands: ";
    s += kCommands;
    s += "\nPresets:";
    for (const auto& n : preset_names()) s += "\n  " + n + std::string(7 - n.size(), ' ') + preset_summary(n);
    s += "\nNumeric lists accept comma-separated values and start:stop:step ranges.";
    s += "\nExit codes: 0 ok, 2 usage, 3 infeasible or no root, 4 search bound exceeded.";
    return s;
}

struct Parsed {
    RunConfig config;
    bool dump = false;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Table run_command(const RunConfig& c) {
    Table table;
    if (c.command == "sweep") {
        if (!c.preset.empty()) return run_preset(c);
        if (c.of.empty()) throw UsageError("sweep needs --preset or --of <command> with an explicit grid");
        if (c.of == "sweep") throw UsageError("--of must name a single-point command");
        RunConfig inner = c;
        inner.command = c.of;
        for (const Point& p : expand_grid(inner)) {
            if (inner.command == "dimension") {
                dimension_rows(p, c.method.empty() ? std::vector<std::string>{"closed"} : c.method, inner, table, true);
            } else if (inner.command == "outage") {
                outage_rows(p, inner, table, true);
            } else if (inner.command == "rate") {
                rate_rows(p, inner, table, true);
            } else if (inner.command == "gamma") {
                gamma_rows(p, inner, table, true);
            } else if (inner.command == "simulate") {
                simulate_rows(p, inner, table, true);
            } else {
                throw UsageError("unknown command for --of: '" + c.of + "'");
            }
        }
        return table;
    }

    const std::vector<Point> grid = expand_grid(c);
    for (const Point& p : grid) {
        if (c.command == "dimension") {
            dimension_rows(p, c.method.empty() ? std::vector<std::string>{"closed"} : c.method, c, table, false);
        } else if (c.command == "outage") {
            outage_rows(p, c, table, false);
        } else if (c.command == "rate") {
            rate_rows(p, c, table, false);
        } else if (c.command == "gamma") {
            gamma_rows(p, c, table, false);
        } else if (c.command == "simulate") {
            simulate_rows(p, c, table, false);
        } else {
            throw UsageError("unknown command '" + c.command + "'");
        }
    }
    return table;
}

void write_table(const Table& table, const RunConfig& c, std::ostream& out) {
    std::ofstream file;
    std::ostream* os = &out;
    if (!c.out.empty()) {
        file.open(c.out);
        if (!file) throw std::runtime_error("cannot open output file '" + c.out + "'");
        os = &file;
    }
    if (c.format == "json") {
        table.write_json(*os);
    } else {
        table.write_csv(*os);
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Antenna dimensioning and outage analysis for MIMO links with incremental-redundancy HARQ",
                 "harqmimo"};
    app.footer(usage_footer());
    app.allow_extras(false);

    std::string command;
    std::string config_path;
    bool dump = false;
    std::map<std::string, std::string> values;
    app.add_option("command", command, std::string("Command: ") + kCommands);
    app.add_option("--config", config_path, "Read parameters from a JSON file; flags override it");
    app.add_flag("--dump-config", dump, "Print the effective configuration as JSON and exit");

    const std::map<std::string, std::string> help{
        {"case", "Antenna regime 1-4"},
        {"nt", "Transmit antennas (list)"},
        {"nr", "Receive antennas (list)"},
        {"k", "Antenna ratio N_t/N_r for cases 3 and 4 (list)"},
        {"fading", "quasi, slow or fast (list)"},
        {"m", "Maximum HARQ rounds (list)"},
        {"t", "Channel realizations per round in fast fading (list)"},
        {"rate", "Initial rate in nats per channel use (list)"},
        {"snr-db", "Transmit SNR in dB (list)"},
        {"theta", "Outage target (list)"},
        {"beta", "Transmit-side correlation coefficient (list)"},
        {"pa-eps", "PA efficiency"},
        {"pa-theta", "PA class exponent"},
        {"pa-max-db", "PA maximum output power in dB"},
        {"power-cons-db", "Consumed power in dB (list)"},
        {"schedule", "Per-round transmit powers in dB, one per round"},
        {"samples", "Monte Carlo packet samples (accepts 1e6)"},
        {"seed", "Random seed"},
        {"workers", "Worker threads; results do not depend on it"},
        {"method", "closed, highsnr, numeric, search, mc, poweralloc (list)"},
        {"preset", "Sweep preset"},
        {"of", "Command evaluated by an explicit sweep"},
        {"out", "Output file (default stdout)"},
        {"format", "csv or json"},
    };
    for (const auto& name : flag_names()) {
        app.add_option_function<std::string>(
            "--" + name, [&values, name](const std::string& v) { values[name] = v; }, help.at(name));
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    RunConfig config;
    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw UsageError("cannot read config file '" + config_path + "'");
            nlohmann::json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& e) {
                throw UsageError(std::string("malformed config: ") + e.what());
            }
            from_json(j, config);
        }
        if (!command.empty()) config.command = command;
        for (const auto& [name, value] : values) apply_flag(config, name, value);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    if (dump) {
        out << nlohmann::json(config).dump(2) << '\n';
        return kOk;
    }
    if (config.command.empty()) {
        err << "error: a command is required\n\n" << app.help();
        return kUsage;
    }

    try {
        const Table table = run_command(config);
        if (table.size() == 0) throw UsageError("empty parameter grid");
        write_table(table, config, out);
        return kOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << '\n';
        return kInfeasible;
    } catch (const NoRootError& e) {
        err << "no root: " << e.what() << '\n';
        return kInfeasible;
    } catch (const SearchBoundError& e) {
        err << "search bound exceeded (" << e.bound() << "): " << e.what() << '\n';
        return kSearchBound;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        // UnsupportedGeometryError and ScheduleMismatchError derive from it.
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace harqmimo::cli
