// Copyright 2026 The betauav Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "betauav/report.hpp"

namespace betauav {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPropertyViolation = 2;

/// Loads gas-schedule overrides from <dir>/gas.cfg (key=value lines:
/// deploy_gas, issue_gas, gas_price_gwei). Unknown keys are rejected.
inline GasSchedule load_gas_config(const std::string& dir, GasSchedule base = {}) {
    std::ifstream in(dir + "/gas.cfg");
    if (!in) return base;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error("gas.cfg line " + std::to_string(lineno) + ": expected key=value");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        if (key == "deploy_gas") {
            base.deploy_gas = std::stoull(value);
        } else if (key == "issue_gas") {
            base.issue_gas = std::stoull(value);
        } else if (key == "gas_price_gwei") {
            auto wei = parse_gwei(value);
            if (!wei) throw Error("gas.cfg: bad gas_price_gwei value");
            base.gas_price_wei = *wei;
        } else {
            throw Error("gas.cfg: unknown key '" + key + "'");
        }
    }
    base.check();
    return base;
}

namespace detail {

inline Scenario load_scenario(const std::string& path, const GasSchedule& gas,
                              std::optional<std::uint64_t> seed) {
    Scenario s;
    if (path.empty()) {
        s = Scenario::default_two_uav();
    } else {
        std::ifstream in(path);
        if (!in) throw Error("cannot open scenario file " + path);
        std::ostringstream text;
        text << in.rdbuf();
        s = Scenario::parse(text.str());
    }
    s.gas = gas;
    if (seed) s.seed = *seed;
    return s;
}

inline int write_output(const std::string& text, const std::string& out_path, std::ostream& out,
                        std::ostream& err) {
    if (out_path.empty()) {
        out << text;
        return kExitOk;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        err << "error: cannot write " << out_path << "\n";
        return kExitUsage;
    }
    f << text;
    return kExitOk;
}

}  // namespace detail

/// Entry point shared by the binary and the tests. `args` excludes argv[0].
inline int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"BETA-UAV authentication protocol simulator"};
    app.require_subcommand(1);

    std::string format = "table";
    std::string out_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "machine"}));
    app.add_option("--out", out_path, "write the report to a file");

    GasSchedule gas;
    if (const char* dir = std::getenv("BETAUAV_CONFIG_DIR")) gas = load_gas_config(dir);

    // scenario run <file>
    CLI::App* scenario_cmd = app.add_subcommand("scenario", "run a scenario file");
    scenario_cmd->fallthrough();
    CLI::App* scenario_run = scenario_cmd->add_subcommand("run", "execute and report");
    scenario_run->fallthrough();
    std::string scenario_file;
    std::uint64_t seed_opt = 0;
    bool seed_given = false;
    scenario_run->add_option("file", scenario_file, "scenario file")->required();
    scenario_run->add_option("--seed", seed_opt, "override the scenario seed")
        ->each([&](const std::string&) { seed_given = true; });

    // attack <kind>
    CLI::App* attack_cmd = app.add_subcommand("attack", "run an adversary suite");
    attack_cmd->fallthrough();
    std::string attack_kind;
    std::uint64_t attempts = 1000;
    std::string attack_scenario;
    attack_cmd->add_option("kind", attack_kind, "replay|modify|impersonate|mitm")
        ->required()
        ->check(CLI::IsMember({"replay", "modify", "impersonate", "mitm"}));
    attack_cmd->add_option("--attempts", attempts, "number of adversarial attempts");
    attack_cmd->add_option("--scenario", attack_scenario, "base scenario file");
    attack_cmd->add_option("--seed", seed_opt, "override the scenario seed")
        ->each([&](const std::string&) { seed_given = true; });

    // bench
    CLI::App* bench_cmd = app.add_subcommand("bench", "measure primitive timings");
    bench_cmd->fallthrough();
    std::uint64_t iters = 1000;
    std::string platform = "local-host";
    bench_cmd->add_option("--iters", iters, "iterations per primitive (>= 100)");
    bench_cmd->add_option("--platform", platform, "platform label for the report");

    // gas-report
    CLI::App* gas_cmd = app.add_subcommand("gas-report", "gas usage of a scenario run");
    gas_cmd->fallthrough();
    std::string gas_scenario;
    gas_cmd->add_option("--scenario", gas_scenario, "scenario file (default built-in)");
    gas_cmd->add_option("--seed", seed_opt, "override the scenario seed")
        ->each([&](const std::string&) { seed_given = true; });

    // comm-cost
    CLI::App* comm_cmd = app.add_subcommand("comm-cost", "wire-format communication cost");
    comm_cmd->fallthrough();
    std::uint64_t data_len = 0;
    comm_cmd->add_option("--data-len", data_len, "data payload length in bytes");

    // delay-curve
    CLI::App* delay_cmd = app.add_subcommand("delay-curve", "delay vs number of drones");
    delay_cmd->fallthrough();
    std::string n_list_text = "2,4,8";
    std::string timings_kind = "pf1";
    std::uint64_t delay_iters = 200;
    delay_cmd->add_option("--n", n_list_text, "comma-separated drone counts");
    delay_cmd->add_option("--timings", timings_kind, "pf1|pf2|measured")
        ->check(CLI::IsMember({"pf1", "pf2", "measured"}));
    delay_cmd->add_option("--iters", delay_iters, "iterations when --timings measured");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    ReportFormat fmt = format == "machine" ? ReportFormat::Machine : ReportFormat::Table;
    std::optional<std::uint64_t> seed = seed_given ? std::optional(seed_opt) : std::nullopt;

    try {
        if (scenario_run->parsed()) {
            Scenario s = detail::load_scenario(scenario_file, gas, seed);
            auto [transcript, metrics] = run_scenario(s);
            return detail::write_output(render_run(transcript, metrics, fmt), out_path, out, err);
        }
        if (attack_cmd->parsed()) {
            Scenario s = detail::load_scenario(attack_scenario, gas, seed);
            AttackReport report;
            if (attack_kind == "replay") report = attack_replay(s, attempts);
            else if (attack_kind == "modify") report = attack_modify(s, attempts);
            else if (attack_kind == "impersonate") report = attack_impersonate(s, attempts);
            else report = attack_mitm(s, attempts);
            int rc = detail::write_output(render_attack(report, fmt), out_path, out, err);
            if (rc != kExitOk) return rc;
            if (report.rejected != report.attempts) {
                err << "error: " << (report.attempts - report.rejected)
                    << " adversarial attempt(s) were accepted\n";
                return kExitPropertyViolation;
            }
            return kExitOk;
        }
        if (bench_cmd->parsed()) {
            if (iters < 100) {
                err << "error: --iters must be at least 100\n";
                return kExitUsage;
            }
            PrimitiveTimings t = bench_primitives(iters, platform);
            return detail::write_output(render_bench(t, computation_comparison(t), fmt), out_path,
                                        out, err);
        }
        if (gas_cmd->parsed()) {
            Scenario s = detail::load_scenario(gas_scenario, gas, seed);
            Simulation sim(s);
            sim.run();
            return detail::write_output(render_gas(sim.ledger().gas_report(), fmt), out_path, out,
                                        err);
        }
        if (comm_cmd->parsed()) {
            return detail::write_output(render_comm_cost(comm_cost(data_len), fmt), out_path, out,
                                        err);
        }
        if (delay_cmd->parsed()) {
            std::vector<unsigned> ns;
            std::istringstream ss(n_list_text);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) ns.push_back(static_cast<unsigned>(std::stoul(item)));
            PrimitiveTimings t;
            if (timings_kind == "pf1") t = PrimitiveTimings::reference_pf1();
            else if (timings_kind == "pf2") t = PrimitiveTimings::reference_pf2();
            else {
                if (delay_iters < 100) {
                    err << "error: --iters must be at least 100\n";
                    return kExitUsage;
                }
                t = bench_primitives(delay_iters, "local-host");
            }
            DelayCurve c = delay_curve(ns, t);
            return detail::write_output(render_delay_curve(c, fmt), out_path, out, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace betauav
