// Command line front end: run scenarios, order-scaling studies and the
// convergence gate.
//
//   magnus2l run <scenario> --out-csv <path> --out-json <path> [--enforce-gate] [--rc <preset|value>]
//                [--methods <list>] [--timing]
//   magnus2l scaling <scenario> --scales <comma-list> --out-json <path>
//   magnus2l gate <scenario> [--rc <preset|value>] [--enforce-gate]
//
// Exit codes: 0 success, 1 I/O failure, 2 gate failure under enforcement,
// 3 config error, 4 numerical divergence.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "magnus2l/errors.hpp"
#include "magnus2l/experiments.hpp"
#include "magnus2l/output.hpp"
#include "magnus2l/scenario.hpp"

namespace {

enum ExitCode { kOk = 0, kIo = 1, kGate = 2, kConfig = 3, kDivergence = 4 };

struct Overrides {
    std::string rc;
    std::string methods;
    bool enforce_gate = false;
};

magnus2l::Scenario load(const std::string& path, const Overrides& o) {
    auto s = magnus2l::load_scenario(path);
    if (!o.rc.empty()) s.radius = magnus2l::ConvergenceRadius::parse(o.rc);
    if (!o.methods.empty()) s.methods = magnus2l::parse_method_list(o.methods);
    if (o.enforce_gate) s.enforce_gate = true;
    s.validate();
    return s;
}

std::vector<double> parse_scales(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw magnus2l::ConfigError("cannot parse scale '" + item + "'");
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Magnus-expansion propagation of a pulse-driven two-level atom"};
    app.require_subcommand(1);

    std::string scenario_path, csv_path, json_path, scales_text;
    Overrides overrides;
    bool timing = false;

    auto* run = app.add_subcommand("run", "Run every requested method on a scenario");
    run->add_option("scenario", scenario_path, "Scenario file")->required();
    run->add_option("--out-csv", csv_path, "Population/norm time series")->required();
    run->add_option("--out-json", json_path, "Run summary")->required();
    run->add_flag("--enforce-gate", overrides.enforce_gate, "Fail (exit 2) when the convergence bound fails");
    run->add_option("--rc", overrides.rc, "r_c preset (pechukas-light, blanes, moan-niesen) or value");
    run->add_option("--methods", overrides.methods, "Comma list of magnus2,magnus4,dyson4,rk4");
    run->add_flag("--timing", timing, "Record wall times in the summary");

    auto* scaling = app.add_subcommand("scaling", "Truncation-order scaling study");
    scaling->add_option("scenario", scenario_path, "Scenario file")->required();
    scaling->add_option("--scales", scales_text, "Comma list of amplitude factors")->required();
    scaling->add_option("--out-json", json_path, "Study output")->required();

    auto* gate = app.add_subcommand("gate", "Evaluate the Magnus convergence bound");
    gate->add_option("scenario", scenario_path, "Scenario file")->required();
    gate->add_option("--rc", overrides.rc, "r_c preset or value");
    gate->add_flag("--enforce-gate", overrides.enforce_gate, "Exit 2 when the bound fails");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfig;
    }

    try {
        if (*run) {
            const auto s = load(scenario_path, overrides);
            const auto result = magnus2l::run_scenario(s);
            magnus2l::emit_csv(result, csv_path);
            magnus2l::emit_summary(result, json_path, timing);
            if (!result.convergence.satisfied) {
                std::cerr << "warning: convergence bound not satisfied (margin " << result.convergence.margin
                          << ")\n";
            }
        } else if (*scaling) {
            const auto s = load(scenario_path, overrides);
            const auto scales = parse_scales(scales_text);
            const auto study = magnus2l::order_scaling_study(s, scales);
            magnus2l::write_file(json_path, magnus2l::scaling_json(s, study).dump(2) + "\n");
        } else if (*gate) {
            const auto s = load(scenario_path, overrides);
            const auto report = magnus2l::convergence_gate(s.pulse(), s.grid(), s.radius);
            std::cout << magnus2l::report_json(report).dump(2) << "\n";
            if (s.enforce_gate && !report.satisfied) return kGate;
        }
    } catch (const magnus2l::GateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kGate;
    } catch (const magnus2l::DivergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDivergence;
    } catch (const magnus2l::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const magnus2l::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfig;
    }
    return kOk;
}
