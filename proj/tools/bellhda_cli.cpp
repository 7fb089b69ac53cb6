// bellhda: command-line driver for the delayed-tracking CHSH simulator.
//
//   bellhda run    --config FILE [--trace FILE.csv] [--out FILE.csv]
//   bellhda sweep  --config FILE --gammas "0.02,0.1,..." [--replicates N] [--jobs K] --out FILE.csv
//   bellhda static --config FILE --out FILE.csv
//   bellhda oracle
//
// Exit codes: 0 success, 1 other failure, 2 config error, 3 numeric failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bellhda/config.hpp"
#include "bellhda/errors.hpp"
#include "bellhda/ledger.hpp"
#include "bellhda/lr_oracle.hpp"
#include "bellhda/runner.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw bellhda::Error("cannot write '" + path + "'");
    out << text;
}

std::string metrics_table(const std::vector<bellhda::Metrics>& rows) {
    std::string text = bellhda::metrics_csv_header() + "\n";
    for (const auto& m : rows) text += bellhda::metrics_csv_row(m) + "\n";
    return text;
}

std::vector<double> parse_gammas(const std::string& list) {
    std::vector<double> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(item, &used);
        } catch (const std::exception&) {
            throw bellhda::ConfigError("--gammas: cannot parse '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos) {
            throw bellhda::ConfigError("--gammas: cannot parse '" + item + "'");
        }
        out.push_back(value);
    }
    if (out.empty()) throw bellhda::ConfigError("--gammas: empty list");
    return out;
}

bellhda::RunConfig load(const std::string& path) {
    bellhda::RunConfig config = bellhda::load_config(path);
    bellhda::apply_env_overrides(config);
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Delayed-tracking hidden-variable CHSH simulator"};
    app.require_subcommand(1);

    std::string config_path, out_path, trace_path, gammas;
    int replicates = 1;
    int jobs = 1;

    auto* run_cmd = app.add_subcommand("run", "Run one experiment and print its metrics row");
    run_cmd->add_option("--config", config_path, "Config file")->required();
    run_cmd->add_option("--trace", trace_path, "Write the alpha(t) trace CSV here");
    run_cmd->add_option("--out", out_path, "Metrics CSV (default stdout)");

    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep gamma over a list of values");
    sweep_cmd->add_option("--config", config_path, "Base config file")->required();
    sweep_cmd->add_option("--gammas", gammas, "Comma-separated gamma values")->required();
    sweep_cmd->add_option("--replicates", replicates, "Runs per gamma (seed, seed+1, ...)")
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--out", out_path, "Metrics CSV")->required();

    auto* static_cmd = app.add_subcommand("static", "Run the four-quarter block schedule");
    static_cmd->add_option("--config", config_path, "Config file")->required();
    static_cmd->add_option("--out", out_path, "Metrics CSV")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Print the 16 deterministic strategies and their S");

    CLI11_PARSE(app, argc, argv);

    try {
        if (oracle_cmd->parsed()) {
            std::cout << bellhda::enumeration_table();
        } else if (run_cmd->parsed()) {
            const auto config = load(config_path);
            const auto result = bellhda::run(config);
            if (!trace_path.empty()) {
                write_output(trace_path, bellhda::trace_csv(bellhda::emit_trace(
                                             result, config.trace_decimation)));
            }
            write_output(out_path, metrics_table({result.metrics}));
        } else if (sweep_cmd->parsed()) {
            const auto config = load(config_path);
            const auto rows = bellhda::sweep_gamma(config, parse_gammas(gammas), replicates, jobs);
            write_output(out_path, metrics_table(rows));
        } else if (static_cmd->parsed()) {
            auto config = load(config_path);
            config.scenario = bellhda::Scenario::static_blocks;
            write_output(out_path, metrics_table({bellhda::run(config).metrics}));
        }
    } catch (const bellhda::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const bellhda::NumericFailure& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
