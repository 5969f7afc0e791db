#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fwu_tools/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"fwu: bearing-only guidance to the weighted Fermat-Weber point of a beacon set"};
    app.require_subcommand(1);

    int seed = 0;
    app.add_option("--seed", seed, "reserved, currently unused");

    std::string scenario_path, out_path, overrides_path, out_dir, csv_path, plot_stem;
    int decimate = 1;
    double tol = 1e-10;

    CLI::App* run = app.add_subcommand("run", "simulate one scenario and write a CSV log");
    run->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    run->add_option("--out", out_path, "output CSV path")->required();
    run->add_option("--decimate", decimate, "log every Nth step (terminal sample always kept)")
        ->check(CLI::PositiveNumber);

    CLI::App* sweep = app.add_subcommand("sweep", "run a list of scenario overrides");
    sweep->add_option("--scenario", scenario_path, "base scenario JSON file")->required();
    sweep->add_option("--overrides", overrides_path, "JSON array of scenario patches")
        ->required();
    sweep->add_option("--out-dir", out_dir, "directory for per-variant CSVs and summary.csv")
        ->required();
    sweep->add_option("--decimate", decimate, "log every Nth step (terminal sample always kept)")
        ->check(CLI::PositiveNumber);

    CLI::App* verify = app.add_subcommand(
        "verify", "solve for the Fermat-Weber point and cross-check it against a grid search");
    verify->add_option("--scenario", scenario_path,
                       "scenario JSON file or bare {\"beacons\": [...]} file")
        ->required();
    verify->add_option("--tol", tol, "optimality residual tolerance")->check(CLI::PositiveNumber);

    CLI::App* plot = app.add_subcommand("plot", "render SVG panels from a CSV log");
    plot->add_option("csv", csv_path, "CSV log produced by run or sweep")->required();
    plot->add_option("--out", plot_stem, "output stem (default: CSV path without extension)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : fwu::tools::kExitInputError;
    }

    if (run->parsed()) return fwu::tools::cmd_run(scenario_path, out_path, decimate);
    if (sweep->parsed()) {
        return fwu::tools::cmd_sweep(scenario_path, overrides_path, out_dir, decimate);
    }
    if (verify->parsed()) return fwu::tools::cmd_verify(scenario_path, tol);
    if (plot->parsed()) {
        std::string stem = plot_stem;
        if (stem.empty()) {
            stem = csv_path;
            const auto dot = stem.rfind('.');
            if (dot != std::string::npos && dot > stem.rfind('/') + 1) stem.resize(dot);
        }
        return fwu::tools::cmd_plot(csv_path, stem);
    }
    std::cerr << "error: no subcommand\n";
    return fwu::tools::kExitInputError;
}
