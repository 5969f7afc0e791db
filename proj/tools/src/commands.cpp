#include "fwu_tools/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <span>
#include <vector>

#include "fwu_tools/csv_io.hpp"
#include "fwu_tools/grid_search.hpp"
#include "fwu_tools/scenario_io.hpp"
#include "fwu_tools/svg_plot.hpp"

namespace fwu::tools {

namespace {

int exit_code_for(RunOutcome outcome) {
    switch (outcome) {
        case RunOutcome::Converged: return kExitConverged;
        case RunOutcome::Timeout: return kExitTimeout;
        case RunOutcome::Collision: return kExitCollision;
    }
    return kExitInputError;
}

std::string sanitize_label(const std::string& label) {
    std::string out;
    for (char c : label) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '-' || c == '_';
        out.push_back(ok ? c : '_');
    }
    return out.empty() ? "variant" : out;
}

void print_summary_line(const TrajectoryLog& log, const std::string& out_path) {
    std::cout << (log.scenario.label.empty() ? "run" : log.scenario.label) << ": "
              << to_string(log.outcome) << " at t=" << format_double(log.outcome_time)
              << " s, final error " << format_double(log.final_sample().tracking_error)
              << " m, " << log.samples.size() << " samples -> " << out_path << '\n';
}

} // namespace

int cmd_run(const std::string& scenario_path, const std::string& out_path, int decimate) {
    std::optional<Scenario> scenario;
    try {
        scenario = load_scenario(scenario_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        TrajectoryLog log = run(*scenario, decimate);
        if (!log.existence_ok) {
            std::cerr << "warning: existence check failed for at least one beacon; the "
                         "minimizer may sit on a beacon\n";
        }
        write_log_file(log, out_path);
        print_summary_line(log, out_path);
        return exit_code_for(log.outcome);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

int cmd_sweep(const std::string& scenario_path, const std::string& overrides_path,
              const std::string& out_dir, int decimate) {
    json base_json;
    std::optional<Scenario> base;
    json overrides;
    try {
        base_json = load_json(scenario_path);
        base = scenario_from_json(base_json);
        overrides = load_json(overrides_path);
        if (!overrides.is_array()) {
            throw InvalidScenario(overrides_path + ": overrides must be a JSON array");
        }
        std::filesystem::create_directories(out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    struct Variant {
        std::string label;
        std::optional<Scenario> scenario;
        std::string error;
    };
    std::vector<Variant> variants;
    std::vector<Scenario> runnable;
    for (std::size_t i = 0; i < overrides.size(); ++i) {
        Variant v;
        v.label = "variant-" + std::to_string(i);
        try {
            const json merged = merge_scenario(base_json, overrides[i]);
            Scenario s = scenario_from_json(merged);
            if (s.label.empty()) s.label = v.label;
            v.label = s.label;
            v.scenario = std::move(s);
        } catch (const std::exception& e) {
            if (overrides[i].is_object() && overrides[i].contains("label") &&
                overrides[i]["label"].is_string()) {
                v.label = overrides[i]["label"].get<std::string>();
            }
            v.error = e.what();
        }
        if (v.scenario) runnable.push_back(*v.scenario);
        variants.push_back(std::move(v));
    }

    std::vector<ScenarioOverride> assignments;
    assignments.reserve(runnable.size());
    for (Scenario& s : runnable) {
        assignments.push_back([&s](Scenario& target) { target = s; });
    }
    std::vector<SweepResult> results =
        runnable.empty() ? std::vector<SweepResult>{}
                         : sweep(*base, std::span<const ScenarioOverride>(assignments), decimate);

    const std::string summary_path = (std::filesystem::path(out_dir) / "summary.csv").string();
    std::ofstream summary(summary_path, std::ios::binary);
    if (!summary) {
        std::cerr << "error: " << summary_path << ": cannot open for writing\n";
        return kExitInputError;
    }
    summary << "label,outcome,convergence_time,final_error,min_distance\n";

    bool any_failed = false;
    std::size_t result_index = 0;
    for (std::size_t i = 0; i < variants.size(); ++i) {
        Variant& v = variants[i];
        std::string outcome = "Error";
        std::string convergence_time, final_error, min_distance;

        if (v.scenario) {
            const SweepResult& r = results[result_index++];
            if (r.ok()) {
                const TrajectoryLog& log = *r.log;
                const std::string prefix = (i < 10 ? "0" : "") + std::to_string(i) + "_";
                const std::string csv_path =
                    (std::filesystem::path(out_dir) / (prefix + sanitize_label(v.label) + ".csv"))
                        .string();
                try {
                    write_log_file(log, csv_path);
                } catch (const std::exception& e) {
                    std::cerr << "error: " << e.what() << '\n';
                    return kExitInputError;
                }
                print_summary_line(log, csv_path);

                outcome = to_string(log.outcome);
                if (log.outcome == RunOutcome::Converged) {
                    convergence_time = format_double(log.outcome_time);
                }
                final_error = format_double(log.final_sample().tracking_error);
                double min_d = log.samples.front().min_beacon_distance;
                for (const auto& s : log.samples) {
                    min_d = std::min(min_d, s.min_beacon_distance);
                }
                min_distance = format_double(min_d);
            } else {
                v.error = r.error;
            }
        }
        if (outcome == "Error") {
            any_failed = true;
            std::cerr << "variant " << i << " (" << v.label << ") failed: " << v.error << '\n';
        }
        summary << sanitize_label(v.label) << ',' << outcome << ',' << convergence_time << ','
                << final_error << ',' << min_distance << '\n';
    }
    if (!summary.flush()) {
        std::cerr << "error: " << summary_path << ": write failed\n";
        return kExitInputError;
    }
    std::cout << "summary -> " << summary_path << '\n';
    return any_failed ? kExitInputError : kExitConverged;
}

int cmd_verify(const std::string& beacons_path, double tol) {
    try {
        const BeaconSet beacons = beacons_from_json(load_json(beacons_path));

        const auto existence = existence_check(beacons);
        std::cout << "existence: [";
        bool all = true;
        for (std::size_t i = 0; i < existence.size(); ++i) {
            std::cout << (i ? ", " : "") << (existence[i] ? "true" : "false");
            all = all && existence[i];
        }
        std::cout << "]\n";
        if (!all) {
            std::cout << "note: the minimizer may coincide with a beacon\n";
        }

        const FwSolution sol = weiszfeld(beacons, tol);
        std::cout << "status: " << to_string(sol.status) << '\n';
        std::cout << "point: (" << format_double(sol.point.x) << ", "
                  << format_double(sol.point.y) << ")\n";
        std::cout << "residual: " << format_double(sol.residual) << " (tol "
                  << format_double(tol) << ")\n";
        std::cout << "iterations: " << sol.iterations << '\n';

        const GridMinimum grid = grid_minimize(beacons, 1e-3);
        const double discrepancy = distance(grid.point, sol.point);
        std::cout << "grid check: (" << format_double(grid.point.x) << ", "
                  << format_double(grid.point.y) << "), discrepancy "
                  << format_double(discrepancy) << '\n';

        const bool ok = sol.residual <= tol && discrepancy <= 2e-3;
        std::cout << (ok ? "verified" : "verification FAILED") << '\n';
        return ok ? kExitConverged : kExitTimeout;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

int cmd_plot(const std::string& csv_path, const std::string& out_stem) {
    try {
        const CsvLog log = read_log_file(csv_path);
        std::string stem = out_stem;
        if (stem.size() > 4 && stem.substr(stem.size() - 4) == ".svg") {
            stem.resize(stem.size() - 4);
        }
        write_plot_files(log, stem);
        std::cout << "wrote " << stem << "_trajectory.svg, " << stem << "_error.svg, " << stem
                  << "_commands.svg\n";
        return kExitConverged;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

} // namespace fwu::tools
