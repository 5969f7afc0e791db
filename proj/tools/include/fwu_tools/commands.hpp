#pragma once

#include <string>

namespace fwu::tools {

// Exit codes shared by the subcommands: 0 converged / verified, 1 input
// error, 2 timeout or failed verification, 3 collision.
inline constexpr int kExitConverged = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitTimeout = 2;
inline constexpr int kExitCollision = 3;

int cmd_run(const std::string& scenario_path, const std::string& out_path, int decimate);

int cmd_sweep(const std::string& scenario_path, const std::string& overrides_path,
              const std::string& out_dir, int decimate);

int cmd_verify(const std::string& beacons_path, double tol);

int cmd_plot(const std::string& csv_path, const std::string& out_stem);

} // namespace fwu::tools
