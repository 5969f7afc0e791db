#pragma once

#include <string>

#include "fwu_tools/csv_io.hpp"

namespace fwu::tools {

// Static figure panels rendered from a parsed log. Output is deterministic
// byte-for-byte for identical input: coordinates are written with fixed
// precision and nothing depends on locale or time.
//
// trajectory: agent path with beacons, start/end markers, and the reference
//             point track. error: tracking error vs time. commands: nu and
//             omega vs time, with limit bands when the scenario saturates.
std::string render_trajectory_svg(const CsvLog& log);
std::string render_error_svg(const CsvLog& log);
std::string render_commands_svg(const CsvLog& log);

// Writes <stem>_trajectory.svg, <stem>_error.svg, <stem>_commands.svg.
void write_plot_files(const CsvLog& log, const std::string& stem);

} // namespace fwu::tools
