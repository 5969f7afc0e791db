#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fwu_tools/scenario_io.hpp"

namespace fwu::tools {

// Shortest decimal form that round-trips to the same double.
std::string format_double(double value);

inline constexpr const char* kLogVersionLine = "# fw-unicycle log v1";
inline constexpr const char* kCsvColumns =
    "t,x,y,theta,nu,omega,fw_x,fw_y,tracking_error,V,V_dot_analytic,phi_x,phi_y,"
    "min_beacon_distance";

// Parsed form of an emitted log file. scenario holds the header echo verbatim
// so plots can recover beacon layout and controller limits.
struct CsvLog {
    json scenario;
    Vec2 fw0;
    double fw_residual = 0.0;
    bool existence_ok = true;
    std::string outcome;
    double outcome_time = 0.0;
    std::vector<TrajectorySample> samples;
};

void write_log(const TrajectoryLog& log, std::ostream& out);
void write_log_file(const TrajectoryLog& log, const std::string& path);

// Throws Error on anything that is not a v1 log. Values round-trip exactly.
CsvLog read_log(std::istream& in);
CsvLog read_log_file(const std::string& path);

} // namespace fwu::tools
