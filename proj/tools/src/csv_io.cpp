#include "fwu_tools/csv_io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "fwu/errors.hpp"

namespace fwu::tools {

std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

void write_log(const TrajectoryLog& log, std::ostream& out) {
    out << kLogVersionLine << '\n';
    out << "# scenario: " << scenario_to_json(log.scenario).dump() << '\n';
    out << "# fw0: " << format_double(log.fw_initial.x) << ' ' << format_double(log.fw_initial.y)
        << '\n';
    out << "# fw_residual: " << format_double(log.fw_residual) << '\n';
    out << "# existence_ok: " << (log.existence_ok ? "true" : "false") << '\n';
    out << "# outcome: " << to_string(log.outcome) << '\n';
    out << "# outcome_time: " << format_double(log.outcome_time) << '\n';
    out << kCsvColumns << '\n';

    for (const TrajectorySample& s : log.samples) {
        out << format_double(s.t) << ',' << format_double(s.x) << ',' << format_double(s.y) << ','
            << format_double(s.theta) << ',' << format_double(s.nu) << ','
            << format_double(s.omega) << ',' << format_double(s.fw_x) << ','
            << format_double(s.fw_y) << ',' << format_double(s.tracking_error) << ','
            << format_double(s.V) << ',' << format_double(s.V_dot_analytic) << ','
            << format_double(s.phi_x) << ',' << format_double(s.phi_y) << ','
            << format_double(s.min_beacon_distance) << '\n';
    }
}

void write_log_file(const TrajectoryLog& log, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(path + ": cannot open for writing");
    write_log(log, out);
    if (!out.flush()) throw Error(path + ": write failed");
}

namespace {

[[noreturn]] void malformed(std::size_t line_no, const std::string& what) {
    throw Error("log line " + std::to_string(line_no) + ": " + what);
}

double parse_double(const std::string& field, std::size_t line_no) {
    const char* begin = field.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin || *end != '\0') malformed(line_no, "bad number \"" + field + "\"");
    return value;
}

// Returns the value of a "# key: value" line or reports the mismatch.
std::string header_value(const std::string& line, const std::string& key, std::size_t line_no) {
    const std::string prefix = "# " + key + ": ";
    if (line.rfind(prefix, 0) != 0) malformed(line_no, "expected \"" + prefix + "...\"");
    return line.substr(prefix.size());
}

} // namespace

CsvLog read_log(std::istream& in) {
    CsvLog log;
    std::string line;
    std::size_t line_no = 0;

    auto next_line = [&]() {
        if (!std::getline(in, line)) malformed(line_no + 1, "unexpected end of file");
        ++line_no;
    };

    next_line();
    if (line != kLogVersionLine) malformed(line_no, "not a fw-unicycle v1 log");

    next_line();
    try {
        log.scenario = json::parse(header_value(line, "scenario", line_no));
    } catch (const json::parse_error& e) {
        malformed(line_no, std::string("scenario echo: ") + e.what());
    }

    next_line();
    {
        std::istringstream fw(header_value(line, "fw0", line_no));
        std::string sx, sy;
        if (!(fw >> sx >> sy)) malformed(line_no, "fw0 needs two numbers");
        log.fw0 = Vec2{parse_double(sx, line_no), parse_double(sy, line_no)};
    }

    next_line();
    log.fw_residual = parse_double(header_value(line, "fw_residual", line_no), line_no);

    next_line();
    {
        const std::string v = header_value(line, "existence_ok", line_no);
        if (v != "true" && v != "false") malformed(line_no, "existence_ok must be true or false");
        log.existence_ok = (v == "true");
    }

    next_line();
    log.outcome = header_value(line, "outcome", line_no);
    if (log.outcome != "Converged" && log.outcome != "Timeout" && log.outcome != "Collision") {
        malformed(line_no, "unknown outcome \"" + log.outcome + "\"");
    }

    next_line();
    log.outcome_time = parse_double(header_value(line, "outcome_time", line_no), line_no);

    next_line();
    if (line != kCsvColumns) malformed(line_no, "column header mismatch");

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        double f[14];
        std::size_t pos = 0;
        for (int i = 0; i < 14; ++i) {
            const std::size_t comma = line.find(',', pos);
            const bool last = (i == 13);
            if (last != (comma == std::string::npos)) {
                malformed(line_no, "expected 14 comma-separated fields");
            }
            const std::string field =
                last ? line.substr(pos) : line.substr(pos, comma - pos);
            f[i] = parse_double(field, line_no);
            pos = last ? pos : comma + 1;
        }
        log.samples.push_back({f[0], f[1], f[2], f[3], f[4], f[5], f[6], f[7], f[8], f[9], f[10],
                               f[11], f[12], f[13]});
    }
    return log;
}

CsvLog read_log_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(path + ": cannot open file");
    return read_log(in);
}

} // namespace fwu::tools
