#include "fwu_tools/svg_plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "fwu/errors.hpp"

namespace fwu::tools {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 62.0;
constexpr double kMarginRight = 18.0;
constexpr double kMarginTop = 34.0;
constexpr double kMarginBottom = 46.0;

std::string fixed2(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
    return std::string(buf, res.ptr);
}

std::string general6(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
    return std::string(buf, res.ptr);
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;

    void include(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    double span() const { return hi - lo; }
    void pad(double fraction) {
        if (span() <= 0.0) {
            lo -= 1.0;
            hi += 1.0;
            return;
        }
        const double p = span() * fraction;
        lo -= p;
        hi += p;
    }
};

Range range_of(const std::vector<double>& values) {
    Range r{values.front(), values.front()};
    for (double v : values) r.include(v);
    return r;
}

// Tick positions at multiples of a 1/2/5 step, about five per axis.
std::vector<double> nice_ticks(const Range& r, int target = 5) {
    const double raw = r.span() / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = 10.0 * mag;
    for (double m : {1.0, 2.0, 5.0}) {
        if (m * mag >= raw) {
            step = m * mag;
            break;
        }
    }
    std::vector<double> ticks;
    const auto k_lo = static_cast<long long>(std::ceil(r.lo / step - 1e-9));
    const auto k_hi = static_cast<long long>(std::floor(r.hi / step + 1e-9));
    for (long long k = k_lo; k <= k_hi; ++k) {
        ticks.push_back(static_cast<double>(k) * step);
    }
    return ticks;
}

class Panel {
public:
    Panel(std::string title, std::string x_label, std::string y_label, Range x, Range y)
        : x_(x), y_(y) {
        svg_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (int)kWidth
             << "\" height=\"" << (int)kHeight << "\" viewBox=\"0 0 " << (int)kWidth << " "
             << (int)kHeight << "\">\n";
        svg_ << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
        svg_ << "<text x=\"" << fixed2(kWidth / 2) << "\" y=\"20\" text-anchor=\"middle\" "
             << "font-family=\"sans-serif\" font-size=\"14\" fill=\"#222\">" << title
             << "</text>\n";
        draw_axes(x_label, y_label);
    }

    double px(double x) const {
        return kMarginLeft + (x - x_.lo) / x_.span() * (kWidth - kMarginLeft - kMarginRight);
    }
    double py(double y) const {
        return kHeight - kMarginBottom -
               (y - y_.lo) / y_.span() * (kHeight - kMarginTop - kMarginBottom);
    }

    void polyline(const std::vector<double>& xs, const std::vector<double>& ys,
                  const std::string& color, const std::string& dash = "") {
        if (xs.size() == 1) {
            circle(xs[0], ys[0], 3.0, color);
            return;
        }
        svg_ << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
        if (!dash.empty()) svg_ << " stroke-dasharray=\"" << dash << "\"";
        svg_ << " points=\"";
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) svg_ << ' ';
            svg_ << fixed2(px(xs[i])) << ',' << fixed2(py(ys[i]));
        }
        svg_ << "\"/>\n";
    }

    void hline(double y, const std::string& color, const std::string& dash) {
        svg_ << "<line x1=\"" << fixed2(px(x_.lo)) << "\" y1=\"" << fixed2(py(y)) << "\" x2=\""
             << fixed2(px(x_.hi)) << "\" y2=\"" << fixed2(py(y)) << "\" stroke=\"" << color
             << "\" stroke-width=\"1\" stroke-dasharray=\"" << dash << "\"/>\n";
    }

    void circle(double x, double y, double r, const std::string& color, bool filled = true) {
        svg_ << "<circle cx=\"" << fixed2(px(x)) << "\" cy=\"" << fixed2(py(y)) << "\" r=\""
             << fixed2(r) << "\" ";
        if (filled) {
            svg_ << "fill=\"" << color << "\"";
        } else {
            svg_ << "fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
        }
        svg_ << "/>\n";
    }

    void square(double x, double y, double half, const std::string& color) {
        svg_ << "<rect x=\"" << fixed2(px(x) - half) << "\" y=\"" << fixed2(py(y) - half)
             << "\" width=\"" << fixed2(2 * half) << "\" height=\"" << fixed2(2 * half)
             << "\" fill=\"" << color << "\"/>\n";
    }

    void cross(double x, double y, double half, const std::string& color) {
        const double cx = px(x), cy = py(y);
        svg_ << "<path d=\"M" << fixed2(cx - half) << ' ' << fixed2(cy - half) << " L"
             << fixed2(cx + half) << ' ' << fixed2(cy + half) << " M" << fixed2(cx - half) << ' '
             << fixed2(cy + half) << " L" << fixed2(cx + half) << ' ' << fixed2(cy - half)
             << "\" stroke=\"" << color << "\" stroke-width=\"2\" fill=\"none\"/>\n";
    }

    void legend(std::size_t slot, const std::string& color, const std::string& text) {
        const double y = kMarginTop + 14.0 + 16.0 * static_cast<double>(slot);
        const double x = kMarginLeft + 10.0;
        svg_ << "<line x1=\"" << fixed2(x) << "\" y1=\"" << fixed2(y - 4) << "\" x2=\""
             << fixed2(x + 18) << "\" y2=\"" << fixed2(y - 4) << "\" stroke=\"" << color
             << "\" stroke-width=\"2\"/>\n";
        svg_ << "<text x=\"" << fixed2(x + 24) << "\" y=\"" << fixed2(y)
             << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#222\">" << text
             << "</text>\n";
    }

    std::string finish() {
        svg_ << "</svg>\n";
        return svg_.str();
    }

private:
    void draw_axes(const std::string& x_label, const std::string& y_label) {
        for (double t : nice_ticks(x_)) {
            const double x = px(t);
            svg_ << "<line x1=\"" << fixed2(x) << "\" y1=\"" << fixed2(kMarginTop) << "\" x2=\""
                 << fixed2(x) << "\" y2=\"" << fixed2(kHeight - kMarginBottom)
                 << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
            svg_ << "<text x=\"" << fixed2(x) << "\" y=\"" << fixed2(kHeight - kMarginBottom + 16)
                 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\" "
                    "fill=\"#444\">"
                 << general6(t) << "</text>\n";
        }
        for (double t : nice_ticks(y_)) {
            const double y = py(t);
            svg_ << "<line x1=\"" << fixed2(kMarginLeft) << "\" y1=\"" << fixed2(y) << "\" x2=\""
                 << fixed2(kWidth - kMarginRight) << "\" y2=\"" << fixed2(y)
                 << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
            svg_ << "<text x=\"" << fixed2(kMarginLeft - 6) << "\" y=\"" << fixed2(y + 4)
                 << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
                    "fill=\"#444\">"
                 << general6(t) << "</text>\n";
        }
        svg_ << "<rect x=\"" << fixed2(kMarginLeft) << "\" y=\"" << fixed2(kMarginTop)
             << "\" width=\"" << fixed2(kWidth - kMarginLeft - kMarginRight) << "\" height=\""
             << fixed2(kHeight - kMarginTop - kMarginBottom)
             << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
        svg_ << "<text x=\"" << fixed2((kMarginLeft + kWidth - kMarginRight) / 2) << "\" y=\""
             << fixed2(kHeight - 10)
             << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
                "fill=\"#222\">"
             << x_label << "</text>\n";
        svg_ << "<text x=\"16\" y=\"" << fixed2((kMarginTop + kHeight - kMarginBottom) / 2)
             << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
                "fill=\"#222\" transform=\"rotate(-90 16 "
             << fixed2((kMarginTop + kHeight - kMarginBottom) / 2) << ")\">" << y_label
             << "</text>\n";
    }

    Range x_, y_;
    std::ostringstream svg_;
};

std::vector<double> column(const CsvLog& log, double TrajectorySample::* field) {
    std::vector<double> v;
    v.reserve(log.samples.size());
    for (const auto& s : log.samples) v.push_back(s.*field);
    return v;
}

void require_samples(const CsvLog& log) {
    if (log.samples.empty()) throw Error("log holds no samples, nothing to plot");
}

} // namespace

std::string render_trajectory_svg(const CsvLog& log) {
    require_samples(log);
    const auto xs = column(log, &TrajectorySample::x);
    const auto ys = column(log, &TrajectorySample::y);
    const auto fx = column(log, &TrajectorySample::fw_x);
    const auto fy = column(log, &TrajectorySample::fw_y);

    Range rx = range_of(xs), ry = range_of(ys);
    for (double v : fx) rx.include(v);
    for (double v : fy) ry.include(v);
    if (log.scenario.contains("beacons")) {
        for (const auto& b : log.scenario["beacons"]) {
            rx.include(b["x"].get<double>());
            ry.include(b["y"].get<double>());
        }
    }
    rx.pad(0.08);
    ry.pad(0.08);

    // Equal aspect so circles look like circles: widen the short axis.
    const double plot_aspect =
        (kWidth - kMarginLeft - kMarginRight) / (kHeight - kMarginTop - kMarginBottom);
    if (rx.span() / ry.span() < plot_aspect) {
        const double grow = (ry.span() * plot_aspect - rx.span()) / 2;
        rx.lo -= grow;
        rx.hi += grow;
    } else {
        const double grow = (rx.span() / plot_aspect - ry.span()) / 2;
        ry.lo -= grow;
        ry.hi += grow;
    }

    Panel p("trajectory", "x [m]", "y [m]", rx, ry);
    if (log.scenario.contains("beacons")) {
        for (const auto& b : log.scenario["beacons"]) {
            p.square(b["x"].get<double>(), b["y"].get<double>(), 5.0, "#333333");
        }
    }
    if (fx.size() > 1 && (fx.front() != fx.back() || fy.front() != fy.back())) {
        p.polyline(fx, fy, "#d62728", "4,3");
    }
    p.cross(fx.back(), fy.back(), 6.0, "#d62728");
    p.polyline(xs, ys, "#1f77b4");
    p.circle(xs.front(), ys.front(), 4.0, "#1f77b4", false);
    p.circle(xs.back(), ys.back(), 3.0, "#1f77b4");
    return p.finish();
}

std::string render_error_svg(const CsvLog& log) {
    require_samples(log);
    const auto ts = column(log, &TrajectorySample::t);
    const auto err = column(log, &TrajectorySample::tracking_error);

    Range rt = range_of(ts), re = range_of(err);
    re.include(0.0);
    rt.pad(0.02);
    re.pad(0.05);

    Panel p("tracking error", "t [s]", "error [m]", rt, re);
    p.polyline(ts, err, "#1f77b4");
    return p.finish();
}

std::string render_commands_svg(const CsvLog& log) {
    require_samples(log);
    const auto ts = column(log, &TrajectorySample::t);
    const auto nu = column(log, &TrajectorySample::nu);
    const auto om = column(log, &TrajectorySample::omega);

    Range rt = range_of(ts);
    Range rv = range_of(nu);
    for (double v : om) rv.include(v);
    rv.include(0.0);

    const bool saturated = log.scenario.contains("controller") &&
                           log.scenario["controller"].value("kind", "") == "saturated";
    double nu_b = 0, nu_f = 0, omega_r = 0, omega_l = 0;
    if (saturated) {
        const auto& c = log.scenario["controller"];
        nu_b = c["nu_b"].get<double>();
        nu_f = c["nu_f"].get<double>();
        omega_r = c["omega_r"].get<double>();
        omega_l = c["omega_l"].get<double>();
        rv.include(-nu_b);
        rv.include(nu_f);
        rv.include(-omega_r);
        rv.include(omega_l);
    }
    rt.pad(0.02);
    rv.pad(0.08);

    Panel p("commands", "t [s]", "command", rt, rv);
    if (saturated) {
        p.hline(-nu_b, "#9ecae1", "5,4");
        p.hline(nu_f, "#9ecae1", "5,4");
        p.hline(-omega_r, "#fdae6b", "5,4");
        p.hline(omega_l, "#fdae6b", "5,4");
    }
    p.polyline(ts, nu, "#1f77b4");
    p.polyline(ts, om, "#d62728");
    p.legend(0, "#1f77b4", "nu [m/s]");
    p.legend(1, "#d62728", "omega [rad/s]");
    return p.finish();
}

void write_plot_files(const CsvLog& log, const std::string& stem) {
    const std::pair<const char*, std::string (*)(const CsvLog&)> panels[] = {
        {"_trajectory.svg", render_trajectory_svg},
        {"_error.svg", render_error_svg},
        {"_commands.svg", render_commands_svg},
    };
    for (const auto& [suffix, render] : panels) {
        const std::string path = stem + suffix;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error(path + ": cannot open for writing");
        out << render(log);
        if (!out.flush()) throw Error(path + ": write failed");
    }
}

} // namespace fwu::tools
