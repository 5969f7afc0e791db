#include "fwu_tools/grid_search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "fwu/errors.hpp"

namespace fwu::tools {

GridMinimum grid_minimize(const BeaconSet& beacons, double resolution, double padding_fraction) {
    if (!(resolution > 0.0)) throw Error("grid resolution must be positive");

    double x_lo = beacons.positions()[0].x, x_hi = x_lo;
    double y_lo = beacons.positions()[0].y, y_hi = y_lo;
    for (const Vec2& p : beacons.positions()) {
        x_lo = std::min(x_lo, p.x);
        x_hi = std::max(x_hi, p.x);
        y_lo = std::min(y_lo, p.y);
        y_hi = std::max(y_hi, p.y);
    }
    const double pad_x = std::max((x_hi - x_lo) * padding_fraction, resolution);
    const double pad_y = std::max((y_hi - y_lo) * padding_fraction, resolution);
    x_lo -= pad_x;
    x_hi += pad_x;
    y_lo -= pad_y;
    y_hi += pad_y;

    const auto nx = static_cast<std::int64_t>(std::floor((x_hi - x_lo) / resolution)) + 1;
    const auto ny = static_cast<std::int64_t>(std::floor((y_hi - y_lo) / resolution)) + 1;

    const auto& pos = beacons.positions();
    const auto& w = beacons.weights();
    const std::size_t n = beacons.size();

    GridMinimum best{{x_lo, y_lo}, std::numeric_limits<double>::infinity()};
    for (std::int64_t iy = 0; iy < ny; ++iy) {
        const double y = y_lo + static_cast<double>(iy) * resolution;
        for (std::int64_t ix = 0; ix < nx; ++ix) {
            const double x = x_lo + static_cast<double>(ix) * resolution;
            double sum = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double dx = x - pos[i].x;
                const double dy = y - pos[i].y;
                sum += w[i] * std::sqrt(dx * dx + dy * dy);
            }
            if (sum < best.value) best = {{x, y}, sum};
        }
    }
    return best;
}

} // namespace fwu::tools
