#pragma once

#include "fwu/fwlp.hpp"

namespace fwu::tools {

struct GridMinimum {
    Vec2 point;
    double value;
};

// Exhaustive minimizer of the weighted distance sum over a regular grid
// covering the beacon bounding box padded by padding_fraction of its span on
// each side. The objective is convex, so the grid argmin lies within one cell
// diagonal of the true minimizer. Deterministic: ties keep the first hit in
// row-major order.
GridMinimum grid_minimize(const BeaconSet& beacons, double resolution,
                          double padding_fraction = 0.25);

} // namespace fwu::tools
