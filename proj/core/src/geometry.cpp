#include "fwu/geometry.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace fwu {

namespace {

// Accumulates rows of an n x 2 matrix into its upper-triangular QR factor
// with Givens rotations. Only R is kept; singular values of the input equal
// those of R. Stable down to sigma_min ~ eps * sigma_max, which the scatter
// matrix route cannot resolve.
struct GivensQr2 {
    double r00 = 0.0, r01 = 0.0, r11 = 0.0;

    void add_row(double x, double y) {
        if (x != 0.0) {
            const double r = std::hypot(r00, x);
            const double c = r00 / r;
            const double s = x / r;
            const double r01_rot = c * r01 + s * y;
            y = -s * r01 + c * y;
            r00 = r;
            r01 = r01_rot;
        }
        r11 = std::hypot(r11, y);
    }
};

// Singular values {min, max} of [[a, b], [0, d]] via the standard stable
// 2x2 formula.
std::pair<double, double> singular_values_upper(double a, double b, double d) {
    const double e = (a + d) / 2.0;
    const double f = (a - d) / 2.0;
    const double g = b / 2.0;
    const double q = std::hypot(e, g);
    const double r = std::hypot(f, g);
    const double smax = q + r;
    const double smin = std::abs(q - r);
    return {smin, smax};
}

} // namespace

std::pair<double, double> symmetric_eigenvalues(const Mat2& m) {
    const double mean = (m.m00 + m.m11) / 2.0;
    const double radius = std::hypot((m.m00 - m.m11) / 2.0, m.m01);
    return {mean - radius, mean + radius};
}

BeaconSet::BeaconSet(std::vector<Vec2> positions, std::vector<double> weights,
                     Vec2 velocity)
    : positions_(std::move(positions)), weights_(std::move(weights)), velocity_(velocity) {
    if (positions_.size() != weights_.size()) {
        throw InvalidBeaconSet("beacon position and weight counts differ");
    }
    if (positions_.size() < 3) {
        throw InvalidBeaconSet("at least three beacons are required");
    }
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
            throw InvalidBeaconSet("beacon weight " + std::to_string(i) +
                                   " must be strictly positive");
        }
        total_weight_ += weights_[i];
    }
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        for (std::size_t j = i + 1; j < positions_.size(); ++j) {
            if (distance(positions_[i], positions_[j]) <= kSingularSeparation) {
                throw InvalidBeaconSet("beacons " + std::to_string(i) + " and " +
                                       std::to_string(j) + " coincide");
            }
        }
    }

    Vec2 mean{};
    for (const Vec2& p : positions_) mean += p;
    mean *= 1.0 / static_cast<double>(positions_.size());

    GivensQr2 qr;
    for (const Vec2& p : positions_) {
        const Vec2 c = p - mean;
        qr.add_row(c.x, c.y);
    }
    const auto [smin, smax] = singular_values_upper(qr.r00, qr.r01, qr.r11);
    if (smin <= kCollinearityThreshold * smax) {
        throw InvalidBeaconSet("beacons are collinear (relative spread " +
                               std::to_string(smax > 0.0 ? smin / smax : 0.0) + ")");
    }
}

Vec2 bearing(Vec2 agent, Vec2 beacon) {
    const Vec2 displacement = beacon - agent;
    const double separation = displacement.norm();
    if (separation <= kSingularSeparation) {
        throw CoincidentPoints("bearing undefined: separation " +
                               std::to_string(separation) + " m");
    }
    return displacement / separation;
}

Mat2 projection(Vec2 g) {
    if (std::abs(g.norm() - 1.0) > 1e-9) {
        throw NotUnit("projection requires a unit vector, got norm " +
                      std::to_string(g.norm()));
    }
    return Mat2::identity() - Mat2::outer(g, g);
}

Vec2 weighted_bearing_sum(Vec2 agent, const BeaconSet& beacons, double t) {
    Vec2 sum{};
    for (std::size_t i = 0; i < beacons.size(); ++i) {
        sum += beacons.weights()[i] * bearing(agent, beacons.position_at(i, t));
    }
    return sum;
}

double min_beacon_distance(Vec2 agent, const BeaconSet& beacons, double t) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < beacons.size(); ++i) {
        best = std::min(best, distance(agent, beacons.position_at(i, t)));
    }
    return best;
}

} // namespace fwu
