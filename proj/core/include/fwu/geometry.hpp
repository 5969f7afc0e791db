#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "fwu/errors.hpp"

namespace fwu {

/// Separation below which a bearing is declared undefined. Geometry this
/// close to a beacon is collision-adjacent and raises CoincidentPoints.
inline constexpr double kSingularSeparation = 1e-6;

/// Relative threshold on the smallest singular value of the centered
/// beacon matrix; below it the beacons are treated as collinear.
inline constexpr double kCollinearityThreshold = 1e-9;

/// Planar vector with finite components. Constructors reject NaN/Inf.
struct Vec2 {
    double x{0.0};
    double y{0.0};

    constexpr Vec2() = default;

    Vec2(double x_, double y_) : x(x_), y(y_) {
        if (!std::isfinite(x) || !std::isfinite(y)) {
            throw NonFiniteValue("Vec2 component is not finite");
        }
    }

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }

    Vec2& operator+=(Vec2 o) { return *this = *this + o; }
    Vec2& operator-=(Vec2 o) { return *this = *this - o; }
    Vec2& operator*=(double s) { return *this = *this * s; }

    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm_sq() const { return x * x + y * y; }
    double norm() const { return std::sqrt(x * x + y * y); }

    /// Counterclockwise quarter turn: (x, y) -> (-y, x).
    Vec2 perp() const { return {-y, x}; }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }
inline double dot(Vec2 a, Vec2 b) { return a.dot(b); }
inline double norm(Vec2 v) { return v.norm(); }
inline double distance(Vec2 a, Vec2 b) { return (b - a).norm(); }

/// 2x2 real matrix, row-major, finite entries.
struct Mat2 {
    double m00{0.0}, m01{0.0};
    double m10{0.0}, m11{0.0};

    constexpr Mat2() = default;

    Mat2(double a, double b, double c, double d) : m00(a), m01(b), m10(c), m11(d) {
        if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d)) {
            throw NonFiniteValue("Mat2 entry is not finite");
        }
    }

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    /// Outer product a b^T.
    static Mat2 outer(Vec2 a, Vec2 b) {
        return {a.x * b.x, a.x * b.y, a.y * b.x, a.y * b.y};
    }

    Mat2 operator+(const Mat2& o) const {
        return {m00 + o.m00, m01 + o.m01, m10 + o.m10, m11 + o.m11};
    }
    Mat2 operator-(const Mat2& o) const {
        return {m00 - o.m00, m01 - o.m01, m10 - o.m10, m11 - o.m11};
    }
    Mat2 operator*(double s) const { return {m00 * s, m01 * s, m10 * s, m11 * s}; }

    Vec2 operator*(Vec2 v) const { return {m00 * v.x + m01 * v.y, m10 * v.x + m11 * v.y}; }

    Mat2 operator*(const Mat2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }

    Mat2 transpose() const { return {m00, m10, m01, m11}; }
};

/// Eigenvalues {min, max} of a symmetric 2x2 matrix, closed form.
/// Symmetry is taken from the upper triangle; m10 is ignored.
std::pair<double, double> symmetric_eigenvalues(const Mat2& m);

/// Beacon constellation: positions, positive weights, and the common
/// constant velocity. Immutable after construction.
///
/// Construction enforces: at least three beacons, matching position and
/// weight counts, strictly positive weights, pairwise-distinct positions
/// (separation above kSingularSeparation), and non-collinearity (smallest
/// singular value of the centered position matrix above
/// kCollinearityThreshold relative to the largest).
class BeaconSet {
public:
    BeaconSet(std::vector<Vec2> positions, std::vector<double> weights,
              Vec2 velocity = Vec2{});

    const std::vector<Vec2>& positions() const { return positions_; }
    const std::vector<double>& weights() const { return weights_; }
    Vec2 velocity() const { return velocity_; }
    std::size_t size() const { return positions_.size(); }

    /// Position of beacon i at time t: p_i(0) + v t.
    Vec2 position_at(std::size_t i, double t) const {
        return positions_[i] + velocity_ * t;
    }

    double total_weight() const { return total_weight_; }

private:
    std::vector<Vec2> positions_;
    std::vector<double> weights_;
    Vec2 velocity_;
    double total_weight_{0.0};
};

/// Unit bearing vector from `agent` toward `beacon`.
/// Raises CoincidentPoints when the separation is kSingularSeparation or less.
Vec2 bearing(Vec2 agent, Vec2 beacon);

/// Orthogonal projection I - g g^T onto the complement of unit vector g.
/// Raises NotUnit unless ||g|| = 1 within 1e-9.
Mat2 projection(Vec2 g);

/// Weighted sum of bearings from `agent` to every beacon, evaluated with
/// the beacons advanced to time t.
Vec2 weighted_bearing_sum(Vec2 agent, const BeaconSet& beacons, double t = 0.0);

/// Distance from `agent` to the nearest beacon at time t.
double min_beacon_distance(Vec2 agent, const BeaconSet& beacons, double t = 0.0);

} // namespace fwu
