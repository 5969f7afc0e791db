#pragma once

#include <utility>

#include "fwu/geometry.hpp"

namespace fwu {

/// Wraps an angle into (-pi, pi].
double wrap_angle(double angle);

/// Kinematic unicycle state. The heading is stored as a scalar angle in
/// (-pi, pi] so that the derived heading vector is exactly unit length.
struct UnicycleState {
    Vec2 position{};
    double heading{0.0};

    UnicycleState() = default;
    UnicycleState(Vec2 position_, double heading_);
};

/// Linear speed (m/s) and angular rate (rad/s) command pair.
struct ControlCommand {
    double nu{0.0};
    double omega{0.0};

    ControlCommand() = default;
    ControlCommand(double nu_, double omega_);
};

Vec2 heading_vector(double heading);
Vec2 heading_perp(double heading);

/// (cos theta, sin theta).
inline Vec2 heading_vector(const UnicycleState& state) { return heading_vector(state.heading); }
/// (-sin theta, cos theta), a quarter turn left of the heading.
inline Vec2 heading_perp(const UnicycleState& state) { return heading_perp(state.heading); }

/// Kinematics right-hand side: (position rate, heading rate) = (nu h, omega).
std::pair<Vec2, double> derivative(const UnicycleState& state, const ControlCommand& cmd);

/// One classical RK4 step of the kinematics with the command held constant
/// over [0, dt] (zero-order hold). The resulting heading is wrapped.
UnicycleState step(const UnicycleState& state, const ControlCommand& cmd, double dt);

} // namespace fwu
