#include "fwu/unicycle.hpp"

#include <cmath>
#include <numbers>

namespace fwu {

double wrap_angle(double angle) {
    const double wrapped = std::remainder(angle, 2.0 * std::numbers::pi);
    // remainder lands in [-pi, pi]; fold the lower endpoint onto +pi.
    return wrapped <= -std::numbers::pi ? wrapped + 2.0 * std::numbers::pi : wrapped;
}

UnicycleState::UnicycleState(Vec2 position_, double heading_) : position(position_) {
    if (!std::isfinite(heading_)) throw NonFiniteValue("heading is not finite");
    heading = wrap_angle(heading_);
}

ControlCommand::ControlCommand(double nu_, double omega_) : nu(nu_), omega(omega_) {
    if (!std::isfinite(nu) || !std::isfinite(omega)) {
        throw NonFiniteValue("control command is not finite");
    }
}

Vec2 heading_vector(double heading) { return {std::cos(heading), std::sin(heading)}; }
Vec2 heading_perp(double heading) { return {-std::sin(heading), std::cos(heading)}; }

std::pair<Vec2, double> derivative(const UnicycleState& state, const ControlCommand& cmd) {
    return {heading_vector(state) * cmd.nu, cmd.omega};
}

UnicycleState step(const UnicycleState& state, const ControlCommand& cmd, double dt) {
    if (!(dt > 0.0)) throw Error("step: dt must be positive");

    const double theta = state.heading;
    const double omega = cmd.omega;

    // Heading evolves linearly under the held command; only the position
    // needs the four-stage evaluation.
    const Vec2 k1 = heading_vector(theta) * cmd.nu;
    const Vec2 k2 = heading_vector(theta + 0.5 * dt * omega) * cmd.nu;
    const Vec2 k3 = k2;
    const Vec2 k4 = heading_vector(theta + dt * omega) * cmd.nu;

    const Vec2 position = state.position + (k1 + (k2 + k3) * 2.0 + k4) * (dt / 6.0);
    return UnicycleState{position, wrap_angle(theta + dt * omega)};
}

} // namespace fwu
