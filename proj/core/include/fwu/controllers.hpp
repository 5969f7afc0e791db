#pragma once

#include "fwu/geometry.hpp"
#include "fwu/unicycle.hpp"

namespace fwu {

// Every law in this module consumes only the agent's own heading, the
// weighted bearing sum, and (for the moving-beacon law) the compensator
// state. Distances, positions, and velocities never enter.

/// Gains of the stationary-beacon law: nu = kp h.s, omega = kh h_perp.s,
/// where s is the weighted bearing sum.
struct StationaryGains {
    double kp;
    double kh;

    StationaryGains(double kp_, double kh_);
};

/// Symmetric-band actuator limits: nu in [-nu_b, nu_f], omega in
/// [-omega_r, omega_l]. All four bounds strictly positive.
struct SaturationLimits {
    double nu_b;
    double nu_f;
    double omega_r;
    double omega_l;

    SaturationLimits(double nu_b_, double nu_f_, double omega_r_, double omega_l_);
};

/// Gains of the moving-beacon law.
struct MovingGains {
    double k1; ///< linear-speed gain on the bearing sum
    double k2; ///< heading-rate gain
    double k3; ///< compensator adaptation gain

    MovingGains(double k1_, double k2_, double k3_);
};

/// Internal state of the moving-beacon law; converges to the common
/// beacon velocity in steady state.
struct CompensatorState {
    Vec2 phi{};
};

/// Multipliers rewriting the clamped commands as scaled raw commands:
/// sat_nu(x) = nu_scale * x and sat_omega(y) = omega_scale * y. Both are
/// strictly positive and equal 1 inside the bands.
struct SaturationFactors {
    double nu_scale;
    double omega_scale;
};

ControlCommand control_stationary(const StationaryGains& gains, Vec2 heading,
                                  Vec2 bearing_sum);

/// Clamp to [-nu_b, nu_f].
double sat_nu(const SaturationLimits& limits, double x);
/// Clamp to [-omega_r, omega_l].
double sat_omega(const SaturationLimits& limits, double x);

/// Unit-gain law with both channels clamped; output always within limits.
ControlCommand control_saturated(const SaturationLimits& limits, Vec2 heading,
                                 Vec2 bearing_sum);

/// Factors such that the clamped commands equal factor * raw command.
/// A raw input of exactly zero yields the continuous-limit factor 1.
SaturationFactors saturation_factors(const SaturationLimits& limits, Vec2 heading,
                                     Vec2 bearing_sum);

/// Moving-beacon law:
///   nu    = h . (k1 s + phi)
///   omega = k2 h_perp . (s + phi)
ControlCommand control_moving(const MovingGains& gains, Vec2 heading, Vec2 bearing_sum,
                              const CompensatorState& comp);

/// Compensator dynamics: phi_dot = k3 (h h^T s - (I - h h^T) phi).
/// Feeds the bearing sum through the heading axis and bleeds off the
/// component of phi transverse to the heading.
Vec2 compensator_derivative(const MovingGains& gains, Vec2 heading, Vec2 bearing_sum,
                            const CompensatorState& comp);

} // namespace fwu
