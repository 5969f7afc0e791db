#include "fwu/controllers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fwu {

namespace {

void require_unit(Vec2 heading) {
    if (std::abs(heading.norm() - 1.0) > 1e-9) {
        throw NotUnit("heading must be a unit vector, got norm " +
                      std::to_string(heading.norm()));
    }
}

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw Error(std::string(name) + " must be strictly positive");
    }
}

} // namespace

StationaryGains::StationaryGains(double kp_, double kh_) : kp(kp_), kh(kh_) {
    require_positive(kp, "kp");
    require_positive(kh, "kh");
}

SaturationLimits::SaturationLimits(double nu_b_, double nu_f_, double omega_r_,
                                   double omega_l_)
    : nu_b(nu_b_), nu_f(nu_f_), omega_r(omega_r_), omega_l(omega_l_) {
    require_positive(nu_b, "nu_b");
    require_positive(nu_f, "nu_f");
    require_positive(omega_r, "omega_r");
    require_positive(omega_l, "omega_l");
}

MovingGains::MovingGains(double k1_, double k2_, double k3_) : k1(k1_), k2(k2_), k3(k3_) {
    require_positive(k1, "k1");
    require_positive(k2, "k2");
    require_positive(k3, "k3");
}

ControlCommand control_stationary(const StationaryGains& gains, Vec2 heading,
                                  Vec2 bearing_sum) {
    require_unit(heading);
    return {gains.kp * heading.dot(bearing_sum),
            gains.kh * heading.perp().dot(bearing_sum)};
}

double sat_nu(const SaturationLimits& limits, double x) {
    return std::clamp(x, -limits.nu_b, limits.nu_f);
}

double sat_omega(const SaturationLimits& limits, double x) {
    return std::clamp(x, -limits.omega_r, limits.omega_l);
}

ControlCommand control_saturated(const SaturationLimits& limits, Vec2 heading,
                                 Vec2 bearing_sum) {
    require_unit(heading);
    return {sat_nu(limits, heading.dot(bearing_sum)),
            sat_omega(limits, heading.perp().dot(bearing_sum))};
}

SaturationFactors saturation_factors(const SaturationLimits& limits, Vec2 heading,
                                     Vec2 bearing_sum) {
    require_unit(heading);
    const double raw_nu = heading.dot(bearing_sum);
    const double raw_omega = heading.perp().dot(bearing_sum);

    SaturationFactors factors{1.0, 1.0};
    if (raw_nu < -limits.nu_b) {
        factors.nu_scale = -limits.nu_b / raw_nu;
    } else if (raw_nu > limits.nu_f) {
        factors.nu_scale = limits.nu_f / raw_nu;
    }
    if (raw_omega < -limits.omega_r) {
        factors.omega_scale = -limits.omega_r / raw_omega;
    } else if (raw_omega > limits.omega_l) {
        factors.omega_scale = limits.omega_l / raw_omega;
    }
    return factors;
}

ControlCommand control_moving(const MovingGains& gains, Vec2 heading, Vec2 bearing_sum,
                              const CompensatorState& comp) {
    require_unit(heading);
    return {heading.dot(bearing_sum * gains.k1 + comp.phi),
            gains.k2 * heading.perp().dot(bearing_sum + comp.phi)};
}

Vec2 compensator_derivative(const MovingGains& gains, Vec2 heading, Vec2 bearing_sum,
                            const CompensatorState& comp) {
    require_unit(heading);
    const double along = heading.dot(bearing_sum);
    const Vec2 transverse = comp.phi - heading * heading.dot(comp.phi);
    return (heading * along - transverse) * gains.k3;
}

} // namespace fwu
