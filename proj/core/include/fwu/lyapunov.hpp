#pragma once

#include <span>
#include <vector>

#include "fwu/controllers.hpp"
#include "fwu/geometry.hpp"

namespace fwu {

/// One certificate evaluation along a trajectory. V_dot_numeric is the
/// centered finite difference of V; NaN at the series endpoints where no
/// stencil exists.
struct CertificateSample {
    double t;
    double V;
    double V_dot_analytic;
    double V_dot_numeric;
    double min_beacon_distance;
    double tracking_error;
};

/// Collision-avoidance certificate: with initial certificate value
/// beta = V(0), the distance to the reference point never exceeds xi, so
/// no beacon closer than xi to the reference can be reached.
struct CollisionCertificate {
    double lambda_min; ///< smallest eigenvalue of sum_i gamma_i P_{g_i*}
    double sigma;      ///< 2 beta / lambda_min
    double xi;         ///< (sigma + sqrt(sigma^2 + 4 sigma max_i d_i*)) / 2
    double min_dstar;  ///< min_i ||p_i - p*||
    double max_dstar;  ///< max_i ||p_i - p*||
    bool guaranteed;   ///< xi < min_dstar
};

/// Certificate for the stationary and saturated laws:
/// V1 = sum_i gamma_i e_i^T (g_i - g_i*), zero exactly at the reference
/// point `fw`, strictly positive elsewhere. Beacons are evaluated at time t.
double v1(Vec2 agent, const BeaconSet& beacons, Vec2 fw, double t = 0.0);

/// Closed-loop decay rate of V1 under the stationary law:
/// -kp (h . s)^2 with s the weighted bearing sum. For the clamped law pass
/// the linear saturation factor in place of kp.
double v1_dot_analytic(Vec2 agent, Vec2 heading, const BeaconSet& beacons, double kp,
                       double t = 0.0);

/// Certificate for the moving-beacon law:
/// V2 = V1 + ||phi - v*||^2 / (2 k3) + ||v*|| ||h - h*||^2 / (2 k2),
/// with h* = v*/||v*||. Raises ZeroTargetVelocity when the beacon velocity
/// vanishes (the h* term degenerates; monitor falls back to V1).
double v2(Vec2 agent, Vec2 heading, const CompensatorState& comp, const BeaconSet& beacons,
          Vec2 fw, const MovingGains& gains, double t = 0.0);

/// Closed-loop decay rate of V2: -k1 (h . s)^2 - (h_perp . phi)^2.
double v2_dot_analytic(Vec2 agent, Vec2 heading, const CompensatorState& comp,
                       const BeaconSet& beacons, double k1, double t = 0.0);

/// |sum_i gamma_i g_i^T P_{g_i} e_i_dot| with e_i_dot = -agent_velocity
/// (stationary beacons). Identically zero since g^T P_g = 0; evaluating it
/// numerically bounds the roundoff floor of the certificate algebra.
double orthogonality_residual(Vec2 agent_velocity, const BeaconSet& beacons, Vec2 agent);

/// Builds the collision certificate from the initial certificate value and
/// the reference geometry. Raises NotPositiveDefinite when the weighted
/// projection sum is numerically singular (collinear degeneracy).
CollisionCertificate collision_certificate(double initial_V, const BeaconSet& beacons,
                                           Vec2 fw);

/// Lower bound on V1 in terms of the tracking error (the certificate
/// inequality underpinning the collision bound):
/// lambda_min r^2 / (2 (r + max_dstar)) with r = ||p - p*||.
double v1_lower_bound(double tracking_error, const CollisionCertificate& cert);

/// Assembles certificate samples from parallel trajectory columns and
/// fills V_dot_numeric by centered differences (endpoints get NaN).
/// All spans must have equal length.
std::vector<CertificateSample> certificate_series(std::span<const double> t,
                                                  std::span<const double> V,
                                                  std::span<const double> V_dot_analytic,
                                                  std::span<const double> min_beacon_distance,
                                                  std::span<const double> tracking_error);

} // namespace fwu
