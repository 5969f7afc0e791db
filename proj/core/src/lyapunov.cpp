#include "fwu/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fwu {

double v1(Vec2 agent, const BeaconSet& beacons, Vec2 fw, double t) {
    double value = 0.0;
    for (std::size_t i = 0; i < beacons.size(); ++i) {
        const Vec2 beacon = beacons.position_at(i, t);
        const Vec2 displacement = beacon - agent;
        const Vec2 g = bearing(agent, beacon);
        const Vec2 g_star = bearing(fw, beacon);
        value += beacons.weights()[i] * displacement.dot(g - g_star);
    }
    return value;
}

double v1_dot_analytic(Vec2 agent, Vec2 heading, const BeaconSet& beacons, double kp,
                       double t) {
    const double along = heading.dot(weighted_bearing_sum(agent, beacons, t));
    return -kp * along * along;
}

double v2(Vec2 agent, Vec2 heading, const CompensatorState& comp, const BeaconSet& beacons,
          Vec2 fw, const MovingGains& gains, double t) {
    const Vec2 velocity = beacons.velocity();
    const double speed = velocity.norm();
    if (speed <= 0.0) {
        throw ZeroTargetVelocity("V2 degenerates for stationary beacons; use V1");
    }
    const Vec2 desired_heading = velocity / speed;
    const double geometric = v1(agent, beacons, fw, t);
    const double compensator_error = (comp.phi - velocity).norm_sq() / (2.0 * gains.k3);
    const double heading_error = speed * (heading - desired_heading).norm_sq() / (2.0 * gains.k2);
    return geometric + compensator_error + heading_error;
}

double v2_dot_analytic(Vec2 agent, Vec2 heading, const CompensatorState& comp,
                       const BeaconSet& beacons, double k1, double t) {
    const double along = heading.dot(weighted_bearing_sum(agent, beacons, t));
    const double transverse = heading.perp().dot(comp.phi);
    return -k1 * along * along - transverse * transverse;
}

double orthogonality_residual(Vec2 agent_velocity, const BeaconSet& beacons, Vec2 agent) {
    const Vec2 displacement_rate = -agent_velocity;
    double residual = 0.0;
    for (std::size_t i = 0; i < beacons.size(); ++i) {
        const Vec2 g = bearing(agent, beacons.positions()[i]);
        residual += beacons.weights()[i] * g.dot(projection(g) * displacement_rate);
    }
    return std::abs(residual);
}

CollisionCertificate collision_certificate(double initial_V, const BeaconSet& beacons,
                                           Vec2 fw) {
    if (initial_V < 0.0) throw Error("collision_certificate: initial V must be nonnegative");

    Mat2 weighted_projection_sum{};
    double min_dstar = std::numeric_limits<double>::infinity();
    double max_dstar = 0.0;
    for (std::size_t i = 0; i < beacons.size(); ++i) {
        const Vec2 g_star = bearing(fw, beacons.positions()[i]);
        weighted_projection_sum =
            weighted_projection_sum + projection(g_star) * beacons.weights()[i];
        const double d = distance(fw, beacons.positions()[i]);
        min_dstar = std::min(min_dstar, d);
        max_dstar = std::max(max_dstar, d);
    }

    const auto [lambda_min, lambda_max] = symmetric_eigenvalues(weighted_projection_sum);
    if (lambda_min <= 1e-9 * std::max(lambda_max, 1.0)) {
        throw NotPositiveDefinite("weighted projection sum is numerically singular");
    }

    CollisionCertificate cert{};
    cert.lambda_min = lambda_min;
    cert.min_dstar = min_dstar;
    cert.max_dstar = max_dstar;
    cert.sigma = 2.0 * initial_V / lambda_min;
    cert.xi = (cert.sigma + std::sqrt(cert.sigma * cert.sigma + 4.0 * cert.sigma * max_dstar)) / 2.0;
    cert.guaranteed = cert.xi < min_dstar;
    return cert;
}

double v1_lower_bound(double tracking_error, const CollisionCertificate& cert) {
    return cert.lambda_min * tracking_error * tracking_error /
           (2.0 * (tracking_error + cert.max_dstar));
}

std::vector<CertificateSample> certificate_series(std::span<const double> t,
                                                  std::span<const double> V,
                                                  std::span<const double> V_dot_analytic,
                                                  std::span<const double> min_beacon_distance,
                                                  std::span<const double> tracking_error) {
    const std::size_t n = t.size();
    if (V.size() != n || V_dot_analytic.size() != n || min_beacon_distance.size() != n ||
        tracking_error.size() != n) {
        throw Error("certificate_series: column lengths differ");
    }
    std::vector<CertificateSample> samples(n);
    for (std::size_t i = 0; i < n; ++i) {
        double numeric = std::numeric_limits<double>::quiet_NaN();
        if (i > 0 && i + 1 < n) {
            numeric = (V[i + 1] - V[i - 1]) / (t[i + 1] - t[i - 1]);
        }
        samples[i] = {t[i], V[i], V_dot_analytic[i], numeric, min_beacon_distance[i],
                      tracking_error[i]};
    }
    return samples;
}

} // namespace fwu
