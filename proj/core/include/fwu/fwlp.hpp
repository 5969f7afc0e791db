#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fwu/geometry.hpp"

namespace fwu {

enum class FwStatus : std::uint8_t {
    Converged,     ///< residual at `point` is at or below the requested tolerance
    BeaconOptimal, ///< the minimizer is a beacon position (interior optimality fails there)
    MaxIterations, ///< iteration budget exhausted; `point` is the last iterate
};

const char* to_string(FwStatus status);

/// Result of a Fermat-Weber solve.
///
/// `residual` is ||sum_i gamma_i g_i(point)|| for interior points. For a
/// BeaconOptimal solution the bearing sum is singular at `point`, so the
/// residual reported is the subgradient violation
/// max(0, ||sum_{i != k} gamma_i g_i(p_k)|| - gamma_k), which is zero
/// exactly when the beacon is optimal.
struct FwSolution {
    Vec2 point{};
    double residual{0.0};
    int iterations{0};
    FwStatus status{FwStatus::MaxIterations};
};

/// Per-beacon interior-optimality test: entry k is true iff
/// ||sum_{i != k} gamma_i (p_i - p_k)/||p_i - p_k|| || > gamma_k.
/// All entries true certifies a unique Fermat-Weber point away from
/// every beacon.
std::vector<bool> existence_check(const BeaconSet& beacons);

/// Observer invoked once per iterate with (iterate, weighted objective).
using WeiszfeldObserver = std::function<void(Vec2, double)>;

/// Fixed-point iteration for the weighted Fermat-Weber point.
///
/// Starts from the weighted centroid. When an iterate lands within
/// kSingularSeparation of beacon k, the beacon's optimality is tested:
/// if it is optimal the solve returns BeaconOptimal at that beacon,
/// otherwise the iterate steps away along the residual direction and the
/// iteration continues. Non-convergence is reported through the status,
/// never thrown.
FwSolution weiszfeld(const BeaconSet& beacons, double tol = 1e-10,
                     int max_iter = 10000, const WeiszfeldObserver& observer = {});

/// ||sum_i gamma_i g_i(point)||; zero characterizes the Fermat-Weber point.
double optimality_residual(Vec2 point, const BeaconSet& beacons);

/// Weighted objective sum_i gamma_i ||point - p_i||.
double weighted_distance_sum(Vec2 point, const BeaconSet& beacons);

/// Fermat-Weber point at time t for beacons translating with the common
/// velocity: the relative geometry is translation invariant, so
/// p*(t) = p*(0) + v t. Requires a Converged initial solution.
Vec2 fw_point_at_time(const FwSolution& initial_solution, Vec2 velocity, double t);

} // namespace fwu
