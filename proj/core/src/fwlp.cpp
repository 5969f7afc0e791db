#include "fwu/fwlp.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

namespace fwu {

namespace {

// ||sum_{i != k} gamma_i g_i(p_k)|| - gamma_k, the margin of the interior-
// optimality inequality at beacon k. Positive margin: the pull of the other
// beacons exceeds the weight of beacon k, so the optimum is interior to it.
double beacon_pull_margin(const BeaconSet& beacons, std::size_t k) {
    Vec2 pull{};
    for (std::size_t i = 0; i < beacons.size(); ++i) {
        if (i == k) continue;
        pull += beacons.weights()[i] *
                bearing(beacons.positions()[k], beacons.positions()[i]);
    }
    return pull.norm() - beacons.weights()[k];
}

} // namespace

const char* to_string(FwStatus status) {
    switch (status) {
        case FwStatus::Converged: return "Converged";
        case FwStatus::BeaconOptimal: return "BeaconOptimal";
        case FwStatus::MaxIterations: return "MaxIterations";
    }
    return "unknown";
}

std::vector<bool> existence_check(const BeaconSet& beacons) {
    std::vector<bool> interior(beacons.size());
    for (std::size_t k = 0; k < beacons.size(); ++k) {
        interior[k] = beacon_pull_margin(beacons, k) > 0.0;
    }
    return interior;
}

double optimality_residual(Vec2 point, const BeaconSet& beacons) {
    return weighted_bearing_sum(point, beacons).norm();
}

double weighted_distance_sum(Vec2 point, const BeaconSet& beacons) {
    double sum = 0.0;
    for (std::size_t i = 0; i < beacons.size(); ++i) {
        sum += beacons.weights()[i] * distance(point, beacons.positions()[i]);
    }
    return sum;
}

FwSolution weiszfeld(const BeaconSet& beacons, double tol, int max_iter,
                     const WeiszfeldObserver& observer) {
    if (!(tol > 0.0)) throw Error("weiszfeld: tol must be positive");
    if (max_iter < 1) throw Error("weiszfeld: max_iter must be at least 1");

    Vec2 point{};
    for (std::size_t i = 0; i < beacons.size(); ++i) {
        point += beacons.weights()[i] * beacons.positions()[i];
    }
    point *= 1.0 / beacons.total_weight();

    FwSolution solution;
    for (int iter = 0; iter <= max_iter; ++iter) {
        // Resolve proximity to a beacon before touching the bearing sum.
        // Stepping off one beacon can in principle land near another, so
        // scan until a full pass is clean.
        bool clean = false;
        for (int pass = 0; pass < 16 && !clean; ++pass) {
            clean = true;
            for (std::size_t k = 0; k < beacons.size(); ++k) {
                if (distance(point, beacons.positions()[k]) > kSingularSeparation) continue;
                const double margin = beacon_pull_margin(beacons, k);
                if (margin <= 0.0) {
                    solution.point = beacons.positions()[k];
                    solution.residual = std::max(0.0, margin);
                    solution.iterations = iter;
                    solution.status = FwStatus::BeaconOptimal;
                    if (observer) observer(solution.point, weighted_distance_sum(solution.point, beacons));
                    return solution;
                }
                // Optimum is interior: step off the beacon along the pull of
                // the others and continue iterating.
                Vec2 pull{};
                for (std::size_t i = 0; i < beacons.size(); ++i) {
                    if (i == k) continue;
                    pull += beacons.weights()[i] *
                            bearing(beacons.positions()[k], beacons.positions()[i]);
                }
                point = beacons.positions()[k] + (pull / pull.norm()) * (10.0 * kSingularSeparation);
                clean = false;
                break;
            }
        }

        if (observer) observer(point, weighted_distance_sum(point, beacons));

        const double residual = optimality_residual(point, beacons);
        if (residual <= tol) {
            solution.point = point;
            solution.residual = residual;
            solution.iterations = iter;
            solution.status = FwStatus::Converged;
            return solution;
        }
        if (iter == max_iter) break;

        // Weiszfeld update: weighted average of beacons with weights
        // gamma_i / ||point - p_i||.
        Vec2 numerator{};
        double denominator = 0.0;
        for (std::size_t i = 0; i < beacons.size(); ++i) {
            const double w = beacons.weights()[i] / distance(point, beacons.positions()[i]);
            numerator += w * beacons.positions()[i];
            denominator += w;
        }
        point = numerator / denominator;
    }

    solution.point = point;
    try {
        solution.residual = optimality_residual(point, beacons);
    } catch (const CoincidentPoints&) {
        solution.residual = std::numeric_limits<double>::infinity();
    }
    solution.iterations = max_iter;
    solution.status = FwStatus::MaxIterations;
    return solution;
}

Vec2 fw_point_at_time(const FwSolution& initial_solution, Vec2 velocity, double t) {
    if (initial_solution.status != FwStatus::Converged) {
        throw SolverFailed("fw_point_at_time requires a converged initial solution");
    }
    return initial_solution.point + velocity * t;
}

} // namespace fwu
