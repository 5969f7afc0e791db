#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fwu/controllers.hpp"
#include "fwu/fwlp.hpp"
#include "fwu/lyapunov.hpp"
#include "fwu/unicycle.hpp"

namespace fwu {

struct StationaryConfig {
    StationaryGains gains;
};

struct SaturatedConfig {
    SaturationLimits limits;
};

struct MovingConfig {
    MovingGains gains;
    Vec2 phi0{};
};

using ControllerConfig = std::variant<StationaryConfig, SaturatedConfig, MovingConfig>;

const char* controller_kind_name(const ControllerConfig& config);

/// A complete closed-loop experiment description.
struct Scenario {
    BeaconSet beacons;
    UnicycleState agent_initial;
    ControllerConfig controller;
    double dt{1e-3};
    double t_final{60.0};
    double collision_epsilon{0.05};
    double convergence_tolerance{0.01};
    std::string label;

    /// Throws InvalidScenario (or CoincidentPoints when the agent starts on
    /// a beacon) if any invariant fails.
    void validate() const;
};

enum class RunOutcome : std::uint8_t { Converged, Timeout, Collision };

const char* to_string(RunOutcome outcome);

/// One logged step. Column order matches the trajectory CSV contract.
struct TrajectorySample {
    double t;
    double x;
    double y;
    double theta;
    double nu;
    double omega;
    double fw_x;
    double fw_y;
    double tracking_error;
    double V;
    double V_dot_analytic;
    double phi_x;
    double phi_y;
    double min_beacon_distance;
};

struct TrajectoryLog {
    Scenario scenario;
    Vec2 fw_initial{};        ///< reference point at t = 0
    double fw_residual{0.0};  ///< solver residual at fw_initial
    bool existence_ok{true};  ///< interior-optimality check passed at every beacon
    std::vector<TrajectorySample> samples;
    RunOutcome outcome{RunOutcome::Timeout};
    double outcome_time{0.0};

    const TrajectorySample& final_sample() const;
};

/// Integrates the closed loop with fixed-step RK4, the control law evaluated
/// inside every stage and the beacons advanced analytically. Terminates at
/// t_final, on convergence (tracking error at or below the tolerance for one
/// continuous second), or on collision (distance to a beacon below
/// collision_epsilon; the colliding state is not logged). Identical scenarios
/// produce bit-identical logs.
///
/// `log_decimation` keeps every k-th sample (the first and terminal samples
/// are always kept). Event detection always runs at full step resolution.
///
/// Throws SolverFailed when the initial Fermat-Weber solve does not converge.
TrajectoryLog run(const Scenario& scenario, int log_decimation = 1);

/// Certificate samples over a finished run (V_dot_numeric by centered
/// differences of the logged V column).
std::vector<CertificateSample> certificate_series(const TrajectoryLog& log);

/// In-place edit applied to a copy of the base scenario.
using ScenarioOverride = std::function<void(Scenario&)>;

/// Outcome of one sweep variant: a log, or the error that prevented it.
struct SweepResult {
    std::optional<TrajectoryLog> log;
    std::string error;

    bool ok() const { return log.has_value(); }
};

/// Runs one variant per override, concurrently; results are returned in
/// input order and per-variant failures never abort the batch.
std::vector<SweepResult> sweep(const Scenario& base, std::span<const ScenarioOverride> variations,
                               int log_decimation = 1);

} // namespace fwu
