#include "fwu/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <future>

namespace fwu {

namespace {

struct LoopState {
    Vec2 position;
    double heading;
    Vec2 phi;
};

struct LoopRates {
    Vec2 position_rate;
    double heading_rate;
    Vec2 phi_rate;
};

LoopState advance(const LoopState& s, const LoopRates& r, double scale) {
    return {s.position + r.position_rate * scale, s.heading + r.heading_rate * scale,
            s.phi + r.phi_rate * scale};
}

// Closed-loop right-hand side: evaluates the configured control law at the
// given state and time (beacons advanced analytically).
class ClosedLoop {
public:
    ClosedLoop(const BeaconSet& beacons, const ControllerConfig& controller)
        : beacons_(beacons), controller_(controller) {}

    LoopRates rates(double t, const LoopState& s, ControlCommand* command_out = nullptr) const {
        const Vec2 h = heading_vector(s.heading);
        const Vec2 bearing_sum = weighted_bearing_sum(s.position, beacons_, t);

        ControlCommand cmd;
        Vec2 phi_rate{};
        if (const auto* stationary = std::get_if<StationaryConfig>(&controller_)) {
            cmd = control_stationary(stationary->gains, h, bearing_sum);
        } else if (const auto* saturated = std::get_if<SaturatedConfig>(&controller_)) {
            cmd = control_saturated(saturated->limits, h, bearing_sum);
        } else {
            const auto& moving = std::get<MovingConfig>(controller_);
            cmd = control_moving(moving.gains, h, bearing_sum, {s.phi});
            phi_rate = compensator_derivative(moving.gains, h, bearing_sum, {s.phi});
        }
        if (command_out) *command_out = cmd;
        return {h * cmd.nu, cmd.omega, phi_rate};
    }

    LoopState rk4_step(double t, const LoopState& s, double dt) const {
        const LoopRates k1 = rates(t, s);
        const LoopRates k2 = rates(t + 0.5 * dt, advance(s, k1, 0.5 * dt));
        const LoopRates k3 = rates(t + 0.5 * dt, advance(s, k2, 0.5 * dt));
        const LoopRates k4 = rates(t + dt, advance(s, k3, dt));

        LoopState next = s;
        next.position += (k1.position_rate + (k2.position_rate + k3.position_rate) * 2.0 +
                          k4.position_rate) *
                         (dt / 6.0);
        next.heading += (k1.heading_rate + 2.0 * (k2.heading_rate + k3.heading_rate) +
                         k4.heading_rate) *
                        (dt / 6.0);
        next.phi += (k1.phi_rate + (k2.phi_rate + k3.phi_rate) * 2.0 + k4.phi_rate) * (dt / 6.0);
        next.heading = wrap_angle(next.heading);
        return next;
    }

private:
    const BeaconSet& beacons_;
    const ControllerConfig& controller_;
};

} // namespace

const char* controller_kind_name(const ControllerConfig& config) {
    if (std::holds_alternative<StationaryConfig>(config)) return "stationary";
    if (std::holds_alternative<SaturatedConfig>(config)) return "saturated";
    return "moving";
}

const char* to_string(RunOutcome outcome) {
    switch (outcome) {
        case RunOutcome::Converged: return "Converged";
        case RunOutcome::Timeout: return "Timeout";
        case RunOutcome::Collision: return "Collision";
    }
    return "unknown";
}

void Scenario::validate() const {
    if (!(dt > 0.0)) throw InvalidScenario("dt must be positive");
    if (!(t_final > 0.0)) throw InvalidScenario("t_final must be positive");
    if (dt > t_final) throw InvalidScenario("dt must not exceed t_final");
    if (!(collision_epsilon >= kSingularSeparation)) {
        throw InvalidScenario("collision_epsilon must be at least the singular separation");
    }
    if (!(convergence_tolerance > 0.0)) {
        throw InvalidScenario("convergence_tolerance must be positive");
    }
    const double separation = min_beacon_distance(agent_initial.position, beacons, 0.0);
    if (separation <= kSingularSeparation) {
        throw CoincidentPoints("agent starts on a beacon (separation " +
                               std::to_string(separation) + " m)");
    }
}

const TrajectorySample& TrajectoryLog::final_sample() const {
    if (samples.empty()) throw Error("trajectory log holds no samples");
    return samples.back();
}

TrajectoryLog run(const Scenario& scenario, int log_decimation) {
    scenario.validate();
    if (log_decimation < 1) throw Error("log_decimation must be at least 1");

    TrajectoryLog log{scenario};

    const auto existence = existence_check(scenario.beacons);
    log.existence_ok = std::all_of(existence.begin(), existence.end(), [](bool b) { return b; });

    const FwSolution solution = weiszfeld(scenario.beacons);
    if (solution.status != FwStatus::Converged) {
        throw SolverFailed(std::string("initial Fermat-Weber solve ended ") +
                           to_string(solution.status));
    }
    log.fw_initial = solution.point;
    log.fw_residual = solution.residual;

    const ClosedLoop loop(scenario.beacons, scenario.controller);
    const auto* moving = std::get_if<MovingConfig>(&scenario.controller);
    const bool beacons_moving = scenario.beacons.velocity().norm_sq() > 0.0;

    LoopState state{scenario.agent_initial.position, scenario.agent_initial.heading,
                    moving ? moving->phi0 : Vec2{}};

    const double dt = scenario.dt;
    double dwell_start = -1.0;

    auto make_sample = [&](double t, const LoopState& s, const ControlCommand& cmd,
                           double min_dist) {
        const Vec2 fw_t = log.fw_initial + scenario.beacons.velocity() * t;
        const Vec2 h = heading_vector(s.heading);
        const double tracking_error = distance(s.position, fw_t);

        double V = 0.0;
        double V_dot = 0.0;
        if (const auto* stationary = std::get_if<StationaryConfig>(&scenario.controller)) {
            V = v1(s.position, scenario.beacons, fw_t, t);
            V_dot = v1_dot_analytic(s.position, h, scenario.beacons, stationary->gains.kp, t);
        } else if (const auto* saturated = std::get_if<SaturatedConfig>(&scenario.controller)) {
            V = v1(s.position, scenario.beacons, fw_t, t);
            const auto factors = saturation_factors(
                saturated->limits, h, weighted_bearing_sum(s.position, scenario.beacons, t));
            V_dot = v1_dot_analytic(s.position, h, scenario.beacons, factors.nu_scale, t);
        } else {
            const auto& cfg = std::get<MovingConfig>(scenario.controller);
            // V2 needs a nonzero beacon velocity; fall back to V1 otherwise.
            V = beacons_moving
                    ? v2(s.position, h, {s.phi}, scenario.beacons, fw_t, cfg.gains, t)
                    : v1(s.position, scenario.beacons, fw_t, t);
            V_dot = v2_dot_analytic(s.position, h, {s.phi}, scenario.beacons, cfg.gains.k1, t);
        }

        return TrajectorySample{t, s.position.x, s.position.y, s.heading, cmd.nu,
                                cmd.omega, fw_t.x, fw_t.y, tracking_error, V,
                                V_dot, s.phi.x, s.phi.y, min_dist};
    };

    for (long step_index = 0;; ++step_index) {
        const double t = static_cast<double>(step_index) * dt;

        const double min_dist = min_beacon_distance(state.position, scenario.beacons, t);
        if (min_dist < scenario.collision_epsilon) {
            log.outcome = RunOutcome::Collision;
            log.outcome_time = t;
            break;
        }

        ControlCommand cmd;
        TrajectorySample sample;
        try {
            loop.rates(t, state, &cmd);
            sample = make_sample(t, state, cmd, min_dist);
        } catch (const CoincidentPoints&) {
            log.outcome = RunOutcome::Collision;
            log.outcome_time = t;
            break;
        }

        bool terminal = false;
        if (sample.tracking_error <= scenario.convergence_tolerance) {
            if (dwell_start < 0.0) dwell_start = t;
            if (t - dwell_start >= 1.0 - 1e-9) {
                log.outcome = RunOutcome::Converged;
                log.outcome_time = t;
                terminal = true;
            }
        } else {
            dwell_start = -1.0;
        }
        if (!terminal && t >= scenario.t_final - dt * 0.5) {
            log.outcome = RunOutcome::Timeout;
            log.outcome_time = t;
            terminal = true;
        }

        if (terminal || step_index % log_decimation == 0) {
            log.samples.push_back(sample);
        }
        if (terminal) break;

        try {
            state = loop.rk4_step(t, state, dt);
        } catch (const CoincidentPoints&) {
            // A stage dipped into singular geometry mid-step.
            log.outcome = RunOutcome::Collision;
            log.outcome_time = t + dt;
            break;
        }
    }

    return log;
}

std::vector<CertificateSample> certificate_series(const TrajectoryLog& log) {
    const std::size_t n = log.samples.size();
    std::vector<double> t(n), V(n), V_dot(n), min_dist(n), err(n);
    for (std::size_t i = 0; i < n; ++i) {
        const TrajectorySample& s = log.samples[i];
        t[i] = s.t;
        V[i] = s.V;
        V_dot[i] = s.V_dot_analytic;
        min_dist[i] = s.min_beacon_distance;
        err[i] = s.tracking_error;
    }
    return certificate_series(t, V, V_dot, min_dist, err);
}

std::vector<SweepResult> sweep(const Scenario& base, std::span<const ScenarioOverride> variations,
                               int log_decimation) {
    std::vector<std::future<SweepResult>> futures;
    futures.reserve(variations.size());
    for (const ScenarioOverride& variation : variations) {
        futures.push_back(std::async(std::launch::async, [&base, &variation, log_decimation] {
            SweepResult result;
            try {
                Scenario scenario = base;
                if (variation) variation(scenario);
                result.log = run(scenario, log_decimation);
            } catch (const std::exception& e) {
                result.error = e.what();
            }
            return result;
        }));
    }

    std::vector<SweepResult> results;
    results.reserve(futures.size());
    for (auto& future : futures) results.push_back(future.get());
    return results;
}

} // namespace fwu
