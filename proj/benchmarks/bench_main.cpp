// Microbenchmarks for the hot paths: bearing aggregation, the reference
// solver, single integration steps, and a full closed-loop run.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <fwu/simulation.hpp>

namespace {

using namespace fwu;

BeaconSet square_beacons(Vec2 velocity = Vec2{}) {
    return BeaconSet({{2.0, 2.0}, {-2.0, 2.0}, {-2.0, -2.0}, {2.0, -2.0}},
                     {1.0, 1.0, 1.0, 1.0}, velocity);
}

// Deterministic n-beacon constellation on a ring with mixed weights.
BeaconSet ring_beacons(int n) {
    std::vector<Vec2> positions;
    std::vector<double> weights;
    for (int k = 0; k < n; ++k) {
        const double a = 2.0 * std::numbers::pi * k / n;
        positions.push_back({2.0 * std::cos(a), 1.5 * std::sin(a)});
        weights.push_back(1.0 + 0.1 * k);
    }
    return BeaconSet(positions, weights);
}

void BM_weighted_bearing_sum(benchmark::State& state) {
    const BeaconSet beacons = ring_beacons(static_cast<int>(state.range(0)));
    const Vec2 agent{0.3, -0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(weighted_bearing_sum(agent, beacons));
    }
}
BENCHMARK(BM_weighted_bearing_sum)->Arg(4)->Arg(8);

void BM_weiszfeld(benchmark::State& state) {
    const BeaconSet beacons = ring_beacons(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(weiszfeld(beacons));
    }
}
BENCHMARK(BM_weiszfeld)->Arg(4)->Arg(8);

void BM_grid_free_step(benchmark::State& state) {
    const UnicycleState start({0.0, 0.0}, 0.3);
    const ControlCommand cmd{0.8, 0.4};
    UnicycleState s = start;
    for (auto _ : state) {
        s = step(s, cmd, 1e-2);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_grid_free_step);

void BM_stationary_law(benchmark::State& state) {
    const BeaconSet beacons = square_beacons();
    const StationaryGains gains{0.5, 1.0};
    const Vec2 agent{1.3, -0.7};
    const Vec2 h = heading_vector(0.9);
    for (auto _ : state) {
        const Vec2 s = weighted_bearing_sum(agent, beacons);
        benchmark::DoNotOptimize(control_stationary(gains, h, s));
    }
}
BENCHMARK(BM_stationary_law);

void BM_full_run_stationary(benchmark::State& state) {
    const Scenario scenario{square_beacons(), UnicycleState({3.0, 3.0}, 0.0),
                            StationaryConfig{StationaryGains{0.5, 1.0}},
                            1e-2, 60.0, 0.05, 0.01, ""};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(scenario));
    }
}
BENCHMARK(BM_full_run_stationary)->Unit(benchmark::kMillisecond);

void BM_full_run_moving(benchmark::State& state) {
    const Scenario scenario{square_beacons({0.1, 0.1}), UnicycleState({3.0, -1.0}, 2.0),
                            MovingConfig{MovingGains{1.0, 5.0, 1.0}, {0.0, 0.0}},
                            1e-2, 100.0, 0.05, 1e-6, ""};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(scenario));
    }
}
BENCHMARK(BM_full_run_moving)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
