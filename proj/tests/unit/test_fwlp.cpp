#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <fwu/fwlp.hpp>
#include <fwu_tools/grid_search.hpp>

#include "support/oracles.hpp"

using namespace fwu;

namespace {

BeaconSet square_beacons() {
    return BeaconSet({{2.0, 2.0}, {-2.0, 2.0}, {-2.0, -2.0}, {2.0, -2.0}},
                     {1.0, 1.0, 1.0, 1.0});
}

BeaconSet regular_polygon(int n) {
    std::vector<Vec2> pts;
    for (int k = 0; k < n; ++k) {
        const double a = 2.0 * M_PI * k / n;
        pts.push_back({std::cos(a), std::sin(a)});
    }
    return BeaconSet(pts, std::vector<double>(n, 1.0));
}

} // namespace

TEST_CASE("existence check passes at every square beacon with margin") {
    BeaconSet square = square_beacons();
    for (bool ok : existence_check(square)) CHECK(ok);

    // Independent margin: at any corner the other three unit bearings sum to
    // norm 1 + sqrt(2), comfortably above the unit weight.
    Vec2 pull = bearing({2, 2}, {-2, 2}) + bearing({2, 2}, {-2, -2}) + bearing({2, 2}, {2, -2});
    CHECK(pull.norm() == Catch::Approx(1.0 + std::sqrt(2.0)).margin(1e-12));
}

TEST_CASE("existence check flags a dominating weight") {
    BeaconSet set({{0, 0}, {1, 0}, {0, 1}}, {10.0, 1.0, 1.0});
    std::vector<bool> ok = existence_check(set);
    REQUIRE(ok.size() == 3);
    CHECK_FALSE(ok[0]); // pull of the others is sqrt(2) < 10
    CHECK(ok[1]);
    CHECK(ok[2]);
}

TEST_CASE("existence check passes on regular polygons") {
    for (int n : {3, 4, 5}) {
        for (bool ok : existence_check(regular_polygon(n))) CHECK(ok);
    }
}

TEST_CASE("weiszfeld finds the square center immediately") {
    FwSolution sol = weiszfeld(square_beacons());
    CHECK(sol.status == FwStatus::Converged);
    CHECK(std::abs(sol.point.x) <= 1e-10);
    CHECK(std::abs(sol.point.y) <= 1e-10);
    CHECK(sol.residual <= 1e-10);
    CHECK(sol.iterations == 0); // the weighted centroid is already optimal
}

TEST_CASE("weiszfeld reports a dominant beacon as the minimizer") {
    BeaconSet set({{0, 0}, {1, 0}, {0, 1}}, {5.0, 1.0, 1.0});
    FwSolution sol = weiszfeld(set);
    CHECK(sol.status == FwStatus::BeaconOptimal);
    CHECK(sol.point.x == 0.0);
    CHECK(sol.point.y == 0.0);
    CHECK(sol.residual == 0.0); // subgradient violation max(0, sqrt(2) - 5)
}

TEST_CASE("weiszfeld agrees with an exhaustive grid on an asymmetric triangle") {
    BeaconSet set({{0, 0}, {4, 0}, {1, 3}}, {1.0, 1.0, 1.0});
    FwSolution sol = weiszfeld(set);
    REQUIRE(sol.status == FwStatus::Converged);
    CHECK(sol.residual <= 1e-10);

    tools::GridMinimum grid = tools::grid_minimize(set, 1e-3);
    CHECK(distance(sol.point, grid.point) <= 2e-3);
    CHECK(weighted_distance_sum(sol.point, set) <= grid.value + 1e-12);
}

TEST_CASE("weiszfeld objective is monotone along the iteration") {
    std::mt19937_64 rng(515);
    for (int trial = 0; trial < 25; ++trial) {
        BeaconSet set = testsupport::random_beacon_set(rng);
        double prev = std::numeric_limits<double>::infinity();
        int calls = 0;
        FwSolution sol = weiszfeld(set, 1e-10, 10000, [&](Vec2, double objective) {
            CHECK(objective <= prev + 1e-12);
            prev = objective;
            ++calls;
        });
        CHECK(sol.status == FwStatus::Converged);
        CHECK(calls >= sol.iterations);
    }
}

TEST_CASE("weiszfeld is invariant under weight rescaling") {
    std::mt19937_64 rng(616);
    for (int trial = 0; trial < 20; ++trial) {
        BeaconSet set = testsupport::random_beacon_set(rng);
        std::vector<double> scaled = set.weights();
        for (double& w : scaled) w *= 137.0;
        BeaconSet rescaled(set.positions(), scaled);

        FwSolution a = weiszfeld(set, 1e-10);
        FwSolution b = weiszfeld(rescaled, 1e-10);
        REQUIRE(a.status == FwStatus::Converged);
        REQUIRE(b.status == FwStatus::Converged);
        CHECK(distance(a.point, b.point) <= 1e-9);
    }
}

TEST_CASE("weiszfeld residual honors the requested tolerance") {
    std::mt19937_64 rng(717);
    for (int trial = 0; trial < 50; ++trial) {
        BeaconSet set = testsupport::random_beacon_set(rng);
        FwSolution sol = weiszfeld(set, 1e-10);
        REQUIRE(sol.status == FwStatus::Converged);
        CHECK(sol.residual <= 1e-10);
        CHECK(optimality_residual(sol.point, set) <= 1e-10);
    }
}

TEST_CASE("weiszfeld reports iteration exhaustion instead of throwing") {
    BeaconSet set({{0, 0}, {4, 0}, {1, 3}}, {1.0, 1.0, 1.0});
    FwSolution sol = weiszfeld(set, 1e-14, 1);
    CHECK(sol.status == FwStatus::MaxIterations);
    CHECK(sol.iterations == 1);
    // max_iter = 0 violates the contract rather than meaning "just evaluate".
    CHECK_THROWS_AS(weiszfeld(set, 1e-10, 0), Error);
}

TEST_CASE("optimality residual and objective on the square") {
    BeaconSet square = square_beacons();
    CHECK(optimality_residual({0.0, 0.0}, square) == 0.0);
    CHECK(optimality_residual({2.0, 0.0}, square) ==
          Catch::Approx(8.0 / std::sqrt(20.0)).margin(1e-14));
    CHECK(weighted_distance_sum({0.0, 0.0}, square) ==
          Catch::Approx(8.0 * std::sqrt(2.0)).margin(1e-12));
}

TEST_CASE("reference point translates with the constellation") {
    BeaconSet set({{0, 0}, {4, 0}, {1, 3}}, {1.0, 1.0, 1.0});
    FwSolution sol = weiszfeld(set);
    REQUIRE(sol.status == FwStatus::Converged);

    SECTION("diagonal drift") {
        Vec2 v{0.1, 0.1};
        Vec2 at10 = fw_point_at_time(sol, v, 10.0);
        CHECK(at10.x == Catch::Approx(sol.point.x + 1.0).margin(1e-12));
        CHECK(at10.y == Catch::Approx(sol.point.y + 1.0).margin(1e-12));

        std::vector<Vec2> moved = set.positions();
        for (Vec2& p : moved) p += v * 10.0;
        FwSolution resolved = weiszfeld(BeaconSet(moved, set.weights()));
        REQUIRE(resolved.status == FwStatus::Converged);
        CHECK(distance(at10, resolved.point) <= 1e-9);
    }

    SECTION("axis drift") {
        Vec2 v{0.05, 0.0};
        Vec2 at39 = fw_point_at_time(sol, v, 39.0);
        CHECK(at39.x == Catch::Approx(sol.point.x + 1.95).margin(1e-12));
        CHECK(at39.y == Catch::Approx(sol.point.y).margin(1e-12));

        std::vector<Vec2> moved = set.positions();
        for (Vec2& p : moved) p += v * 39.0;
        FwSolution resolved = weiszfeld(BeaconSet(moved, set.weights()));
        REQUIRE(resolved.status == FwStatus::Converged);
        CHECK(distance(at39, resolved.point) <= 1e-9);
    }

    SECTION("zero velocity is the identity") {
        Vec2 fixed = fw_point_at_time(sol, {0.0, 0.0}, 123.0);
        CHECK(fixed.x == sol.point.x);
        CHECK(fixed.y == sol.point.y);
    }

    SECTION("a non-converged solution is unusable") {
        FwSolution bad = sol;
        bad.status = FwStatus::MaxIterations;
        CHECK_THROWS_AS(fw_point_at_time(bad, {0.1, 0.0}, 1.0), SolverFailed);
    }
}

TEST_CASE("FwStatus names") {
    CHECK(std::string(to_string(FwStatus::Converged)) == "Converged");
    CHECK(std::string(to_string(FwStatus::BeaconOptimal)) == "BeaconOptimal");
    CHECK(std::string(to_string(FwStatus::MaxIterations)) == "MaxIterations");
}
