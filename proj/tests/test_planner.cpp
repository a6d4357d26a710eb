#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "swarmroute/errors.hpp"
#include "swarmroute/planner.hpp"
#include "swarmroute/scenario_io.hpp"

using namespace swarmroute;

namespace {

Scenario open_box(std::size_t waypoints = 5) {
    Scenario s;
    s.id = "open";
    s.workspace.bounds = {{0, 0, 0}, {100, 100, 40}};
    s.start = {5, 50, 10};
    s.goal = {95, 50, 10};
    s.num_waypoints = waypoints;
    s.robot_speed = 2.0;
    return s;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

TEST_SUITE("encode / decode") {
    TEST_CASE("single waypoint") {
        const Route r{{{0, 0, 0}, {1, 2, 3}, {4, 4, 4}}};
        const auto x = encode(r);
        CHECK(x == std::vector<double>{1, 2, 3});
        CHECK(decode(x, {0, 0, 0}, {4, 4, 4}, {{0, 0, 0}, {10, 10, 10}}) == r);
    }

    TEST_CASE("W = 0 is rejected by the scenario") {
        auto s = open_box();
        s.num_waypoints = 0;
        CHECK_THROWS_AS(s.validate(), InvalidScenario);
    }

    TEST_CASE("wrong dimensionality") {
        const auto s = open_box(5);
        std::vector<double> x(14, 1.0);
        CHECK_THROWS_AS(decode(x, s), InvalidArgument);
        x.resize(18, 1.0);
        CHECK_THROWS_AS(decode(x, s), InvalidArgument);
        const std::vector<double> empty;
        CHECK_THROWS_AS(decode(empty, s.start, s.goal, s.workspace.bounds), InvalidArgument);
    }

    TEST_CASE("out-of-bounds coordinates are clamped") {
        const auto s = open_box(1);
        const std::vector<double> x{-3, 50, 99};
        const Route r = decode(x, s);
        CHECK(r.points[1] == Vec3{0, 50, 40});
    }

    TEST_CASE("random round trips") {
        std::mt19937_64 gen(17);
        const auto s = open_box(7);
        std::uniform_real_distribution<double> ux(0, 100), uz(0, 40);
        for (int n = 0; n < 1000; ++n) {
            Route r{{s.start}};
            for (std::size_t i = 0; i < s.num_waypoints; ++i) r.points.push_back({ux(gen), ux(gen), uz(gen)});
            r.points.push_back(s.goal);
            CHECK(decode(encode(r), s) == r);
            const auto x = encode(r);
            CHECK(encode(decode(x, s)) == x);
        }
    }
}

TEST_SUITE("route_cost") {
    Workspace free_space() {
        Workspace ws;
        ws.bounds = {{-20, -20, -20}, {20, 20, 20}};
        return ws;
    }

    TEST_CASE("straight collision-free route") {
        const Route r{{{0, 0, 0}, {2.5, 0, 0}, {5, 0, 0}, {7.5, 0, 0}, {10, 0, 0}}};
        CostParams p{1000.0, 0.0, 0.05};
        CHECK(route_cost(r, free_space(), p, 0.0, 1.0) == doctest::Approx(10.0).epsilon(1e-15));
    }

    TEST_CASE("obstructing sphere adds a penalty") {
        auto ws = free_space();
        ws.static_obstacles = {SphereObstacle{{5, 0, 0}, 1.0}};
        const Route r{{{0, 0, 0}, {5, 0, 0}, {10, 0, 0}}};
        CHECK(route_cost(r, ws, {1.0, 0.0, 0.05}, 0.0, 1.0) > 10.0);
    }

    TEST_CASE("right angle with smoothness weight 1") {
        const Route r{{{0, 0, 0}, {3, 0, 0}, {3, 4, 0}}};
        // Closed form 7 + (pi/2)^2, evaluated with mpmath.
        CHECK(route_cost(r, free_space(), {0.0, 1.0, 0.1}, 0.0, 1.0) ==
              doctest::Approx(9.4674011002723396547).epsilon(1e-14));
        CHECK(turning_penalty(r.points) == doctest::Approx(std::numbers::pi * std::numbers::pi / 4).epsilon(1e-15));
    }

    TEST_CASE("zero weights give the polyline length") {
        std::mt19937_64 gen(23);
        std::uniform_real_distribution<double> u(-20, 20);
        auto ws = free_space();
        ws.static_obstacles = {SphereObstacle{{0, 0, 0}, 5}, Aabb{{2, 2, 2}, {9, 9, 9}}};
        for (int n = 0; n < 200; ++n) {
            Route r;
            double expected = 0.0;
            for (int i = 0; i < 6; ++i) {
                r.points.push_back({u(gen), u(gen), u(gen)});
                if (i > 0) expected += distance(r.points[i], r.points[i - 1]);
            }
            CHECK(route_cost(r, ws, {0.0, 0.0, 0.5}, 0.0, 1.0) == doctest::Approx(expected).epsilon(1e-9));
        }
    }

    TEST_CASE("invariant under rigid translation") {
        std::mt19937_64 gen(29);
        std::uniform_real_distribution<double> u(0, 10);
        Workspace ws;
        ws.bounds = {{0, 0, 0}, {10, 10, 10}};
        ws.static_obstacles = {Aabb{{3, 3, 0}, {6, 6, 10}}, SphereObstacle{{7, 2, 5}, 1.5}};
        ws.dynamic_obstacles = {{{{2, 8, 5}, 1.0}, {0.5, -0.3, 0.1}}};
        const Vec3 shift{13.25, -4.5, 7.0};
        Workspace moved = ws;
        moved.bounds = {ws.bounds.min_corner + shift, ws.bounds.max_corner + shift};
        moved.static_obstacles = {Aabb{Vec3{3, 3, 0} + shift, Vec3{6, 6, 10} + shift},
                                  SphereObstacle{Vec3{7, 2, 5} + shift, 1.5}};
        moved.dynamic_obstacles[0].shape.center = moved.dynamic_obstacles[0].shape.center + shift;
        const CostParams p{1000.0, 0.5, 0.05};
        for (int n = 0; n < 100; ++n) {
            Route r, rm;
            for (int i = 0; i < 5; ++i) {
                const Vec3 q{u(gen), u(gen), u(gen)};
                r.points.push_back(q);
                rm.points.push_back(q + shift);
            }
            const double a = route_cost(r, ws, p, 1.5, 1.0);
            const double b = route_cost(rm, moved, p, 1.5, 1.0);
            CHECK(b == doctest::Approx(a).epsilon(1e-9));
        }
    }

    TEST_CASE("parameter validation") {
        CHECK_THROWS_AS((CostParams{-1.0, 0.0, 1.0}.validate()), InvalidArgument);
        CHECK_THROWS_AS((CostParams{1.0, 0.0, 0.0}.validate()), InvalidArgument);
        CHECK(CostParams::defaults_for(open_box().workspace).sample_resolution ==
              doctest::Approx(open_box().workspace.bounds.diagonal() / 200));
    }
}

TEST_SUITE("algorithm names") {
    TEST_CASE("parse") {
        CHECK(parse_algorithm("SSA") == Algorithm::Ssa);
        CHECK(parse_algorithm("pso") == Algorithm::Pso);
        CHECK(parse_algorithm("Fa") == Algorithm::Fa);
        try {
            parse_algorithm("gso");
            FAIL("expected InvalidArgument");
        } catch (const InvalidArgument& e) {
            CHECK(std::string(e.what()).find("out of scope") != std::string::npos);
        }
        CHECK_THROWS_AS(parse_algorithm("ga"), InvalidArgument);
    }
}

TEST_SUITE("plan_static") {
    TEST_CASE("empty workspace stays near the straight line") {
        const auto s = open_box();
        AlgoParams algo;
        algo.population = 20;
        algo.iterations = 100;
        std::vector<double> costs;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            costs.push_back(plan_static(s, algo, CostParams::defaults_for(s.workspace), seed).cost);
        }
        const double straight = distance(s.start, s.goal);
        // Calibrated: median 1.29 x straight over these seeds.
        CHECK(median(costs) <= 1.40 * straight);
        CHECK(*std::min_element(costs.begin(), costs.end()) >= straight);
    }

    TEST_CASE("goal inside an obstacle is unreachable") {
        auto s = open_box();
        s.workspace.static_obstacles = {Aabb{{90, 45, 5}, {99, 55, 15}}};
        CHECK_THROWS_AS(plan_static(s, {}, CostParams::defaults_for(s.workspace), 1), Unreachable);
    }

    TEST_CASE("start inside an obstacle is an invalid scenario") {
        auto s = open_box();
        s.workspace.static_obstacles = {SphereObstacle{{5, 50, 10}, 2.0}};
        CHECK_THROWS_AS(plan_static(s, {}, CostParams::defaults_for(s.workspace), 1), InvalidScenario);
    }

    TEST_CASE("wall with a gap is crossed collision-free") {
        const ScenarioFile file = load_scenario_file(SWARMROUTE_TEST_FIXTURES "/wall_gap.json");
        const CostParams cost = cost_params_for(file);
        AlgoParams algo;
        std::size_t clear = 0;
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            const auto plan = plan_static(file.scenario, algo, cost, seed);
            const auto c = collision_measure(plan.route.points, file.scenario.workspace, 0.0,
                                             file.scenario.robot_speed, cost.sample_resolution);
            clear += c == 0.0;
        }
        // Calibrated: 30 of 30.
        CHECK(clear >= 24);
    }

    TEST_CASE("reported cost matches a fresh evaluation") {
        const ScenarioFile file = load_scenario_file(SWARMROUTE_SCENARIO_DIR "/static_demo.json");
        const CostParams cost = cost_params_for(file);
        for (auto algorithm : {Algorithm::Ssa, Algorithm::Pso, Algorithm::Fa}) {
            AlgoParams algo;
            algo.algorithm = algorithm;
            for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                const auto plan = plan_static(file.scenario, algo, cost, seed);
                CHECK(plan.cost == route_cost(plan.route, file.scenario.workspace, cost, 0.0,
                                              file.scenario.robot_speed));
                CHECK(plan.route.points.front() == file.scenario.start);
                CHECK(plan.route.points.back() == file.scenario.goal);
                CHECK(plan.route.points.size() == file.scenario.num_waypoints + 2);
                CHECK(plan.wall_time_seconds >= 0.0);
                CHECK(plan.history.best_fitness_per_iteration.size() == algo.iterations);
            }
        }
    }

    TEST_CASE("deterministic per seed") {
        const auto s = open_box();
        const auto cost = CostParams::defaults_for(s.workspace);
        const auto a = plan_static(s, {}, cost, 99);
        const auto b = plan_static(s, {}, cost, 99);
        CHECK(a.route == b.route);
        CHECK(a.cost == b.cost);
        CHECK(a.history.best_fitness_per_iteration == b.history.best_fitness_per_iteration);
    }
}

TEST_SUITE("resample") {
    TEST_CASE("keeps ends and spaces points by arc length") {
        const std::vector<Vec3> poly{{0, 0, 0}, {4, 0, 0}, {4, 4, 0}};
        const Route r = resample(poly, 3);
        REQUIRE(r.points.size() == 5);
        CHECK(r.points.front() == poly.front());
        CHECK(r.points.back() == poly.back());
        CHECK(r.points[1].x == doctest::Approx(2.0));
        CHECK(r.points[2] == Vec3{4, 0, 0});
        CHECK(r.points[3].y == doctest::Approx(2.0));
    }
}
