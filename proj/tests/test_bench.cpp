#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "swarmroute/bench.hpp"
#include "swarmroute/errors.hpp"
#include "swarmroute/scenario_io.hpp"

using namespace swarmroute;

namespace {

BenchRecord record(const std::string& algo, std::uint64_t seed, double cost) {
    BenchRecord r;
    r.algorithm = algo;
    r.population = 20;
    r.iterations = 25;
    r.best_cost = cost;
    r.time_seconds = 0.01;
    r.seed = seed;
    r.scenario_id = "s";
    return r;
}

Scenario small_scenario() {
    Scenario s;
    s.id = "small";
    s.workspace.bounds = {{0, 0, 0}, {20, 20, 20}};
    s.workspace.static_obstacles = {SphereObstacle{{10, 10, 10}, 3}};
    s.start = {1, 10, 10};
    s.goal = {19, 10, 10};
    s.num_waypoints = 3;
    return s;
}

}  // namespace

TEST_SUITE("statistics") {
    TEST_CASE("describe") {
        const Stats s = describe({3, 1, 2});
        CHECK(s.median == 2.0);
        CHECK(s.mean == 2.0);
        CHECK(s.min == 1.0);
        CHECK(s.max == 3.0);
        CHECK(describe({4, 1, 3, 2}).median == 2.5);
    }

    TEST_CASE("sign test") {
        // Exact binomial tails, enumerated in the oracle script.
        CHECK(sign_test_p_value(10, 0) == 0.001953125);
        CHECK(sign_test_p_value(0, 10) == 0.001953125);
        CHECK(sign_test_p_value(7, 3) == 0.34375);
        CHECK(sign_test_p_value(5, 5) == 1.0);
        CHECK(sign_test_p_value(0, 0) == 1.0);
        for (std::size_t n = 1; n <= 60; ++n) {
            for (std::size_t w = 0; w <= n; ++w) {
                const double p = sign_test_p_value(w, n - w);
                CHECK(p > 0.0);
                CHECK(p <= 1.0);
                CHECK(p == sign_test_p_value(n - w, w));
            }
        }
    }
}

TEST_SUITE("summarize") {
    TEST_CASE("one algorithm better on every seed") {
        std::vector<BenchRecord> records;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            records.push_back(record("ssa", seed, 1.0 + seed));
            records.push_back(record("pso", seed, 2.0 + seed));
        }
        const auto summary = summarize(records);
        REQUIRE(summary.algorithms.size() == 2);
        REQUIRE(summary.pairwise.size() == 1);
        const auto& v = summary.pairwise[0];
        CHECK(v.first_wins + v.second_wins == 10);
        CHECK(v.ties == 0);
        CHECK(v.p_value == doctest::Approx(0.001953125).epsilon(1e-15));
    }

    TEST_CASE("single record") {
        const auto summary = summarize({record("ssa", 1, 7.5)});
        REQUIRE(summary.algorithms.size() == 1);
        const auto& a = summary.algorithms[0];
        CHECK(a.best_cost.min == 7.5);
        CHECK(a.best_cost.max == 7.5);
        CHECK(a.best_cost.median == 7.5);
        CHECK(summary.pairwise.empty());
    }

    TEST_CASE("heterogeneous records are rejected") {
        auto other = record("pso", 1, 3.0);
        other.population = 30;
        CHECK_THROWS_AS(summarize({record("ssa", 1, 2.0), other}), InvalidArgument);
        auto elsewhere = record("pso", 1, 3.0);
        elsewhere.scenario_id = "t";
        CHECK_THROWS_AS(summarize({record("ssa", 1, 2.0), elsewhere}), InvalidArgument);
        CHECK_THROWS_AS(summarize({}), InvalidArgument);
    }

    TEST_CASE("permutation invariant") {
        std::vector<BenchRecord> records;
        std::mt19937_64 gen(7);
        std::uniform_real_distribution<double> u(1.0, 5.0);
        for (std::uint64_t seed = 1; seed <= 9; ++seed) {
            for (const char* algo : {"ssa", "pso", "fa"}) records.push_back(record(algo, seed, u(gen)));
        }
        const std::string reference = summary_to_json(summarize(records));
        for (int n = 0; n < 20; ++n) {
            std::shuffle(records.begin(), records.end(), gen);
            CHECK(summary_to_json(summarize(records)) == reference);
        }
    }
}

TEST_SUITE("trials") {
    TEST_CASE("start within goal tolerance costs about nothing") {
        Scenario s = small_scenario();
        s.goal = s.start + Vec3{0.1, 0, 0};
        s.workspace.static_obstacles.clear();
        const auto r = run_trial(s, {}, CostParams::defaults_for(s.workspace), 1);
        CHECK_FALSE(r.failed());
        CHECK(r.best_cost >= 0.0);
        CHECK(r.best_cost == doctest::Approx(0.1).epsilon(1e-12));
    }

    TEST_CASE("record carries the protocol fields") {
        const ScenarioFile file = load_scenario_file(SWARMROUTE_SCENARIO_DIR "/static_demo.json");
        AlgoParams algo;
        algo.population = 20;
        algo.iterations = 25;
        const auto r = run_trial(file.scenario, algo, cost_params_for(file), 5);
        CHECK(r.algorithm == "ssa");
        CHECK(r.population == 20);
        CHECK(r.iterations == 25);
        CHECK(r.scenario_id == "static_demo");
        CHECK(r.seed == 5);
        CHECK(r.time_seconds >= 0.0);
        const auto again = run_trial(file.scenario, algo, cost_params_for(file), 5);
        CHECK(again.best_cost == r.best_cost);
    }

    TEST_CASE("failures are recorded, not dropped") {
        Scenario s = small_scenario();
        s.goal = {10, 10, 10};
        const auto r = run_trial(s, {}, CostParams::defaults_for(s.workspace), 1);
        CHECK(r.failed());
        CHECK(std::isnan(r.best_cost));
        const auto suite = run_suite(s, {Algorithm::Ssa, Algorithm::Pso}, {}, CostParams::defaults_for(s.workspace),
                                     2, 1);
        CHECK(suite.size() == 4);
    }

    TEST_CASE("suite cardinality and ordering") {
        const Scenario s = small_scenario();
        const auto cost = CostParams::defaults_for(s.workspace);
        AlgoParams base;
        base.population = 8;
        base.iterations = 5;
        const auto records = run_suite(s, {Algorithm::Pso, Algorithm::Ssa}, base, cost, 3, 10);
        REQUIRE(records.size() == 6);
        const std::vector<std::string> algos{"pso", "pso", "pso", "ssa", "ssa", "ssa"};
        const std::vector<std::uint64_t> seeds{10, 11, 12, 10, 11, 12};
        for (std::size_t i = 0; i < 6; ++i) {
            CHECK(records[i].algorithm == algos[i]);
            CHECK(records[i].seed == seeds[i]);
        }
        const auto threaded = run_suite(s, {Algorithm::Pso, Algorithm::Ssa}, base, cost, 3, 10, 4);
        for (std::size_t i = 0; i < 6; ++i) CHECK(threaded[i].best_cost == records[i].best_cost);
    }

    TEST_CASE("one seed equals one trial") {
        const Scenario s = small_scenario();
        const auto cost = CostParams::defaults_for(s.workspace);
        AlgoParams base;
        base.algorithm = Algorithm::Fa;
        const auto suite = run_suite(s, {Algorithm::Fa}, base, cost, 1, 42);
        const auto trial = run_trial(s, base, cost, 42);
        REQUIRE(suite.size() == 1);
        CHECK(suite[0].best_cost == trial.best_cost);
        CHECK(suite[0].algorithm == trial.algorithm);
        CHECK(suite[0].seed == trial.seed);
    }
}

TEST_SUITE("output") {
    TEST_CASE("csv header and number format") {
        std::ostringstream out;
        write_bench_csv(out, {record("ssa", 3, 1.0 / 3.0)});
        CHECK(out.str() == "algorithm,population,iterations,best_cost,time_seconds,seed,scenario_id\n"
                           "ssa,20,25,0.333333333,0.01,3,s\n");
        CHECK(format_real(786.123456789) == "786.123457");
    }
}
