#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "swarmroute/scenario_io.hpp"

using namespace swarmroute;
namespace fs = std::filesystem;

namespace {

const std::string kMinimal = R"({
  "version": 1,
  "id": "mini",
  "bounds": {"min": [0, 0, 0], "max": [10, 10, 10]},
  "start": [1, 1, 1],
  "goal": [9, 9, 9],
  "num_waypoints": 4,
  "robot_speed": 1.5,
  "sensor_radius": 3,
  "goal_tolerance": 0.5,
  "control_step": 0.25
})";

template <class Error>
std::string error_of(const std::string& text) {
    try {
        parse_scenario(text);
    } catch (const Error& e) {
        return e.what();
    }
    FAIL("expected error not raised");
    return {};
}

std::string replace(std::string text, const std::string& from, const std::string& to) {
    const auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("bundled static scenario") {
    const Scenario s = load_scenario(SWARMROUTE_SCENARIO_DIR "/static_demo.json");
    CHECK(s.id == "static_demo");
    CHECK(s.workspace.dynamic_obstacles.empty());
    CHECK_FALSE(s.workspace.static_obstacles.empty());
}

TEST_CASE("minimal file") {
    const ScenarioFile f = parse_scenario(kMinimal);
    CHECK(f.scenario.num_waypoints == 4);
    CHECK(f.scenario.robot_speed == 1.5);
    CHECK(f.scenario.control_step == 0.25);
    CHECK_FALSE(f.defaults.algorithm.has_value());
    CHECK(cost_params_for(f) == CostParams::defaults_for(f.scenario.workspace));
}

TEST_CASE("lower bound not below upper names the axis") {
    const auto msg = error_of<ScenarioInvariantError>(
        replace(kMinimal, R"("max": [10, 10, 10])", R"("max": [10, 0, 10])"));
    CHECK(msg.find("axis y") != std::string::npos);
}

TEST_CASE("start inside an obstacle is an invariant error") {
    const auto text = replace(kMinimal, R"("goal")",
                              R"("static_obstacles": [{"type": "sphere", "center": [1, 1, 1], "radius": 0.5}], "goal")");
    CHECK_THROWS_AS(parse_scenario(text), ScenarioInvariantError);
}

TEST_CASE("schema violations") {
    CHECK(error_of<ScenarioSchemaError>(replace(kMinimal, R"("id")", R"("colour": "red", "id")"))
              .find("colour") != std::string::npos);
    CHECK(error_of<ScenarioSchemaError>(replace(kMinimal, R"("version": 1,)", "")).find("version") !=
          std::string::npos);
    CHECK(error_of<ScenarioSchemaError>(replace(kMinimal, R"("robot_speed": 1.5,)", "")).find("robot_speed") !=
          std::string::npos);
    CHECK_THROWS_AS(parse_scenario(replace(kMinimal, R"("version": 1)", R"("version": 2)")), ScenarioSchemaError);
    CHECK_THROWS_AS(parse_scenario(replace(kMinimal, R"("start": [1, 1, 1])", R"("start": [1, 1])")),
                    ScenarioSchemaError);
    CHECK_THROWS_AS(parse_scenario(replace(kMinimal, R"("goal": [9, 9, 9])", R"("goal": "far")")),
                    ScenarioSchemaError);
    CHECK_THROWS_AS(parse_scenario(replace(kMinimal, R"("goal")",
                                           R"("static_obstacles": [{"type": "cone"}], "goal")")),
                    ScenarioSchemaError);
}

TEST_CASE("malformed JSON is a parse error") {
    CHECK_THROWS_AS(parse_scenario("{\"version\": 1,"), ScenarioParseError);
    CHECK_THROWS_AS(load_scenario_file("/nonexistent/scenario.json"), ScenarioError);
}

TEST_CASE("save then load is field-for-field identical") {
    const fs::path dir = fs::temp_directory_path() / "swarmroute_io_test";
    fs::create_directories(dir);
    for (const fs::path source : {fs::path(SWARMROUTE_SCENARIO_DIR "/static_demo.json"),
                                  fs::path(SWARMROUTE_SCENARIO_DIR "/dynamic_demo.json"),
                                  fs::path(SWARMROUTE_TEST_FIXTURES "/wall_gap.json")}) {
        CAPTURE(source.string());
        const ScenarioFile original = load_scenario_file(source);
        const fs::path copy = dir / source.filename();
        save_scenario(original, copy);
        const ScenarioFile reloaded = load_scenario_file(copy);
        CHECK(reloaded == original);
        CHECK(dump_scenario(reloaded) == dump_scenario(original));
    }
    fs::remove_all(dir);
}
