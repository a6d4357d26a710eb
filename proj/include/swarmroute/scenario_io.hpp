#pragma once

// Versioned JSON scenario files.
//
// {
//   "version": 1,
//   "id": "static_demo",
//   "bounds": {"min": [x, y, z], "max": [x, y, z]},
//   "start": [x, y, z], "goal": [x, y, z],
//   "num_waypoints": 5, "robot_speed": 2.0, "sensor_radius": 20.0,
//   "goal_tolerance": 0.5, "control_step": 0.5,
//   "static_obstacles": [
//     {"type": "aabb", "min": [..], "max": [..]},
//     {"type": "sphere", "center": [..], "radius": r}
//   ],
//   "dynamic_obstacles": [
//     {"center": [..], "radius": r, "velocity": [..], "motion": "reflect_at_bounds"}
//   ],
//   "defaults": {"algorithm": "ssa", "population": 20, "iterations": 25,
//                "collision_weight": 1000, "smoothness_weight": 0,
//                "sample_resolution": 0.5, "lookahead_factor": 3, "clearance": 0}
// }
//
// Unknown keys are rejected at every level. "defaults" and its members are
// optional; everything else is required except the two obstacle lists.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "swarmroute/planner.hpp"

namespace swarmroute {

inline constexpr int kScenarioVersion = 1;

class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Not valid JSON, or the file could not be read.
class ScenarioParseError : public ScenarioError {
public:
    using ScenarioError::ScenarioError;
};

/// Missing, unknown or mistyped field, or an unsupported version.
class ScenarioSchemaError : public ScenarioError {
public:
    using ScenarioError::ScenarioError;
};

/// Well-formed file whose content breaks a scenario invariant.
class ScenarioInvariantError : public ScenarioError {
public:
    using ScenarioError::ScenarioError;
};

struct ScenarioDefaults {
    std::optional<Algorithm> algorithm;
    std::optional<std::size_t> population;
    std::optional<std::size_t> iterations;
    std::optional<double> collision_weight;
    std::optional<double> smoothness_weight;
    std::optional<double> sample_resolution;
    std::optional<double> lookahead_factor;
    std::optional<double> clearance;

    bool operator==(const ScenarioDefaults&) const = default;
};

struct ScenarioFile {
    Scenario scenario;
    ScenarioDefaults defaults;

    bool operator==(const ScenarioFile&) const = default;
};

ScenarioFile parse_scenario(const std::string& text);
ScenarioFile load_scenario_file(const std::filesystem::path& path);
Scenario load_scenario(const std::filesystem::path& path);

std::string dump_scenario(const ScenarioFile& file);
void save_scenario(const ScenarioFile& file, const std::filesystem::path& path);

/// Cost parameters for the scenario: workspace defaults overridden by the
/// file's "defaults" block.
CostParams cost_params_for(const ScenarioFile& file);

}  // namespace swarmroute
