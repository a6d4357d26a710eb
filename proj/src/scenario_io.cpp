#include "swarmroute/scenario_io.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <json.hpp>

#include "swarmroute/errors.hpp"

namespace swarmroute {

namespace {

using nlohmann::json;

void allow_only(const json& obj, const std::string& where, std::initializer_list<const char*> keys) {
    const std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.contains(key)) {
            throw ScenarioSchemaError(where + ": unknown field '" + key + "'");
        }
    }
}

const json& require(const json& obj, const std::string& where, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw ScenarioSchemaError(where + ": missing required field '" + key + "'");
    }
    return *it;
}

const json& require_object(const json& value, const std::string& where) {
    if (!value.is_object()) {
        throw ScenarioSchemaError(where + ": expected an object");
    }
    return value;
}

double as_number(const json& value, const std::string& where) {
    if (!value.is_number()) {
        throw ScenarioSchemaError(where + ": expected a number");
    }
    return value.get<double>();
}

std::size_t as_count(const json& value, const std::string& where) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw ScenarioSchemaError(where + ": expected a non-negative integer");
    }
    return value.get<std::size_t>();
}

Vec3 as_vec3(const json& value, const std::string& where) {
    if (!value.is_array() || value.size() != 3) {
        throw ScenarioSchemaError(where + ": expected an array of 3 numbers");
    }
    return {as_number(value[0], where + "[0]"), as_number(value[1], where + "[1]"),
            as_number(value[2], where + "[2]")};
}

json vec3_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

StaticObstacle parse_static(const json& value, const std::string& where) {
    require_object(value, where);
    const json& type = require(value, where, "type");
    if (!type.is_string()) {
        throw ScenarioSchemaError(where + ".type: expected a string");
    }
    const auto tag = type.get<std::string>();
    if (tag == "aabb") {
        allow_only(value, where, {"type", "min", "max"});
        return Aabb{as_vec3(require(value, where, "min"), where + ".min"),
                    as_vec3(require(value, where, "max"), where + ".max")};
    }
    if (tag == "sphere") {
        allow_only(value, where, {"type", "center", "radius"});
        return SphereObstacle{as_vec3(require(value, where, "center"), where + ".center"),
                              as_number(require(value, where, "radius"), where + ".radius")};
    }
    throw ScenarioSchemaError(where + ".type: unknown obstacle type '" + tag + "' (expected aabb or sphere)");
}

DynamicObstacle parse_dynamic(const json& value, const std::string& where) {
    require_object(value, where);
    allow_only(value, where, {"center", "radius", "velocity", "motion"});
    DynamicObstacle obs;
    obs.shape.center = as_vec3(require(value, where, "center"), where + ".center");
    obs.shape.radius = as_number(require(value, where, "radius"), where + ".radius");
    obs.velocity = as_vec3(require(value, where, "velocity"), where + ".velocity");
    if (const auto it = value.find("motion"); it != value.end()) {
        if (!it->is_string() || it->get<std::string>() != "reflect_at_bounds") {
            throw ScenarioSchemaError(where + ".motion: only \"reflect_at_bounds\" is supported");
        }
    }
    return obs;
}

ScenarioDefaults parse_defaults(const json& value) {
    const std::string where = "defaults";
    require_object(value, where);
    allow_only(value, where,
               {"algorithm", "population", "iterations", "collision_weight", "smoothness_weight",
                "sample_resolution", "lookahead_factor", "clearance"});
    ScenarioDefaults d;
    if (const auto it = value.find("algorithm"); it != value.end()) {
        if (!it->is_string()) {
            throw ScenarioSchemaError("defaults.algorithm: expected a string");
        }
        try {
            d.algorithm = parse_algorithm(it->get<std::string>());
        } catch (const InvalidArgument& e) {
            throw ScenarioSchemaError(std::string("defaults.algorithm: ") + e.what());
        }
    }
    const auto count = [&](const char* key, std::optional<std::size_t>& out) {
        if (const auto it = value.find(key); it != value.end()) {
            out = as_count(*it, where + "." + key);
        }
    };
    const auto number = [&](const char* key, std::optional<double>& out) {
        if (const auto it = value.find(key); it != value.end()) {
            out = as_number(*it, where + "." + key);
        }
    };
    count("population", d.population);
    count("iterations", d.iterations);
    number("collision_weight", d.collision_weight);
    number("smoothness_weight", d.smoothness_weight);
    number("sample_resolution", d.sample_resolution);
    number("lookahead_factor", d.lookahead_factor);
    number("clearance", d.clearance);
    return d;
}

void check_defaults(const ScenarioDefaults& d) {
    if (d.population && *d.population == 0) {
        throw ScenarioInvariantError("defaults.population must be positive");
    }
    if (d.iterations && *d.iterations == 0) {
        throw ScenarioInvariantError("defaults.iterations must be positive");
    }
    const auto non_negative = [](const std::optional<double>& v, const char* name) {
        if (v && !(*v >= 0.0)) {
            throw ScenarioInvariantError(std::string("defaults.") + name + " must be non-negative");
        }
    };
    non_negative(d.collision_weight, "collision_weight");
    non_negative(d.smoothness_weight, "smoothness_weight");
    non_negative(d.lookahead_factor, "lookahead_factor");
    non_negative(d.clearance, "clearance");
    if (d.sample_resolution && !(*d.sample_resolution > 0.0)) {
        throw ScenarioInvariantError("defaults.sample_resolution must be positive");
    }
}

}  // namespace

ScenarioFile parse_scenario(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScenarioParseError(std::string("scenario is not valid JSON: ") + e.what());
    }
    const std::string root = "scenario";
    require_object(doc, root);
    allow_only(doc, root,
               {"version", "id", "bounds", "start", "goal", "num_waypoints", "robot_speed", "sensor_radius",
                "goal_tolerance", "control_step", "static_obstacles", "dynamic_obstacles", "defaults"});

    const json& version = require(doc, root, "version");
    if (!version.is_number_integer()) {
        throw ScenarioSchemaError("version: expected an integer");
    }
    if (version.get<long long>() != kScenarioVersion) {
        throw ScenarioSchemaError("version: unsupported scenario version " + version.dump() + " (expected " +
                                  std::to_string(kScenarioVersion) + ")");
    }

    ScenarioFile file;
    Scenario& s = file.scenario;
    const json& id = require(doc, root, "id");
    if (!id.is_string()) {
        throw ScenarioSchemaError("id: expected a string");
    }
    s.id = id.get<std::string>();

    const json& bounds = require_object(require(doc, root, "bounds"), "bounds");
    allow_only(bounds, "bounds", {"min", "max"});
    s.workspace.bounds.min_corner = as_vec3(require(bounds, "bounds", "min"), "bounds.min");
    s.workspace.bounds.max_corner = as_vec3(require(bounds, "bounds", "max"), "bounds.max");

    s.start = as_vec3(require(doc, root, "start"), "start");
    s.goal = as_vec3(require(doc, root, "goal"), "goal");
    s.num_waypoints = as_count(require(doc, root, "num_waypoints"), "num_waypoints");
    s.robot_speed = as_number(require(doc, root, "robot_speed"), "robot_speed");
    s.sensor_radius = as_number(require(doc, root, "sensor_radius"), "sensor_radius");
    s.goal_tolerance = as_number(require(doc, root, "goal_tolerance"), "goal_tolerance");
    s.control_step = as_number(require(doc, root, "control_step"), "control_step");

    if (const auto it = doc.find("static_obstacles"); it != doc.end()) {
        if (!it->is_array()) {
            throw ScenarioSchemaError("static_obstacles: expected an array");
        }
        for (std::size_t i = 0; i < it->size(); ++i) {
            s.workspace.static_obstacles.push_back(
                parse_static((*it)[i], "static_obstacles[" + std::to_string(i) + "]"));
        }
    }
    if (const auto it = doc.find("dynamic_obstacles"); it != doc.end()) {
        if (!it->is_array()) {
            throw ScenarioSchemaError("dynamic_obstacles: expected an array");
        }
        for (std::size_t i = 0; i < it->size(); ++i) {
            s.workspace.dynamic_obstacles.push_back(
                parse_dynamic((*it)[i], "dynamic_obstacles[" + std::to_string(i) + "]"));
        }
    }
    if (const auto it = doc.find("defaults"); it != doc.end()) {
        file.defaults = parse_defaults(*it);
    }

    try {
        s.validate();
    } catch (const InvalidScenario& e) {
        throw ScenarioInvariantError(e.what());
    }
    check_defaults(file.defaults);
    return file;
}

ScenarioFile load_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ScenarioParseError("cannot read scenario file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_scenario(buffer.str());
    } catch (const ScenarioError& e) {
        // Re-throw the same kind with the path prepended.
        const std::string msg = path.string() + ": " + e.what();
        if (dynamic_cast<const ScenarioParseError*>(&e)) throw ScenarioParseError(msg);
        if (dynamic_cast<const ScenarioSchemaError*>(&e)) throw ScenarioSchemaError(msg);
        throw ScenarioInvariantError(msg);
    }
}

Scenario load_scenario(const std::filesystem::path& path) { return load_scenario_file(path).scenario; }

std::string dump_scenario(const ScenarioFile& file) {
    const Scenario& s = file.scenario;
    nlohmann::ordered_json j;
    j["version"] = kScenarioVersion;
    j["id"] = s.id;
    j["bounds"] = {{"min", vec3_json(s.workspace.bounds.min_corner)}, {"max", vec3_json(s.workspace.bounds.max_corner)}};
    j["start"] = vec3_json(s.start);
    j["goal"] = vec3_json(s.goal);
    j["num_waypoints"] = s.num_waypoints;
    j["robot_speed"] = s.robot_speed;
    j["sensor_radius"] = s.sensor_radius;
    j["goal_tolerance"] = s.goal_tolerance;
    j["control_step"] = s.control_step;
    auto& statics = j["static_obstacles"] = nlohmann::ordered_json::array();
    for (const auto& obs : s.workspace.static_obstacles) {
        if (const auto* box = std::get_if<Aabb>(&obs)) {
            statics.push_back({{"type", "aabb"}, {"min", vec3_json(box->min_corner)}, {"max", vec3_json(box->max_corner)}});
        } else {
            const auto& sphere = std::get<SphereObstacle>(obs);
            statics.push_back({{"type", "sphere"}, {"center", vec3_json(sphere.center)}, {"radius", sphere.radius}});
        }
    }
    auto& dynamics = j["dynamic_obstacles"] = nlohmann::ordered_json::array();
    for (const auto& obs : s.workspace.dynamic_obstacles) {
        dynamics.push_back({{"center", vec3_json(obs.shape.center)},
                            {"radius", obs.shape.radius},
                            {"velocity", vec3_json(obs.velocity)},
                            {"motion", "reflect_at_bounds"}});
    }
    const ScenarioDefaults& d = file.defaults;
    nlohmann::ordered_json defaults = nlohmann::ordered_json::object();
    if (d.algorithm) defaults["algorithm"] = std::string(algorithm_name(*d.algorithm));
    if (d.population) defaults["population"] = *d.population;
    if (d.iterations) defaults["iterations"] = *d.iterations;
    if (d.collision_weight) defaults["collision_weight"] = *d.collision_weight;
    if (d.smoothness_weight) defaults["smoothness_weight"] = *d.smoothness_weight;
    if (d.sample_resolution) defaults["sample_resolution"] = *d.sample_resolution;
    if (d.lookahead_factor) defaults["lookahead_factor"] = *d.lookahead_factor;
    if (d.clearance) defaults["clearance"] = *d.clearance;
    if (!defaults.empty()) {
        j["defaults"] = std::move(defaults);
    }
    return j.dump(2) + "\n";
}

void save_scenario(const ScenarioFile& file, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write scenario file '" + path.string() + "'");
    }
    out << dump_scenario(file);
}

CostParams cost_params_for(const ScenarioFile& file) {
    CostParams params = CostParams::defaults_for(file.scenario.workspace);
    if (file.defaults.collision_weight) params.collision_weight = *file.defaults.collision_weight;
    if (file.defaults.smoothness_weight) params.smoothness_weight = *file.defaults.smoothness_weight;
    if (file.defaults.sample_resolution) params.sample_resolution = *file.defaults.sample_resolution;
    return params;
}

}  // namespace swarmroute
