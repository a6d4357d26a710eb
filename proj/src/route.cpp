#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "swarmroute/errors.hpp"
#include "swarmroute/planner.hpp"

namespace swarmroute {

namespace {

void require_positive(double value, const char* field) {
    if (!std::isfinite(value) || !(value > 0.0)) {
        throw InvalidScenario(std::string(field) + " must be a positive finite number");
    }
}

std::string format_point(const Vec3& p) {
    return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ", " + std::to_string(p.z) + ")";
}

}  // namespace

void Scenario::validate() const {
    if (num_waypoints == 0) {
        throw InvalidScenario("num_waypoints must be at least 1");
    }
    require_positive(robot_speed, "robot_speed");
    require_positive(sensor_radius, "sensor_radius");
    require_positive(goal_tolerance, "goal_tolerance");
    require_positive(control_step, "control_step");
    workspace.validate();
    if (!workspace.bounds.contains(start)) {
        throw InvalidScenario("start " + format_point(start) + " lies outside the workspace bounds");
    }
    if (!workspace.bounds.contains(goal)) {
        throw InvalidScenario("goal " + format_point(goal) + " lies outside the workspace bounds");
    }
    for (std::size_t i = 0; i < workspace.static_obstacles.size(); ++i) {
        if (point_obstacle_distance(start, workspace.static_obstacles[i]) <= 0.0) {
            throw InvalidScenario("start lies inside static obstacle " + std::to_string(i));
        }
    }
    for (std::size_t i = 0; i < workspace.dynamic_obstacles.size(); ++i) {
        const auto& obs = workspace.dynamic_obstacles[i];
        if (distance(start, obs.shape.center) <= obs.shape.radius) {
            throw InvalidScenario("start lies inside dynamic obstacle " + std::to_string(i) + " at t = 0");
        }
    }
}

SearchBounds Scenario::search_bounds() const {
    std::vector<double> lower;
    std::vector<double> upper;
    lower.reserve(3 * num_waypoints);
    upper.reserve(3 * num_waypoints);
    for (std::size_t w = 0; w < num_waypoints; ++w) {
        for (std::size_t k = 0; k < 3; ++k) {
            lower.push_back(workspace.bounds.min_corner[k]);
            upper.push_back(workspace.bounds.max_corner[k]);
        }
    }
    return SearchBounds(std::move(lower), std::move(upper));
}

CostParams CostParams::defaults_for(const Workspace& workspace) {
    CostParams params;
    params.sample_resolution = workspace.bounds.diagonal() / 200.0;
    return params;
}

void CostParams::validate() const {
    if (!std::isfinite(collision_weight) || collision_weight < 0.0) {
        throw InvalidArgument("collision_weight must be finite and non-negative");
    }
    if (!std::isfinite(smoothness_weight) || smoothness_weight < 0.0) {
        throw InvalidArgument("smoothness_weight must be finite and non-negative");
    }
    if (!std::isfinite(sample_resolution) || !(sample_resolution > 0.0)) {
        throw InvalidArgument("sample_resolution must be positive");
    }
}

std::vector<double> encode(const Route& route) {
    if (route.points.size() < 3) {
        throw InvalidArgument("encode: route needs at least one interior waypoint");
    }
    std::vector<double> x;
    x.reserve(3 * (route.points.size() - 2));
    for (std::size_t i = 1; i + 1 < route.points.size(); ++i) {
        x.push_back(route.points[i].x);
        x.push_back(route.points[i].y);
        x.push_back(route.points[i].z);
    }
    return x;
}

Route decode(std::span<const double> x, const Vec3& start, const Vec3& goal, const Aabb& bounds) {
    if (x.empty() || x.size() % 3 != 0) {
        throw InvalidArgument("decode: vector length " + std::to_string(x.size()) +
                              " is not a positive multiple of 3");
    }
    Route route;
    route.points.reserve(x.size() / 3 + 2);
    route.points.push_back(start);
    for (std::size_t i = 0; i < x.size(); i += 3) {
        Vec3 p{x[i], x[i + 1], x[i + 2]};
        for (std::size_t k = 0; k < 3; ++k) {
            p[k] = std::clamp(p[k], bounds.min_corner[k], bounds.max_corner[k]);
        }
        route.points.push_back(p);
    }
    route.points.push_back(goal);
    return route;
}

Route decode(std::span<const double> x, const Scenario& scenario) {
    if (x.size() != 3 * scenario.num_waypoints) {
        throw InvalidArgument("decode: expected " + std::to_string(3 * scenario.num_waypoints) +
                              " coordinates, got " + std::to_string(x.size()));
    }
    return decode(x, scenario.start, scenario.goal, scenario.workspace.bounds);
}

double route_length(std::span<const Vec3> points) {
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        total += distance(points[i], points[i + 1]);
    }
    return total;
}

double turning_penalty(std::span<const Vec3> points) {
    double total = 0.0;
    for (std::size_t i = 1; i + 1 < points.size(); ++i) {
        const Vec3 a = points[i] - points[i - 1];
        const Vec3 b = points[i + 1] - points[i];
        const double na = norm(a);
        const double nb = norm(b);
        if (na == 0.0 || nb == 0.0) {
            continue;
        }
        const double angle = std::acos(std::clamp(dot(a, b) / (na * nb), -1.0, 1.0));
        total += angle * angle;
    }
    return total;
}

double route_cost(const Route& route, const Workspace& workspace, const CostParams& params, double t0,
                  double robot_speed) {
    double cost = route_length(route.points);
    if (params.collision_weight > 0.0) {
        cost += params.collision_weight *
                collision_measure(route.points, workspace, t0, robot_speed, params.sample_resolution);
    }
    if (params.smoothness_weight > 0.0) {
        cost += params.smoothness_weight * turning_penalty(route.points);
    }
    return cost;
}

Route resample(std::span<const Vec3> points, std::size_t interior) {
    if (points.empty()) {
        throw InvalidArgument("resample: empty polyline");
    }
    Route out;
    out.points.reserve(interior + 2);
    out.points.push_back(points.front());
    const double total = route_length(points);
    std::size_t seg = 0;
    double seg_start = 0.0;
    for (std::size_t k = 1; k <= interior; ++k) {
        const double target = total * static_cast<double>(k) / static_cast<double>(interior + 1);
        while (seg + 2 < points.size() && seg_start + distance(points[seg], points[seg + 1]) < target) {
            seg_start += distance(points[seg], points[seg + 1]);
            ++seg;
        }
        if (points.size() == 1) {
            out.points.push_back(points.front());
            continue;
        }
        const double len = distance(points[seg], points[seg + 1]);
        const double u = len > 0.0 ? std::clamp((target - seg_start) / len, 0.0, 1.0) : 0.0;
        out.points.push_back(points[seg] + u * (points[seg + 1] - points[seg]));
    }
    out.points.push_back(points.back());
    return out;
}

}  // namespace swarmroute
