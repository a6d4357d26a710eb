#include "swarmroute/env3d.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>
#include <type_traits>

#include "swarmroute/errors.hpp"

namespace swarmroute {

namespace {

constexpr const char* kAxisNames[3] = {"x", "y", "z"};

bool finite(const Vec3& v) { return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z); }

bool boxes_touch(const Aabb& a, const Aabb& b) {
    for (std::size_t k = 0; k < 3; ++k) {
        if (a.max_corner[k] < b.min_corner[k] || b.max_corner[k] < a.min_corner[k]) {
            return false;
        }
    }
    return true;
}

// Position on [lo, hi] of a point bouncing between the walls.
double triangle_wave(double start, double velocity, double t, double lo, double hi) {
    if (velocity == 0.0 || t == 0.0) {
        return start;
    }
    const double width = hi - lo;
    const double period = 2.0 * width;
    double s = std::fmod((start - lo) + velocity * t, period);
    if (s < 0.0) {
        s += period;
    }
    if (s > width) {
        s = period - s;
    }
    return lo + s;
}

}  // namespace

void Aabb::validate() const {
    if (!finite(min_corner) || !finite(max_corner)) {
        throw InvalidArgument("box corners must be finite");
    }
    for (std::size_t k = 0; k < 3; ++k) {
        if (!(min_corner[k] < max_corner[k])) {
            throw InvalidArgument(std::string("box min must be below max on axis ") + kAxisNames[k]);
        }
    }
}

bool Aabb::contains(const Vec3& p) const {
    for (std::size_t k = 0; k < 3; ++k) {
        if (p[k] < min_corner[k] || p[k] > max_corner[k]) {
            return false;
        }
    }
    return true;
}

void SphereObstacle::validate() const {
    if (!finite(center) || !std::isfinite(radius) || !(radius > 0.0)) {
        throw InvalidArgument("sphere needs a finite centre and a positive radius");
    }
}

void Workspace::validate() const {
    try {
        bounds.validate();
    } catch (const InvalidArgument& e) {
        throw InvalidScenario(std::string("workspace bounds: ") + e.what());
    }
    for (std::size_t i = 0; i < static_obstacles.size(); ++i) {
        const auto where = "static obstacle " + std::to_string(i);
        try {
            std::visit([](const auto& shape) { shape.validate(); }, static_obstacles[i]);
        } catch (const InvalidArgument& e) {
            throw InvalidScenario(where + ": " + e.what());
        }
        const bool inside = std::visit(
            [&](const auto& shape) {
                using T = std::decay_t<decltype(shape)>;
                if constexpr (std::is_same_v<T, Aabb>) {
                    return boxes_touch(shape, bounds);
                } else {
                    return point_aabb_distance(shape.center, bounds) <= shape.radius;
                }
            },
            static_obstacles[i]);
        if (!inside) {
            throw InvalidScenario(where + " lies entirely outside the workspace bounds");
        }
    }
    for (std::size_t i = 0; i < dynamic_obstacles.size(); ++i) {
        const auto& obs = dynamic_obstacles[i];
        const auto where = "dynamic obstacle " + std::to_string(i);
        try {
            obs.shape.validate();
        } catch (const InvalidArgument& e) {
            throw InvalidScenario(where + ": " + e.what());
        }
        if (!finite(obs.velocity)) {
            throw InvalidScenario(where + ": velocity must be finite");
        }
        if (!bounds.contains(obs.shape.center)) {
            throw InvalidScenario(where + ": centre must start inside the workspace bounds");
        }
    }
}

Workspace Workspace::subset(std::span<const std::size_t> static_ids, std::span<const std::size_t> dynamic_ids) const {
    Workspace out;
    out.bounds = bounds;
    for (auto id : static_ids) {
        out.static_obstacles.push_back(static_obstacles.at(id));
    }
    for (auto id : dynamic_ids) {
        out.dynamic_obstacles.push_back(dynamic_obstacles.at(id));
    }
    return out;
}

bool segment_intersects_aabb(const Vec3& p0, const Vec3& p1, const Aabb& box) {
    double t_enter = 0.0;
    double t_exit = 1.0;
    const Vec3 d = p1 - p0;
    for (std::size_t k = 0; k < 3; ++k) {
        if (d[k] == 0.0) {
            if (p0[k] < box.min_corner[k] || p0[k] > box.max_corner[k]) {
                return false;
            }
            continue;
        }
        double t1 = (box.min_corner[k] - p0[k]) / d[k];
        double t2 = (box.max_corner[k] - p0[k]) / d[k];
        if (t1 > t2) {
            std::swap(t1, t2);
        }
        t_enter = std::max(t_enter, t1);
        t_exit = std::min(t_exit, t2);
        if (t_enter > t_exit) {
            return false;
        }
    }
    return true;
}

double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
    const Vec3 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) {
        return distance(p, a);
    }
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return distance(p, a + t * ab);
}

double segment_sphere_penetration(const Vec3& p0, const Vec3& p1, const SphereObstacle& sphere) {
    // Distance is computed from the nearer endpoint so swapping p0/p1 gives
    // the same value bit for bit.
    const bool swap = std::tie(p1.x, p1.y, p1.z) < std::tie(p0.x, p0.y, p0.z);
    const double d = swap ? point_segment_distance(sphere.center, p1, p0)
                          : point_segment_distance(sphere.center, p0, p1);
    return std::max(0.0, sphere.radius - d);
}

double point_aabb_distance(const Vec3& p, const Aabb& box) {
    double sum = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
        const double excess = std::max({box.min_corner[k] - p[k], 0.0, p[k] - box.max_corner[k]});
        sum += excess * excess;
    }
    return std::sqrt(sum);
}

double point_penetration(const Vec3& p, const Aabb& box) {
    if (!box.contains(p)) {
        return 0.0;
    }
    double depth = std::min(p.x - box.min_corner.x, box.max_corner.x - p.x);
    depth = std::min({depth, p.y - box.min_corner.y, box.max_corner.y - p.y});
    depth = std::min({depth, p.z - box.min_corner.z, box.max_corner.z - p.z});
    return depth;
}

double point_penetration(const Vec3& p, const SphereObstacle& sphere) {
    return std::max(0.0, sphere.radius - distance(p, sphere.center));
}

double point_penetration(const Vec3& p, const StaticObstacle& obstacle) {
    return std::visit([&](const auto& shape) { return point_penetration(p, shape); }, obstacle);
}

double point_obstacle_distance(const Vec3& p, const StaticObstacle& obstacle) {
    return std::visit(
        [&](const auto& shape) -> double {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, Aabb>) {
                return point_aabb_distance(p, shape);
            } else {
                return std::max(0.0, distance(p, shape.center) - shape.radius);
            }
        },
        obstacle);
}

Vec3 obstacle_position_at(const DynamicObstacle& obstacle, double t, const Aabb& bounds) {
    Vec3 out;
    for (std::size_t k = 0; k < 3; ++k) {
        out[k] = triangle_wave(obstacle.shape.center[k], obstacle.velocity[k], t, bounds.min_corner[k],
                               bounds.max_corner[k]);
    }
    return out;
}

SphereObstacle obstacle_at(const DynamicObstacle& obstacle, double t, const Aabb& bounds) {
    return {obstacle_position_at(obstacle, t, bounds), obstacle.shape.radius};
}

SensedObstacles sense(const Workspace& workspace, const Vec3& robot_position, double sensor_radius, double t) {
    if (!(sensor_radius > 0.0)) {
        throw InvalidArgument("sense: sensor_radius must be positive");
    }
    SensedObstacles out;
    for (std::size_t i = 0; i < workspace.static_obstacles.size(); ++i) {
        if (point_obstacle_distance(robot_position, workspace.static_obstacles[i]) <= sensor_radius) {
            out.static_ids.push_back(i);
        }
    }
    for (std::size_t i = 0; i < workspace.dynamic_obstacles.size(); ++i) {
        const auto& obs = workspace.dynamic_obstacles[i];
        const Vec3 c = obstacle_position_at(obs, t, workspace.bounds);
        if (distance(robot_position, c) <= sensor_radius + obs.shape.radius) {
            out.dynamic_ids.push_back(i);
        }
    }
    return out;
}

bool point_in_collision(const Workspace& workspace, const Vec3& p, double t) {
    for (const auto& obs : workspace.static_obstacles) {
        if (point_obstacle_distance(p, obs) <= 0.0) {
            return true;
        }
    }
    for (const auto& obs : workspace.dynamic_obstacles) {
        if (distance(p, obstacle_position_at(obs, t, workspace.bounds)) <= obs.shape.radius) {
            return true;
        }
    }
    return false;
}

double collision_measure(std::span<const Vec3> route, const Workspace& workspace, double t0, double robot_speed,
                         double resolution) {
    if (!(resolution > 0.0)) {
        throw InvalidArgument("collision_measure: resolution must be positive");
    }
    if (!(robot_speed > 0.0)) {
        throw InvalidArgument("collision_measure: robot_speed must be positive");
    }
    if (workspace.static_obstacles.empty() && workspace.dynamic_obstacles.empty()) {
        return 0.0;
    }
    double total = 0.0;
    double arc_before = 0.0;
    for (std::size_t s = 0; s + 1 < route.size(); ++s) {
        const Vec3& a = route[s];
        const Vec3& b = route[s + 1];
        const double length = distance(a, b);
        if (length == 0.0) {
            continue;
        }
        const auto pieces = static_cast<std::size_t>(std::ceil(length / resolution));
        const double h = length / static_cast<double>(pieces);
        for (std::size_t k = 0; k < pieces; ++k) {
            const double along = (static_cast<double>(k) + 0.5) * h;
            const Vec3 p = a + (along / length) * (b - a);
            double depth = 0.0;
            for (const auto& obs : workspace.static_obstacles) {
                depth += point_penetration(p, obs);
            }
            if (!workspace.dynamic_obstacles.empty()) {
                const double t = t0 + (arc_before + along) / robot_speed;
                for (const auto& obs : workspace.dynamic_obstacles) {
                    depth += point_penetration(p, obstacle_at(obs, t, workspace.bounds));
                }
            }
            total += depth * h;
        }
        arc_before += length;
    }
    return total;
}

}  // namespace swarmroute
