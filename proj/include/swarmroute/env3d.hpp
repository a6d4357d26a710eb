#pragma once

// 3D world model: workspace box, static AABB/sphere obstacles, moving spheres,
// and the collision and sensing queries the planner is built on.
// All sets are closed: touching an obstacle's surface counts as contact.

#include <cmath>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace swarmroute {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double& operator[](std::size_t k) { return k == 0 ? x : (k == 1 ? y : z); }
    double operator[](std::size_t k) const { return k == 0 ? x : (k == 1 ? y : z); }

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

    bool operator==(const Vec3&) const = default;
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator*(Vec3 a, double s) { return a *= s; }
inline Vec3 operator*(double s, Vec3 a) { return a *= s; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

struct Aabb {
    Vec3 min_corner;
    Vec3 max_corner;

    /// Throws InvalidArgument unless min < max on every axis.
    void validate() const;
    bool contains(const Vec3& p) const;
    Vec3 center() const { return 0.5 * (min_corner + max_corner); }
    double diagonal() const { return distance(min_corner, max_corner); }

    bool operator==(const Aabb&) const = default;
};

struct SphereObstacle {
    Vec3 center;
    double radius = 1.0;

    void validate() const;

    bool operator==(const SphereObstacle&) const = default;
};

using StaticObstacle = std::variant<Aabb, SphereObstacle>;

enum class MotionModel { ReflectAtBounds };

struct DynamicObstacle {
    SphereObstacle shape;  // at t = 0
    Vec3 velocity;
    MotionModel motion = MotionModel::ReflectAtBounds;

    bool operator==(const DynamicObstacle&) const = default;
};

struct Workspace {
    Aabb bounds;
    std::vector<StaticObstacle> static_obstacles;
    std::vector<DynamicObstacle> dynamic_obstacles;

    /// Checks shape invariants, that every static obstacle touches the bounds
    /// and that dynamic obstacles start inside them. Throws InvalidScenario.
    void validate() const;

    /// Copy keeping only the listed obstacles, in the listed order.
    Workspace subset(std::span<const std::size_t> static_ids, std::span<const std::size_t> dynamic_ids) const;

    bool operator==(const Workspace&) const = default;
};

/// Closed segment vs closed box, slab method.
bool segment_intersects_aabb(const Vec3& p0, const Vec3& p1, const Aabb& box);

/// max(0, radius - d), d the distance from the segment to the sphere centre.
double segment_sphere_penetration(const Vec3& p0, const Vec3& p1, const SphereObstacle& sphere);

double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b);

/// Euclidean distance from p to the box; 0 inside or on the surface.
double point_aabb_distance(const Vec3& p, const Aabb& box);

/// Distance from p to the obstacle surface when p is inside, else 0.
double point_penetration(const Vec3& p, const Aabb& box);
double point_penetration(const Vec3& p, const SphereObstacle& sphere);
double point_penetration(const Vec3& p, const StaticObstacle& obstacle);

/// Distance from p to the obstacle; 0 inside or on the surface.
double point_obstacle_distance(const Vec3& p, const StaticObstacle& obstacle);

/// Centre at time t: constant velocity, elastic reflection per axis at the
/// workspace bounds (a triangle wave).
Vec3 obstacle_position_at(const DynamicObstacle& obstacle, double t, const Aabb& bounds);

/// The obstacle's sphere at time t.
SphereObstacle obstacle_at(const DynamicObstacle& obstacle, double t, const Aabb& bounds);

struct SensedObstacles {
    std::vector<std::size_t> static_ids;
    std::vector<std::size_t> dynamic_ids;

    bool empty() const { return static_ids.empty() && dynamic_ids.empty(); }
    bool operator==(const SensedObstacles&) const = default;
};

/// Obstacles within sensor_radius of the robot at time t, ascending ids.
SensedObstacles sense(const Workspace& workspace, const Vec3& robot_position, double sensor_radius, double t);

/// True when p touches any static obstacle, or any dynamic one at time t.
bool point_in_collision(const Workspace& workspace, const Vec3& p, double t);

/// Penetration integral along a polyline.
///
/// Each segment is split into ceil(length / resolution) equal pieces and
/// sampled at their midpoints. A sample at arc length s is tested against the
/// static obstacles and against dynamic obstacles at time t0 + s / robot_speed.
/// Returns sum(depth * piece length); 0 iff no sample penetrates anything.
double collision_measure(std::span<const Vec3> route, const Workspace& workspace, double t0, double robot_speed,
                         double resolution);

}  // namespace swarmroute
