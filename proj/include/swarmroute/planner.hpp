#pragma once

// Route planning on top of the continuous optimizers.
//
// A route is start, W interior waypoints, goal. The optimizers search over the
// 3W interior coordinates laid out (x1, y1, z1, ..., xW, yW, zW), each bounded
// by the workspace box. Fitness is length + collision_weight * penetration
// integral + smoothness_weight * sum of squared turning angles.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swarmroute/env3d.hpp"
#include "swarmroute/firefly.hpp"
#include "swarmroute/pso.hpp"
#include "swarmroute/ssa.hpp"
#include "swarmroute/swarm.hpp"

namespace swarmroute {

struct Scenario {
    std::string id;
    Workspace workspace;
    Vec3 start;
    Vec3 goal;
    std::size_t num_waypoints = 5;
    double robot_speed = 1.0;      // m/s
    double sensor_radius = 10.0;   // m
    double goal_tolerance = 0.5;   // m
    double control_step = 0.5;     // s

    /// Throws InvalidScenario on a broken invariant. A goal inside an obstacle
    /// is left to the planner, which reports it as Unreachable.
    void validate() const;

    /// The workspace box tiled over every interior waypoint.
    SearchBounds search_bounds() const;

    bool operator==(const Scenario&) const = default;
};

struct Route {
    std::vector<Vec3> points;

    bool operator==(const Route&) const = default;
};

struct CostParams {
    double collision_weight = 1000.0;
    double smoothness_weight = 0.0;
    double sample_resolution = 1.0;  // m

    /// Defaults with sample_resolution = workspace diagonal / 200.
    static CostParams defaults_for(const Workspace& workspace);
    void validate() const;

    bool operator==(const CostParams&) const = default;
};

std::vector<double> encode(const Route& route);

/// Builds start + waypoints + goal; coordinates are clamped into `bounds`.
/// Throws InvalidArgument unless x.size() is a positive multiple of 3.
Route decode(std::span<const double> x, const Vec3& start, const Vec3& goal, const Aabb& bounds);
Route decode(std::span<const double> x, const Scenario& scenario);

double route_length(std::span<const Vec3> points);

/// Sum over interior vertices of the squared turning angle (rad^2).
/// Vertices adjacent to a zero-length segment contribute nothing.
double turning_penalty(std::span<const Vec3> points);

double route_cost(const Route& route, const Workspace& workspace, const CostParams& params, double t0,
                  double robot_speed);

/// Resamples a polyline to `interior` evenly spaced (by arc length) interior
/// points, keeping both ends.
Route resample(std::span<const Vec3> points, std::size_t interior);

enum class Algorithm { Ssa, Pso, Fa };

std::string_view algorithm_name(Algorithm algorithm);

/// Accepts "ssa", "pso", "fa" (any case). Throws InvalidArgument otherwise;
/// the message notes that GSO and ACO are not provided.
Algorithm parse_algorithm(std::string_view name);

struct AlgoParams {
    Algorithm algorithm = Algorithm::Ssa;
    std::size_t population = 20;
    std::size_t iterations = 25;
    FollowerMode follower_mode = FollowerMode::OriginalSsa;
    double branch_threshold = 0.5;
    PsoParams pso;  // population/iterations overridden by the fields above
    FaParams fa;    // likewise

    bool operator==(const AlgoParams&) const = default;
};

/// Dispatches to ssa_run / pso_run / fa_run.
RunResult run_optimizer(const AlgoParams& params, const Objective& objective, const SearchBounds& bounds,
                        std::uint64_t seed, const RunOptions& options = {});

struct PlanResult {
    Route route;
    double cost = 0.0;
    RunHistory history;
    double wall_time_seconds = 0.0;
};

/// Plans start -> goal over the fully known workspace. When start is already
/// within goal_tolerance of the goal the straight segment is returned without
/// running the optimizer (zero evaluations).
/// Throws Unreachable when the goal touches a static obstacle, InvalidScenario
/// on any other invalid scenario.
PlanResult plan_static(const Scenario& scenario, const AlgoParams& algo, const CostParams& cost,
                       std::uint64_t seed);

struct PlanRequest {
    const Workspace* workspace = nullptr;
    Vec3 start;
    Vec3 goal;
    std::size_t num_waypoints = 5;
    double robot_speed = 1.0;
    double t0 = 0.0;
    std::vector<std::vector<double>> warm_start;
};

/// Lower-level entry used by plan_static and the replanning loop.
PlanResult plan_route(const PlanRequest& request, const AlgoParams& algo, const CostParams& cost,
                      std::uint64_t seed);

}  // namespace swarmroute
