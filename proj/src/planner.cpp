#include <algorithm>
#include <cctype>
#include <chrono>
#include <string>

#include "swarmroute/errors.hpp"
#include "swarmroute/planner.hpp"

namespace swarmroute {

std::string_view algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::Ssa: return "ssa";
        case Algorithm::Pso: return "pso";
        case Algorithm::Fa: return "fa";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "ssa") return Algorithm::Ssa;
    if (lower == "pso") return Algorithm::Pso;
    if (lower == "fa") return Algorithm::Fa;
    if (lower == "gso" || lower == "aco") {
        throw InvalidArgument("algorithm '" + std::string(name) +
                              "' is out of scope; available algorithms: ssa, pso, fa");
    }
    throw InvalidArgument("unknown algorithm '" + std::string(name) + "'; expected one of ssa, pso, fa");
}

RunResult run_optimizer(const AlgoParams& params, const Objective& objective, const SearchBounds& bounds,
                        std::uint64_t seed, const RunOptions& options) {
    switch (params.algorithm) {
        case Algorithm::Ssa: {
            SsaParams ssa;
            ssa.population = params.population;
            ssa.max_iterations = params.iterations;
            ssa.follower_mode = params.follower_mode;
            ssa.branch_threshold = params.branch_threshold;
            return ssa_run(objective, bounds, ssa, seed, options);
        }
        case Algorithm::Pso: {
            PsoParams pso = params.pso;
            pso.population = params.population;
            pso.max_iterations = params.iterations;
            return pso_run(objective, bounds, pso, seed, options);
        }
        case Algorithm::Fa: {
            FaParams fa = params.fa;
            fa.population = params.population;
            fa.max_iterations = params.iterations;
            return fa_run(objective, bounds, fa, seed, options);
        }
    }
    throw InvalidArgument("unknown algorithm");
}

PlanResult plan_route(const PlanRequest& request, const AlgoParams& algo, const CostParams& cost,
                      std::uint64_t seed) {
    if (request.workspace == nullptr) {
        throw InvalidArgument("plan_route: no workspace");
    }
    if (request.num_waypoints == 0) {
        throw InvalidArgument("plan_route: need at least one waypoint");
    }
    cost.validate();
    const Workspace& ws = *request.workspace;

    std::vector<double> lower;
    std::vector<double> upper;
    for (std::size_t w = 0; w < request.num_waypoints; ++w) {
        for (std::size_t k = 0; k < 3; ++k) {
            lower.push_back(ws.bounds.min_corner[k]);
            upper.push_back(ws.bounds.max_corner[k]);
        }
    }
    const SearchBounds bounds(std::move(lower), std::move(upper));

    const Vec3 start = request.start;
    const Vec3 goal = request.goal;
    const double t0 = request.t0;
    const double speed = request.robot_speed;
    const Objective objective = [&](std::span<const double> x) {
        return route_cost(decode(x, start, goal, ws.bounds), ws, cost, t0, speed);
    };

    RunOptions options;
    options.initial_members = request.warm_start;

    const auto began = std::chrono::steady_clock::now();
    RunResult run = run_optimizer(algo, objective, bounds, seed, options);
    const auto ended = std::chrono::steady_clock::now();

    PlanResult result;
    result.route = decode(run.best_position, start, goal, ws.bounds);
    result.cost = run.best_fitness;
    result.history = std::move(run.history);
    result.wall_time_seconds = std::chrono::duration<double>(ended - began).count();
    return result;
}

PlanResult plan_static(const Scenario& scenario, const AlgoParams& algo, const CostParams& cost,
                       std::uint64_t seed) {
    for (std::size_t i = 0; i < scenario.workspace.static_obstacles.size(); ++i) {
        if (point_obstacle_distance(scenario.goal, scenario.workspace.static_obstacles[i]) <= 0.0) {
            throw Unreachable("goal lies inside static obstacle " + std::to_string(i));
        }
    }
    scenario.validate();

    // Already at the goal: the route is the straight segment, nothing to search.
    if (distance(scenario.start, scenario.goal) <= scenario.goal_tolerance) {
        PlanResult result;
        result.route = resample(std::vector<Vec3>{scenario.start, scenario.goal}, scenario.num_waypoints);
        result.cost = route_cost(result.route, scenario.workspace, cost, 0.0, scenario.robot_speed);
        result.history.initial_best_fitness = result.cost;
        result.history.best_fitness_per_iteration.assign(algo.iterations, result.cost);
        result.history.seed = seed;
        return result;
    }

    PlanRequest request;
    request.workspace = &scenario.workspace;
    request.start = scenario.start;
    request.goal = scenario.goal;
    request.num_waypoints = scenario.num_waypoints;
    request.robot_speed = scenario.robot_speed;
    request.t0 = 0.0;
    return plan_route(request, algo, cost, seed);
}

}  // namespace swarmroute
