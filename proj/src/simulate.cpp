#include "swarmroute/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "swarmroute/errors.hpp"

namespace swarmroute {

namespace {

// Substeps per travelled piece for the simulator's own contact check.
constexpr int kContactSubsteps = 8;

std::vector<Vec3> polyline_prefix(std::span<const Vec3> points, double length) {
    std::vector<Vec3> out;
    if (points.empty()) {
        return out;
    }
    out.push_back(points.front());
    double left = length;
    for (std::size_t i = 0; i + 1 < points.size() && left > 0.0; ++i) {
        const double seg = distance(points[i], points[i + 1]);
        if (seg <= left) {
            out.push_back(points[i + 1]);
            left -= seg;
        } else {
            out.push_back(points[i] + (left / seg) * (points[i + 1] - points[i]));
            left = 0.0;
        }
    }
    return out;
}

bool lookahead_collides(std::span<const Vec3> ahead, const Workspace& known, double t, double speed,
                        double resolution) {
    for (std::size_t i = 0; i + 1 < ahead.size(); ++i) {
        for (const auto& obs : known.static_obstacles) {
            const bool hit = std::visit(
                [&](const auto& shape) {
                    using T = std::decay_t<decltype(shape)>;
                    if constexpr (std::is_same_v<T, Aabb>) {
                        return segment_intersects_aabb(ahead[i], ahead[i + 1], shape);
                    } else {
                        return point_segment_distance(shape.center, ahead[i], ahead[i + 1]) <= shape.radius;
                    }
                },
                obs);
            if (hit) {
                return true;
            }
        }
    }
    return collision_measure(ahead, known, t, speed, resolution) > 0.0;
}

bool goal_blocked(const Workspace& known, const Vec3& goal) {
    return std::any_of(known.static_obstacles.begin(), known.static_obstacles.end(),
                       [&](const StaticObstacle& obs) { return point_obstacle_distance(goal, obs) <= 0.0; });
}

}  // namespace

std::string_view trace_event_name(TraceEvent event) {
    switch (event) {
        case TraceEvent::Start: return "start";
        case TraceEvent::Move: return "move";
        case TraceEvent::ReplanNewObstacle: return "replan_new_obstacle";
        case TraceEvent::ReplanPredictedCollision: return "replan_predicted_collision";
        case TraceEvent::GoalReached: return "goal_reached";
        case TraceEvent::Collision: return "collision";
        case TraceEvent::Timeout: return "timeout";
        case TraceEvent::Unreachable: return "unreachable";
    }
    return "unknown";
}

std::string_view outcome_name(SimOutcome outcome) {
    switch (outcome) {
        case SimOutcome::GoalReached: return "goal_reached";
        case SimOutcome::Timeout: return "timeout";
        case SimOutcome::Unreachable: return "unreachable";
        case SimOutcome::Collision: return "collision";
    }
    return "unknown";
}

bool SimTrace::collided() const {
    return std::any_of(samples.begin(), samples.end(), [](const TraceSample& s) { return s.collided; });
}

Workspace inflate(const Workspace& workspace, double margin) {
    if (margin == 0.0) {
        return workspace;
    }
    Workspace out = workspace;
    const Vec3 grow{margin, margin, margin};
    for (auto& obs : out.static_obstacles) {
        std::visit(
            [&](auto& shape) {
                using T = std::decay_t<decltype(shape)>;
                if constexpr (std::is_same_v<T, Aabb>) {
                    shape.min_corner -= grow;
                    shape.max_corner += grow;
                } else {
                    shape.radius += margin;
                }
            },
            obs);
    }
    for (auto& obs : out.dynamic_obstacles) {
        obs.shape.radius += margin;
    }
    return out;
}

SimTrace simulate_dynamic(const Scenario& scenario, const AlgoParams& algo, const CostParams& cost,
                          std::uint64_t seed, const SimOptions& options) {
    scenario.validate();
    cost.validate();
    if (!(options.max_sim_time >= 0.0) || !std::isfinite(options.max_sim_time)) {
        throw InvalidArgument("max_sim_time must be finite and non-negative");
    }
    if (!(options.lookahead_factor >= 0.0) || !(options.clearance >= 0.0)) {
        throw InvalidArgument("lookahead_factor and clearance must be non-negative");
    }

    const Workspace& world = scenario.workspace;
    const double speed = scenario.robot_speed;
    const double step_length = speed * scenario.control_step;
    const double lookahead = options.lookahead_factor * step_length;

    std::vector<std::size_t> known_static;
    std::vector<std::size_t> known_dynamic;
    Workspace known = world.subset({}, {});

    // Adds whatever is in sensor range to the known set; true if anything new.
    const auto sense_and_learn = [&](const Vec3& pos, double t) {
        const SensedObstacles seen = sense(world, pos, scenario.sensor_radius, t);
        bool fresh = false;
        for (auto id : seen.static_ids) {
            if (std::find(known_static.begin(), known_static.end(), id) == known_static.end()) {
                known_static.push_back(id);
                fresh = true;
            }
        }
        for (auto id : seen.dynamic_ids) {
            if (std::find(known_dynamic.begin(), known_dynamic.end(), id) == known_dynamic.end()) {
                known_dynamic.push_back(id);
                fresh = true;
            }
        }
        if (fresh) {
            std::sort(known_static.begin(), known_static.end());
            std::sort(known_dynamic.begin(), known_dynamic.end());
            known = inflate(world.subset(known_static, known_dynamic), options.clearance);
        }
        return fresh;
    };

    SimTrace trace;
    double t = 0.0;
    Vec3 pos = scenario.start;
    trace.samples.push_back({t, pos, TraceEvent::Start, false});

    const auto finish = [&](SimOutcome outcome, TraceEvent event) {
        trace.outcome = outcome;
        trace.samples.back().event = event;
        return trace;
    };

    std::size_t replans = 0;
    std::vector<Vec3> remaining;
    const auto replan = [&](std::uint64_t plan_seed, std::vector<std::vector<double>> warm) {
        PlanRequest request;
        request.workspace = &known;
        request.start = pos;
        request.goal = scenario.goal;
        request.num_waypoints = scenario.num_waypoints;
        request.robot_speed = speed;
        request.t0 = t;
        request.warm_start = std::move(warm);
        PlanResult plan = plan_route(request, algo, cost, plan_seed);
        remaining = plan.route.points;
        trace.plans.push_back(std::move(plan.route));
    };

    sense_and_learn(pos, t);
    if (goal_blocked(known, scenario.goal)) {
        return finish(SimOutcome::Unreachable, TraceEvent::Unreachable);
    }
    replan(seed, {});

    while (true) {
        if (distance(pos, scenario.goal) <= scenario.goal_tolerance) {
            return finish(SimOutcome::GoalReached, TraceEvent::GoalReached);
        }
        if (t >= options.max_sim_time) {
            return finish(SimOutcome::Timeout, TraceEvent::Timeout);
        }

        std::optional<ReplanTrigger> trigger;
        if (sense_and_learn(pos, t)) {
            trigger = ReplanTrigger::NewObstacleSensed;
        } else if (lookahead_collides(polyline_prefix(remaining, lookahead), known, t, speed,
                                      cost.sample_resolution)) {
            trigger = ReplanTrigger::PredictedCollision;
        }
        if (trigger) {
            if (goal_blocked(known, scenario.goal)) {
                return finish(SimOutcome::Unreachable, TraceEvent::Unreachable);
            }
            const Route guide = resample(remaining, scenario.num_waypoints);
            replan(derive_seed(seed, ++replans), {encode(guide)});
            trace.replans.push_back({t, *trigger});
            trace.samples.back().event = *trigger == ReplanTrigger::NewObstacleSensed
                                             ? TraceEvent::ReplanNewObstacle
                                             : TraceEvent::ReplanPredictedCollision;
        }

        // Advance one control step along the route, logging each vertex passed.
        double budget = step_length;
        bool hit = false;
        std::size_t next = 1;
        while (budget > 0.0 && next < remaining.size()) {
            const Vec3 from = pos;
            const double seg = distance(pos, remaining[next]);
            const double move = std::min(seg, budget);
            const Vec3 to = seg > 0.0 ? pos + (move / seg) * (remaining[next] - pos) : remaining[next];
            const double t_from = t;
            const double t_to = t + move / speed;
            for (int k = 1; k <= kContactSubsteps && !hit; ++k) {
                const double u = static_cast<double>(k) / kContactSubsteps;
                hit = point_in_collision(world, from + u * (to - from), t_from + u * (t_to - t_from));
            }
            budget -= move;
            pos = to;
            t = t_to;
            if (move == seg) {
                ++next;
            }
            if (move > 0.0 && (budget > 0.0 || hit)) {
                trace.samples.push_back({t, pos, TraceEvent::Move, hit});
            }
            if (hit) {
                break;
            }
        }
        remaining.erase(remaining.begin(), remaining.begin() + static_cast<std::ptrdiff_t>(next - 1));
        remaining.front() = pos;
        if (hit) {
            return finish(SimOutcome::Collision, TraceEvent::Collision);
        }
        if (trace.samples.back().t != t) {
            trace.samples.push_back({t, pos, TraceEvent::Move, false});
        }
    }
}

}  // namespace swarmroute
