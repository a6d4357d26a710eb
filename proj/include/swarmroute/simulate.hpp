#pragma once

// Online sense / plan / avoid loop for a single point robot.
//
// Each control step the robot senses obstacles within sensor_radius, which
// then stay known for the rest of the run. It replans from its current
// position when it senses something new, or when the next stretch of its route
// (the lookahead) touches a known obstacle, with static obstacles as fixed
// geometry and moving ones at their predicted positions. Otherwise it
// advances robot_speed * control_step along the current route.
// Collision checks happen before each move.

#include <cstdint>
#include <string_view>
#include <vector>

#include "swarmroute/planner.hpp"

namespace swarmroute {

enum class TraceEvent {
    Start,
    Move,
    ReplanNewObstacle,
    ReplanPredictedCollision,
    GoalReached,
    Collision,
    Timeout,
    Unreachable,
};

enum class ReplanTrigger { NewObstacleSensed, PredictedCollision };

enum class SimOutcome { GoalReached, Timeout, Unreachable, Collision };

std::string_view trace_event_name(TraceEvent event);
std::string_view outcome_name(SimOutcome outcome);

struct TraceSample {
    double t = 0.0;
    Vec3 position;
    TraceEvent event = TraceEvent::Move;
    bool collided = false;
};

struct ReplanEvent {
    double t = 0.0;
    ReplanTrigger trigger = ReplanTrigger::NewObstacleSensed;
};

struct SimTrace {
    std::vector<TraceSample> samples;
    std::vector<ReplanEvent> replans;
    /// Every route planned during the run; the first is the initial plan.
    std::vector<Route> plans;
    SimOutcome outcome = SimOutcome::Timeout;

    bool collided() const;
};

struct SimOptions {
    double max_sim_time = 600.0;
    /// Lookahead distance = lookahead_factor * control_step * robot_speed.
    double lookahead_factor = 3.0;
    /// Known obstacles are grown by this much (m) when planning and when
    /// predicting collisions.
    double clearance = 0.0;
};

/// Throws InvalidScenario if the scenario is invalid or the start touches an
/// obstacle; running out of time is reported through the outcome.
SimTrace simulate_dynamic(const Scenario& scenario, const AlgoParams& algo, const CostParams& cost,
                          std::uint64_t seed, const SimOptions& options = {});

/// Copy of the workspace with every obstacle grown by `margin`.
Workspace inflate(const Workspace& workspace, double margin);

}  // namespace swarmroute
