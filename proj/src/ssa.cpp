#include "swarmroute/ssa.hpp"

#include <cmath>
#include <string>

#include "swarmroute/errors.hpp"

namespace swarmroute {

double coefficient_r1(std::size_t n, std::size_t max_iterations) {
    if (max_iterations == 0) {
        throw InvalidArgument("coefficient_r1: N must be positive");
    }
    const double ratio = 4.0 * static_cast<double>(n) / static_cast<double>(max_iterations);
    return 2.0 * std::exp(-(ratio * ratio));
}

double leader_coordinate(double food, double lower, double upper, double r1, double r2, double r3,
                         double branch_threshold) {
    const double step = r1 * ((upper - lower) * r2 + lower);
    return r3 >= branch_threshold ? food + step : food - step;
}

std::vector<double> update_leader(std::span<const double> food, const SearchBounds& bounds, double r1,
                                  double branch_threshold, Rng& rng) {
    if (food.size() != bounds.dim()) {
        throw InvalidArgument("update_leader: food and bounds differ in dimension");
    }
    std::vector<double> leader(food.size());
    for (std::size_t j = 0; j < food.size(); ++j) {
        const double r2 = rng.uniform();
        const double r3 = rng.uniform();
        leader[j] = leader_coordinate(food[j], bounds.lower(j), bounds.upper(j), r1, r2, r3, branch_threshold);
    }
    return leader;
}

void update_followers(Population& positions, FollowerMode mode) {
    if (positions.rows() < 2) {
        throw InvalidState("update_followers: need a leader and at least one follower, have " +
                           std::to_string(positions.rows()) + " salp(s)");
    }
    for (std::size_t i = 1; i < positions.rows(); ++i) {
        for (std::size_t j = 0; j < positions.cols(); ++j) {
            const double anchor = mode == FollowerMode::OriginalSsa ? positions(i, j) : positions(0, j);
            positions(i, j) = 0.5 * (anchor + positions(i - 1, j));
        }
    }
}

SalpSwarm::SalpSwarm(Objective objective, SearchBounds bounds, SsaParams params, std::uint64_t seed,
                     const std::vector<std::vector<double>>& initial_members)
    : objective_(std::move(objective)), bounds_(std::move(bounds)), params_(params), rng_(seed) {
    detail::check_dimensions(bounds_, params_.population, params_.max_iterations);
    if (params_.population < 2) {
        throw InvalidArgument("SSA population must be at least 2");
    }
    if (!(params_.branch_threshold >= 0.0 && params_.branch_threshold <= 1.0)) {
        throw InvalidArgument("SSA branch_threshold must lie in [0, 1]");
    }
    state_.max_iterations = params_.max_iterations;
    state_.positions = detail::initial_population(params_.population, bounds_, rng_, initial_members);
    fitness_.assign(params_.population, 0.0);
    evaluate_and_update_food();
}

void SalpSwarm::evaluate_and_update_food() {
    auto& pos = state_.positions;
    for (std::size_t i = 0; i < pos.rows(); ++i) {
        fitness_[i] = detail::evaluate(objective_, pos.row(i), i, state_.iteration);
    }
    evaluations_ += pos.rows();
    const std::size_t best = detail::argmin(fitness_);
    // Best-so-far: the food source only moves on strict improvement.
    if (state_.food_position.empty() || fitness_[best] < state_.food_fitness) {
        auto row = pos.row(best);
        state_.food_position.assign(row.begin(), row.end());
        state_.food_fitness = fitness_[best];
    }
}

void SalpSwarm::step() {
    if (done()) {
        throw InvalidState("SalpSwarm::step: all iterations already run");
    }
    ++state_.iteration;
    const double r1 = coefficient_r1(state_.iteration, state_.max_iterations);

    auto& pos = state_.positions;
    const auto leader = update_leader(state_.food_position, bounds_, r1, params_.branch_threshold, rng_);
    std::copy(leader.begin(), leader.end(), pos.row(0).begin());
    update_followers(pos, params_.follower_mode);
    for (std::size_t i = 0; i < pos.rows(); ++i) {
        clamp_in_place(pos.row(i), bounds_);
    }
    evaluate_and_update_food();
}

RunResult ssa_run(const Objective& objective, const SearchBounds& bounds, const SsaParams& params,
                  std::uint64_t seed, const RunOptions& options) {
    SalpSwarm swarm(objective, bounds, params, seed, options.initial_members);
    RunResult result;
    result.history.seed = seed;
    result.history.initial_best_fitness = swarm.state().food_fitness;
    result.history.best_fitness_per_iteration.reserve(params.max_iterations);
    if (options.observer) {
        options.observer(0, swarm.state().positions);
    }
    while (!swarm.done()) {
        swarm.step();
        result.history.best_fitness_per_iteration.push_back(swarm.state().food_fitness);
        if (options.observer) {
            options.observer(swarm.state().iteration, swarm.state().positions);
        }
    }
    result.best_position = swarm.state().food_position;
    result.best_fitness = swarm.state().food_fitness;
    result.history.evaluations_used = swarm.evaluations();
    return result;
}

}  // namespace swarmroute
