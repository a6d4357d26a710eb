#include "swarmroute/pso.hpp"

#include <algorithm>
#include <cmath>

#include "swarmroute/errors.hpp"

namespace swarmroute {

ParticleSwarm::ParticleSwarm(Objective objective, SearchBounds bounds, PsoParams params, std::uint64_t seed,
                             const std::vector<std::vector<double>>& initial_members)
    : objective_(std::move(objective)), bounds_(std::move(bounds)), params_(params), rng_(seed) {
    detail::check_dimensions(bounds_, params_.population, params_.max_iterations);
    if (!std::isfinite(params_.inertia) || !std::isfinite(params_.cognitive) || !std::isfinite(params_.social)) {
        throw InvalidArgument("PSO coefficients must be finite");
    }
    const std::size_t n = params_.population;
    const std::size_t m = bounds_.dim();
    state_.max_iterations = params_.max_iterations;
    state_.positions = detail::initial_population(n, bounds_, rng_, initial_members);
    state_.velocities = Population(n, m);
    state_.personal_best_positions = state_.positions;
    state_.personal_best_fitness.assign(n, 0.0);
    fitness_.assign(n, 0.0);

    for (std::size_t i = 0; i < n; ++i) {
        fitness_[i] = detail::evaluate(objective_, state_.positions.row(i), i, 0);
    }
    evaluations_ += n;
    state_.personal_best_fitness = fitness_;
    const std::size_t best = detail::argmin(fitness_);
    auto row = state_.positions.row(best);
    state_.global_best_position.assign(row.begin(), row.end());
    state_.global_best_fitness = fitness_[best];
}

void ParticleSwarm::step() {
    if (done()) {
        throw InvalidState("ParticleSwarm::step: all iterations already run");
    }
    ++state_.iteration;
    auto& x = state_.positions;
    auto& v = state_.velocities;
    const auto& pbest = state_.personal_best_positions;
    const auto& gbest = state_.global_best_position;
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            const double u1 = rng_.uniform();
            const double u2 = rng_.uniform();
            const double vmax = bounds_.width(j);
            double vel = params_.inertia * v(i, j) + params_.cognitive * u1 * (pbest(i, j) - x(i, j)) +
                         params_.social * u2 * (gbest[j] - x(i, j));
            vel = std::clamp(vel, -vmax, vmax);
            v(i, j) = vel;
            x(i, j) += vel;
        }
        clamp_in_place(x.row(i), bounds_);
    }
    evaluate_and_update_bests();
}

void ParticleSwarm::evaluate_and_update_bests() {
    auto& x = state_.positions;
    for (std::size_t i = 0; i < x.rows(); ++i) {
        fitness_[i] = detail::evaluate(objective_, x.row(i), i, state_.iteration);
    }
    evaluations_ += x.rows();
    for (std::size_t i = 0; i < x.rows(); ++i) {
        if (fitness_[i] < state_.personal_best_fitness[i]) {
            state_.personal_best_fitness[i] = fitness_[i];
            auto src = x.row(i);
            std::copy(src.begin(), src.end(), state_.personal_best_positions.row(i).begin());
        }
    }
    const std::size_t best = detail::argmin(state_.personal_best_fitness);
    if (state_.personal_best_fitness[best] < state_.global_best_fitness) {
        auto row = state_.personal_best_positions.row(best);
        state_.global_best_position.assign(row.begin(), row.end());
        state_.global_best_fitness = state_.personal_best_fitness[best];
    }
}

RunResult pso_run(const Objective& objective, const SearchBounds& bounds, const PsoParams& params,
                  std::uint64_t seed, const RunOptions& options) {
    ParticleSwarm swarm(objective, bounds, params, seed, options.initial_members);
    RunResult result;
    result.history.seed = seed;
    result.history.initial_best_fitness = swarm.state().global_best_fitness;
    result.history.best_fitness_per_iteration.reserve(params.max_iterations);
    if (options.observer) {
        options.observer(0, swarm.state().positions);
    }
    while (!swarm.done()) {
        swarm.step();
        result.history.best_fitness_per_iteration.push_back(swarm.state().global_best_fitness);
        if (options.observer) {
            options.observer(swarm.state().iteration, swarm.state().positions);
        }
    }
    result.best_position = swarm.state().global_best_position;
    result.best_fitness = swarm.state().global_best_fitness;
    result.history.evaluations_used = swarm.evaluations();
    return result;
}

}  // namespace swarmroute
