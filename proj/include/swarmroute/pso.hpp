#pragma once

// Global-best particle swarm with constriction-style constants.
//
// Draw order: init positions (member-major, as SSA); velocities start at zero.
// Per iteration: particle i ascending, dimension j ascending, u1 then u2.
// The global best is refreshed once per iteration after all particles moved.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "swarmroute/rng.hpp"
#include "swarmroute/swarm.hpp"

namespace swarmroute {

struct PsoParams {
    std::size_t population = 20;
    std::size_t max_iterations = 25;
    double inertia = 0.729;
    double cognitive = 1.49445;
    double social = 1.49445;
};

struct PsoState {
    Population positions;
    Population velocities;
    Population personal_best_positions;
    std::vector<double> personal_best_fitness;
    std::vector<double> global_best_position;
    double global_best_fitness = 0.0;
    std::size_t iteration = 0;
    std::size_t max_iterations = 0;
};

class ParticleSwarm {
public:
    ParticleSwarm(Objective objective, SearchBounds bounds, PsoParams params, std::uint64_t seed,
                  const std::vector<std::vector<double>>& initial_members = {});

    void step();

    bool done() const noexcept { return state_.iteration >= state_.max_iterations; }
    const PsoState& state() const noexcept { return state_; }
    std::uint64_t evaluations() const noexcept { return evaluations_; }

    /// Fitness of each particle's current position, as last evaluated.
    const std::vector<double>& current_fitness() const noexcept { return fitness_; }

private:
    void evaluate_and_update_bests();

    Objective objective_;
    SearchBounds bounds_;
    PsoParams params_;
    Rng rng_;
    PsoState state_;
    std::vector<double> fitness_;
    std::uint64_t evaluations_ = 0;
};

RunResult pso_run(const Objective& objective, const SearchBounds& bounds, const PsoParams& params,
                  std::uint64_t seed, const RunOptions& options = {});

}  // namespace swarmroute
