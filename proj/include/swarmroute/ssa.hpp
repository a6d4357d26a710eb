#pragma once

// Salp Swarm Algorithm.
//
// A chain of M salps: row 0 is the leader, which moves around the food source
// (best-so-far solution); every follower moves to the midpoint between itself
// and its predecessor. The leader's step size r1 = 2 exp(-(4n/N)^2) decays
// over the run, trading exploration for exploitation.
//
// Random draw order, fixed for reproducibility:
//   init:   member i = 0..M-1, dimension j = 0..m-1, one uniform each
//   leader: dimension j = 0..m-1, r2 then r3
// Followers consume no randomness.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "swarmroute/rng.hpp"
#include "swarmroute/swarm.hpp"

namespace swarmroute {

enum class FollowerMode {
    /// x_i <- (x_i + x_{i-1}) / 2, the original SSA chain rule.
    OriginalSsa,
    /// x_i <- (x_leader + x_{i-1}) / 2; follower 2 lands on the leader.
    PaperLiteral,
};

struct SsaParams {
    std::size_t population = 20;
    std::size_t max_iterations = 25;
    FollowerMode follower_mode = FollowerMode::OriginalSsa;
    /// Leader moves in the + direction when r3 >= branch_threshold.
    /// A threshold of 0 makes every step positive.
    double branch_threshold = 0.5;
};

struct SwarmState {
    Population positions;
    std::vector<double> food_position;
    double food_fitness = 0.0;
    std::size_t iteration = 0;
    std::size_t max_iterations = 0;
};

/// r1 = 2 exp(-(4n/N)^2). Throws InvalidArgument when N == 0.
double coefficient_r1(std::size_t n, std::size_t max_iterations);

/// One coordinate of the leader update given explicit draws r2, r3.
double leader_coordinate(double food, double lower, double upper, double r1, double r2, double r3,
                         double branch_threshold);

/// Leader position around `food`, drawing r2 then r3 for each dimension.
std::vector<double> update_leader(std::span<const double> food, const SearchBounds& bounds, double r1,
                                  double branch_threshold, Rng& rng);

/// Updates rows 1..M-1 in ascending order, each from its already-updated
/// predecessor. Row 0 must already hold the new leader.
/// Throws InvalidState when the population has fewer than two rows.
void update_followers(Population& positions, FollowerMode mode);

class SalpSwarm {
public:
    /// Initializes the population and evaluates it (iteration 0).
    SalpSwarm(Objective objective, SearchBounds bounds, SsaParams params, std::uint64_t seed,
              const std::vector<std::vector<double>>& initial_members = {});

    /// Runs one iteration: leader, followers, clamp, evaluate, update food.
    void step();

    bool done() const noexcept { return state_.iteration >= state_.max_iterations; }
    const SwarmState& state() const noexcept { return state_; }
    const SearchBounds& bounds() const noexcept { return bounds_; }
    std::uint64_t evaluations() const noexcept { return evaluations_; }

private:
    void evaluate_and_update_food();

    Objective objective_;
    SearchBounds bounds_;
    SsaParams params_;
    Rng rng_;
    SwarmState state_;
    std::vector<double> fitness_;
    std::uint64_t evaluations_ = 0;
};

RunResult ssa_run(const Objective& objective, const SearchBounds& bounds, const SsaParams& params,
                  std::uint64_t seed, const RunOptions& options = {});

}  // namespace swarmroute
