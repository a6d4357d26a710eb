#pragma once

// Firefly algorithm.
//
// Each iteration, firefly i moves toward every firefly k that was brighter
// (lower fitness) at the start of the iteration:
//   x_i += beta0 exp(-gamma r_ik^2) (x_k - x_i) + alpha_j (u - 0.5)
// A firefly with no brighter neighbour takes the random-walk term alone.
// r_ik is measured with each coordinate divided by its dimension's width, so
// gamma is independent of the problem's length scale; pinned (zero-width)
// dimensions do not contribute.
// alpha_j = alpha * (upper_j - lower_j) * alpha_decay^(n-1) at iteration n.
//
// Draw order: init as SSA; then i ascending, k ascending, one u per dimension
// per move.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "swarmroute/rng.hpp"
#include "swarmroute/swarm.hpp"

namespace swarmroute {

struct FaParams {
    std::size_t population = 20;
    std::size_t max_iterations = 25;
    /// Random-walk scale as a fraction of each dimension's width.
    double alpha = 0.2;
    double alpha_decay = 0.97;
    double beta0 = 1.0;
    double gamma = 1.0;
};

class FireflySwarm {
public:
    FireflySwarm(Objective objective, SearchBounds bounds, FaParams params, std::uint64_t seed,
                 const std::vector<std::vector<double>>& initial_members = {});

    void step();

    bool done() const noexcept { return iteration_ >= params_.max_iterations; }
    std::size_t iteration() const noexcept { return iteration_; }
    const Population& positions() const noexcept { return positions_; }
    const std::vector<double>& best_position() const noexcept { return best_position_; }
    double best_fitness() const noexcept { return best_fitness_; }
    std::uint64_t evaluations() const noexcept { return evaluations_; }

private:
    void evaluate_and_update_best();

    Objective objective_;
    SearchBounds bounds_;
    FaParams params_;
    Rng rng_;
    Population positions_;
    std::vector<double> fitness_;
    std::vector<double> best_position_;
    double best_fitness_ = 0.0;
    std::size_t iteration_ = 0;
    std::uint64_t evaluations_ = 0;
};

RunResult fa_run(const Objective& objective, const SearchBounds& bounds, const FaParams& params,
                 std::uint64_t seed, const RunOptions& options = {});

}  // namespace swarmroute
