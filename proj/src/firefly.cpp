#include "swarmroute/firefly.hpp"

#include <cmath>

#include "swarmroute/errors.hpp"

namespace swarmroute {

FireflySwarm::FireflySwarm(Objective objective, SearchBounds bounds, FaParams params, std::uint64_t seed,
                           const std::vector<std::vector<double>>& initial_members)
    : objective_(std::move(objective)), bounds_(std::move(bounds)), params_(params), rng_(seed) {
    detail::check_dimensions(bounds_, params_.population, params_.max_iterations);
    const bool ok = std::isfinite(params_.alpha) && params_.alpha >= 0.0 && std::isfinite(params_.alpha_decay) &&
                    params_.alpha_decay >= 0.0 && std::isfinite(params_.beta0) && params_.beta0 > 0.0 &&
                    std::isfinite(params_.gamma) && params_.gamma > 0.0;
    if (!ok) {
        throw InvalidArgument("FA requires alpha >= 0, alpha_decay >= 0, beta0 > 0, gamma > 0");
    }
    positions_ = detail::initial_population(params_.population, bounds_, rng_, initial_members);
    fitness_.assign(params_.population, 0.0);
    evaluate_and_update_best();
}

void FireflySwarm::evaluate_and_update_best() {
    for (std::size_t i = 0; i < positions_.rows(); ++i) {
        fitness_[i] = detail::evaluate(objective_, positions_.row(i), i, iteration_);
    }
    evaluations_ += positions_.rows();
    const std::size_t best = detail::argmin(fitness_);
    if (best_position_.empty() || fitness_[best] < best_fitness_) {
        auto row = positions_.row(best);
        best_position_.assign(row.begin(), row.end());
        best_fitness_ = fitness_[best];
    }
}

void FireflySwarm::step() {
    if (done()) {
        throw InvalidState("FireflySwarm::step: all iterations already run");
    }
    ++iteration_;
    const std::size_t m = bounds_.dim();
    const double decay = std::pow(params_.alpha_decay, static_cast<double>(iteration_ - 1));
    std::vector<double> alpha(m);
    std::vector<double> inv_width(m);
    for (std::size_t j = 0; j < m; ++j) {
        alpha[j] = params_.alpha * bounds_.width(j) * decay;
        inv_width[j] = bounds_.width(j) > 0.0 ? 1.0 / bounds_.width(j) : 0.0;
    }

    // Brightness is frozen at the start of the iteration; positions are not.
    const std::vector<double> brightness = fitness_;
    auto& x = positions_;
    for (std::size_t i = 0; i < x.rows(); ++i) {
        bool moved = false;
        for (std::size_t k = 0; k < x.rows(); ++k) {
            if (!(brightness[k] < brightness[i])) {
                continue;
            }
            double dist2 = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                if (inv_width[j] == 0.0) {
                    continue;
                }
                const double d = (x(k, j) - x(i, j)) * inv_width[j];
                dist2 += d * d;
            }
            const double beta = params_.beta0 * std::exp(-params_.gamma * dist2);
            for (std::size_t j = 0; j < m; ++j) {
                const double u = rng_.uniform();
                x(i, j) += beta * (x(k, j) - x(i, j)) + alpha[j] * (u - 0.5);
            }
            moved = true;
        }
        if (!moved) {
            for (std::size_t j = 0; j < m; ++j) {
                const double u = rng_.uniform();
                x(i, j) += alpha[j] * (u - 0.5);
            }
        }
        clamp_in_place(x.row(i), bounds_);
    }
    evaluate_and_update_best();
}

RunResult fa_run(const Objective& objective, const SearchBounds& bounds, const FaParams& params,
                 std::uint64_t seed, const RunOptions& options) {
    FireflySwarm swarm(objective, bounds, params, seed, options.initial_members);
    RunResult result;
    result.history.seed = seed;
    result.history.initial_best_fitness = swarm.best_fitness();
    result.history.best_fitness_per_iteration.reserve(params.max_iterations);
    if (options.observer) {
        options.observer(0, swarm.positions());
    }
    while (!swarm.done()) {
        swarm.step();
        result.history.best_fitness_per_iteration.push_back(swarm.best_fitness());
        if (options.observer) {
            options.observer(swarm.iteration(), swarm.positions());
        }
    }
    result.best_position = swarm.best_position();
    result.best_fitness = swarm.best_fitness();
    result.history.evaluations_used = swarm.evaluations();
    return result;
}

}  // namespace swarmroute
