#pragma once

// Shared vocabulary of the continuous optimizers: box bounds, the population
// matrix, objective/run-result types and the bound-amendment step.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace swarmroute {

class Rng;

/// Per-dimension box [lower[j], upper[j]].
///
/// lower[j] == upper[j] is accepted and pins that coordinate.
class SearchBounds {
public:
    SearchBounds(std::vector<double> lower, std::vector<double> upper);

    /// Same interval repeated over `dim` dimensions.
    static SearchBounds uniform(std::size_t dim, double lower, double upper);

    std::size_t dim() const noexcept { return lower_.size(); }
    const std::vector<double>& lower() const noexcept { return lower_; }
    const std::vector<double>& upper() const noexcept { return upper_; }
    double lower(std::size_t j) const { return lower_[j]; }
    double upper(std::size_t j) const { return upper_[j]; }
    double width(std::size_t j) const { return upper_[j] - lower_[j]; }

    bool contains(std::span<const double> x) const;

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// Row-major rows x cols matrix of positions; row i is population member i.
class Population {
public:
    Population() = default;
    Population(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Population&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Minimization objective. Must be pure: equal inputs give equal outputs.
using Objective = std::function<double(std::span<const double>)>;

struct RunHistory {
    /// Best-so-far fitness after each of the N iterations.
    std::vector<double> best_fitness_per_iteration;
    /// Best fitness of the initial population, before any update.
    double initial_best_fitness = 0.0;
    std::uint64_t evaluations_used = 0;
    std::uint64_t seed = 0;

    bool operator==(const RunHistory&) const = default;
};

struct RunResult {
    std::vector<double> best_position;
    double best_fitness = 0.0;
    RunHistory history;

    bool operator==(const RunResult&) const = default;
};

/// Called after initialization (iteration 0) and after every completed
/// iteration with the current population.
using IterationObserver = std::function<void(std::size_t iteration, const Population& positions)>;

struct RunOptions {
    /// Seeded members that replace the first rows of the random initial
    /// population (clamped into bounds). Used to warm-start replanning.
    std::vector<std::vector<double>> initial_members;
    IterationObserver observer;
};

/// Saturates each coordinate into [lower[j], upper[j]].
std::vector<double> clamp_to_bounds(std::span<const double> position, const SearchBounds& bounds);
void clamp_in_place(std::span<double> position, const SearchBounds& bounds);

namespace detail {

// Uniform random fill (row-major draw order), then overwrite leading rows
// with the supplied members.
Population initial_population(std::size_t members, const SearchBounds& bounds, Rng& rng,
                              const std::vector<std::vector<double>>& seeded);

// Evaluates the objective and throws NumericFailure on a non-finite value.
double evaluate(const Objective& objective, std::span<const double> x, std::size_t member,
                std::size_t iteration);

// Index of the smallest value; lowest index wins ties.
std::size_t argmin(std::span<const double> values);

void check_dimensions(const SearchBounds& bounds, std::size_t population, std::size_t iterations);

}  // namespace detail

}  // namespace swarmroute
