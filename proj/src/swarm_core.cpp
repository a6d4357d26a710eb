#include "swarmroute/swarm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swarmroute/errors.hpp"
#include "swarmroute/rng.hpp"

namespace swarmroute {

NumericFailure::NumericFailure(std::size_t member, std::size_t iteration, double value)
    : std::runtime_error("objective returned non-finite value " + std::to_string(value) + " for member " +
                         std::to_string(member) + " at iteration " + std::to_string(iteration)),
      member_(member),
      iteration_(iteration) {}

SearchBounds::SearchBounds(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty()) {
        throw InvalidArgument("search bounds need at least one dimension");
    }
    if (lower_.size() != upper_.size()) {
        throw InvalidArgument("lower and upper bounds differ in length");
    }
    for (std::size_t j = 0; j < lower_.size(); ++j) {
        if (!std::isfinite(lower_[j]) || !std::isfinite(upper_[j]) || lower_[j] > upper_[j]) {
            throw InvalidArgument("invalid bounds in dimension " + std::to_string(j));
        }
    }
}

SearchBounds SearchBounds::uniform(std::size_t dim, double lower, double upper) {
    return SearchBounds(std::vector<double>(dim, lower), std::vector<double>(dim, upper));
}

bool SearchBounds::contains(std::span<const double> x) const {
    if (x.size() != dim()) {
        return false;
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!(x[j] >= lower_[j] && x[j] <= upper_[j])) {
            return false;
        }
    }
    return true;
}

void clamp_in_place(std::span<double> position, const SearchBounds& bounds) {
    if (position.size() != bounds.dim()) {
        throw InvalidArgument("position and bounds differ in dimension");
    }
    for (std::size_t j = 0; j < position.size(); ++j) {
        position[j] = std::clamp(position[j], bounds.lower(j), bounds.upper(j));
    }
}

std::vector<double> clamp_to_bounds(std::span<const double> position, const SearchBounds& bounds) {
    std::vector<double> out(position.begin(), position.end());
    clamp_in_place(out, bounds);
    return out;
}

namespace detail {

Population initial_population(std::size_t members, const SearchBounds& bounds, Rng& rng,
                              const std::vector<std::vector<double>>& seeded) {
    Population pop(members, bounds.dim());
    for (std::size_t i = 0; i < members; ++i) {
        for (std::size_t j = 0; j < bounds.dim(); ++j) {
            pop(i, j) = rng.uniform(bounds.lower(j), bounds.upper(j));
        }
    }
    const std::size_t count = std::min(members, seeded.size());
    for (std::size_t i = 0; i < count; ++i) {
        if (seeded[i].size() != bounds.dim()) {
            throw InvalidArgument("seeded member " + std::to_string(i) + " has wrong dimension");
        }
        auto row = pop.row(i);
        std::copy(seeded[i].begin(), seeded[i].end(), row.begin());
        clamp_in_place(row, bounds);
    }
    return pop;
}

double evaluate(const Objective& objective, std::span<const double> x, std::size_t member,
                std::size_t iteration) {
    const double value = objective(x);
    if (!std::isfinite(value)) {
        throw NumericFailure(member, iteration, value);
    }
    return value;
}

std::size_t argmin(std::span<const double> values) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] < values[best]) {
            best = i;
        }
    }
    return best;
}

void check_dimensions(const SearchBounds& bounds, std::size_t population, std::size_t iterations) {
    if (bounds.dim() == 0) {
        throw InvalidArgument("empty search space");
    }
    if (population == 0) {
        throw InvalidArgument("population must be positive");
    }
    if (iterations == 0) {
        throw InvalidArgument("max_iterations must be positive");
    }
}

}  // namespace detail

}  // namespace swarmroute
