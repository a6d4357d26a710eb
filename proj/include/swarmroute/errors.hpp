#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swarmroute {

// Precondition violated by a caller-supplied value.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Object is in a state the requested operation cannot act on.
class InvalidState : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The objective returned NaN or infinity.
class NumericFailure : public std::runtime_error {
public:
    NumericFailure(std::size_t member, std::size_t iteration, double value);

    std::size_t member() const noexcept { return member_; }
    std::size_t iteration() const noexcept { return iteration_; }

private:
    std::size_t member_;
    std::size_t iteration_;
};

// Scenario content breaks a world-model invariant (start inside an obstacle, ...).
class InvalidScenario : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The goal cannot be reached at all, e.g. it lies inside a static obstacle.
class Unreachable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace swarmroute
