#pragma once

#include <stdexcept>
#include <string>

namespace dwave {

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Invalid grid, profile or experiment configuration.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Field in the wrong representation for the requested operation.
struct StateError : std::logic_error {
    using std::logic_error::logic_error;
};

// Fit window outside the resolved range, or too few samples.
struct WindowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation at or past the pole of the blow-up lower bound.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Support or consistency failure while building a table.
struct ConstructionError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace dwave
