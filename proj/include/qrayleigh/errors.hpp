// errors.hpp: Exception hierarchy shared by all qrayleigh modules

#pragma once

#include <stdexcept>
#include <string>

namespace qrayleigh {

// Shapes that do not fit together (non-square input, mismatched subsystem sizes).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Arguments outside an operation's preconditions.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A matrix that fails the density-matrix or Hermiticity invariants.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Coherence parameter outside the positivity bound of its projectile family.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// lambda <= -1/(2 alpha): the discordant bath has no thermal steady state.
struct NonThermalSteadyStateError : std::domain_error {
    using std::domain_error::domain_error;
};

// Temperature requested for a state with a vanishing population.
struct UndefinedTemperatureError : std::domain_error {
    using std::domain_error::domain_error;
};

// Two-bath configuration with mismatched collision parameters.
struct UnsupportedConfigurationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Optimizer or integrator failure. Carries the best value found, if any.
struct NumericalError : std::runtime_error {
    NumericalError(const std::string& what, double best = 0.0)
        : std::runtime_error(what), best_value(best) {}
    double best_value;
};

} // namespace qrayleigh
