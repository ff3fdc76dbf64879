#pragma once

#include <stdexcept>
#include <string>

namespace ptd {

// Argument lies outside the domain on which a function is defined.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Invalid model or series parameters (kappa <= 1, c a non-positive integer, ...).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Evaluation point too close to a removable singularity of a formula that
// divides by sin^2(2 alpha x).
struct StabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A quantity needed as a divisor vanished (C_n = 0, annihilated state, ...).
struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite integrand value or failed iteration.
struct EvaluationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ptd
