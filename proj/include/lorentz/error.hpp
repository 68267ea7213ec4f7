#pragma once

#include <stdexcept>
#include <string>

namespace lorentz {

// Malformed or out-of-contract input (bad lengths, negative values, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but violates a documented precondition of an
// operation (e.g. a non-Lorentzian polynomial handed to the gauge).
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

// A configured resource cap (dimension, cone budget, face budget) was hit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations disagreed, or an invariant that the theory
// guarantees was observed to fail. Never silently resolved.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lorentz
