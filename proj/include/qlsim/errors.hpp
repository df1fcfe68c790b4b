#pragma once

#include <stdexcept>

namespace qlsim {

// Invalid parameters or violated preconditions. CLI maps these to exit 2.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Structurally valid input outside the modeled regime (e.g. photon-rich
// clusters with u > r).
struct UnsupportedRegimeError : DomainError {
  using DomainError::DomainError;
};

// Malformed or contradictory run configuration. CLI maps to exit 2.
struct ConfigError : DomainError {
  using DomainError::DomainError;
};

// Numerical failures during a computation. CLI maps to exit 4.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A ladder coupling vanished inside the chain, so the three-term recursion
// cannot advance. Callers fall back to the matrix solver.
struct DegenerateChainError : NumericError {
  using NumericError::NumericError;
};

// The closed-form coefficient ratio was evaluated at a pole.
struct SingularRatioError : NumericError {
  using NumericError::NumericError;
};

// Fock-space truncation too small for the requested excitation block.
struct TruncationError : NumericError {
  using NumericError::NumericError;
};

// A state projection produced (numerically) zero norm.
struct DegenerateStateError : NumericError {
  using NumericError::NumericError;
};

// Filesystem failures. CLI maps to exit 3.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qlsim
