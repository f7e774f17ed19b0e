#pragma once

#include <stdexcept>
#include <string>

namespace slicestab {

// Bad input: reported by the CLI with exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonMinusculeUnsupported : ValidationError {
  using ValidationError::ValidationError;
};
struct NotA1 : ValidationError {
  using ValidationError::ValidationError;
};
struct InvalidSpec : ValidationError {
  using ValidationError::ValidationError;
};
struct WitnessOnWall : ValidationError {
  using ValidationError::ValidationError;
};

// A computation produced something its own consistency checks reject.
// These indicate a defect, never bad input: CLI exit code 3.
struct ComputationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonDivisible : ComputationError {
  using ComputationError::ComputationError;
};
struct ExactDivisionFailure : ComputationError {
  using ComputationError::ComputationError;
};
struct PathInconsistency : ComputationError {
  using ComputationError::ComputationError;
};
struct NonPolynomialEntry : ComputationError {
  using ComputationError::ComputationError;
};

}  // namespace slicestab
