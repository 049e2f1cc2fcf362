#pragma once

#include <stdexcept>
#include <string>

namespace resilmax {

// Base class for all library errors; the CLI catches this at its boundary
// and turns it into a nonzero exit code.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An element id outside the ground set of the objective/matroid at hand.
struct InvalidElementError : Error {
  using Error::Error;
};

// A precondition violation (x already in S, nu outside [0,1], ...).
struct InvalidArgumentError : Error {
  using Error::Error;
};

// Every singleton value is zero, so the curvature ratio is undefined.
struct DegenerateObjectiveError : Error {
  using Error::Error;
};

// Exhaustive checkers only run for ground sets of at most 16 elements.
struct InstanceTooLargeError : Error {
  using Error::Error;
};

// An enumeration would exceed its subset/base budget.
struct BudgetExceededError : Error {
  using Error::Error;
};

// exchange_bijection was handed a set that is not a base of the matroid.
struct NotABaseError : Error {
  using Error::Error;
};

// The proof-chain verifier only accepts myopic solutions.
struct WrongAlgorithmError : Error {
  using Error::Error;
};

// Malformed instance file.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace resilmax
