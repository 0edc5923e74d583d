#pragma once

#include <stdexcept>
#include <string>

namespace torcov {

// Exit codes used by the command line front end.
enum class ExitCode : int { ok = 0, usage = 2, fit = 3, mismatch = 4, budget = 5 };

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
  virtual ExitCode code() const { return ExitCode::usage; }
};

struct PreconditionError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct FitError : Error {
  using Error::Error;
  ExitCode code() const override { return ExitCode::fit; }
};

// Not enough coefficients (or points) to pin down the unknowns.
struct UnderdeterminedError : FitError {
  using FitError::FitError;
};

// The overdetermined system is inconsistent; `witness` is the first
// equation that fails.
struct NoSolutionError : FitError {
  NoSolutionError(const std::string& what, long witness)
      : FitError(what), witness(witness) {}
  long witness;
};

struct MismatchError : Error {
  using Error::Error;
  ExitCode code() const override { return ExitCode::mismatch; }
};

struct BudgetError : Error {
  using Error::Error;
  ExitCode code() const override { return ExitCode::budget; }
};

}  // namespace torcov
