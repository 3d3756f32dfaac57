#pragma once

#include <stdexcept>
#include <string>

namespace ronchi {

/// Input outside the mathematical domain of a function (non-finite, negative df, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Caller supplied an inconsistent or out-of-range argument.
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Iterative numerical method failed to reach the requested tolerance.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A waveform could not yield a pulse height (too short, no level separation).
struct MeasurementError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ronchi
