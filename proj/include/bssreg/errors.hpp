#pragma once

#include <stdexcept>
#include <string>

namespace bssreg {

/// Base class of every typed failure thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct NumericalError : Error {
  using Error::Error;
};
struct ConvergenceError : Error {
  using Error::Error;
};
struct SingularMatrixError : Error {
  using Error::Error;
};
struct DegenerateUpdateError : Error {
  using Error::Error;
};
struct RankError : Error {
  using Error::Error;
};
struct BasisMismatchError : Error {
  using Error::Error;
};
struct BarrierViolationError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};
struct SchemaError : Error {
  using Error::Error;
};

/// Thrown when an exact integer result does not fit in 64 bits.
/// Carries the natural logarithm of the true value.
struct OverflowError : Error {
  OverflowError(const std::string& msg, double log_value_)
      : Error(msg), log_value(log_value_) {}
  double log_value;
};

/// Thrown when the barrier sampler hits its iteration cap.
/// Carries the state reached so callers can diagnose the stall.
struct IterationCapError : Error {
  IterationCapError(const std::string& msg, long iterations_, double gap_,
                    double gap_target_)
      : Error(msg),
        iterations(iterations_),
        gap(gap_),
        gap_target(gap_target_) {}
  long iterations;
  double gap;
  double gap_target;
};

}  // namespace bssreg
