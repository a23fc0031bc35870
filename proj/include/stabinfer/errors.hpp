#pragma once

#include <stdexcept>
#include <string>

namespace stabinfer {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonFiniteError : Error {
  using Error::Error;
};

struct ShapeError : Error {
  using Error::Error;
};

struct NoConvergenceError : Error {
  using Error::Error;
};

/// An eigenvalue sits on (or within tolerance of) the stability boundary,
/// so a stable/unstable classification would be unreliable.
struct BoundaryEigenvalueError : Error {
  using Error::Error;
};

struct SingularSylvesterError : Error {
  using Error::Error;
};

struct DomainMismatchError : Error {
  using Error::Error;
};

struct InfeasibleInitialConditionError : Error {
  using Error::Error;
};

struct UnstablePerpError : Error {
  using Error::Error;
};

struct QueryFailureError : Error {
  using Error::Error;
};

struct UncontrollableUnstableModeError : Error {
  using Error::Error;
};

struct NotLeftInverseError : Error {
  using Error::Error;
};

struct IllConditionedError : Error {
  using Error::Error;
};

/// File or stream does not follow one of the documented text formats.
struct FormatError : Error {
  using Error::Error;
};

}  // namespace stabinfer
