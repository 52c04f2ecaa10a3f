#pragma once

#include <stdexcept>
#include <string>

namespace serre {

/// Base class of every error raised by the engine.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different ring descriptors.
class DescriptorMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// The requested computation route is not available for this input.
class UnsupportedRoute : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// A graded route was given an inhomogeneous presentation.
class GradedInputError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

}  // namespace serre
