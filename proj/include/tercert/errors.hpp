#pragma once

#include <stdexcept>
#include <string>

namespace tercert {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

/// Malformed or inconsistent user input (duplicates, zero lambdas, bad degrees...).
class InputError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "InputError"; }
};

/// Scalars from two different fields were combined.
class FieldContextError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "FieldContextError"; }
};

class ShapeError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "ShapeError"; }
};

/// A decomposition whose terms cancel to the zero form.
class DegenerateDecompositionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "DegenerateDecompositionError"; }
};

/// A subset enumeration would exceed the configured work cap.
class ComplexityGuardError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "ComplexityGuardError"; }
};

}  // namespace tercert
