#pragma once

#include <stdexcept>
#include <string>

namespace polyharm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched dimensions, orders or list sizes between arguments.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain where an operation is defined
/// (evaluation point too close to the sphere, index out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Violated mathematical precondition, e.g. a non-harmonic Almansi component.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace polyharm
