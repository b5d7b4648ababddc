#pragma once

#include <stdexcept>
#include <string>

namespace isoriemann {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (negative density, nonpositive kappa, gamma <= 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A state is not reachable on the requested wave branch, or a proposed
/// jump violates the Rankine-Hugoniot / Lax conditions.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

/// Riemann data do not belong to the wave regime an operation requires.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// Iterative solver failure or non-finite values.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Invalid experiment, grid or scheme configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace isoriemann
