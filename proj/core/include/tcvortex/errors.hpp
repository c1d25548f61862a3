#pragma once

#include <stdexcept>
#include <string>

namespace tcvortex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The integrator met a non-finite or non-physical state.
class IntegrationBlowup : public Error {
 public:
  IntegrationBlowup(const std::string& what, double last_valid_time)
      : Error(what), last_valid_time_(last_valid_time) {}

  double last_valid_time() const noexcept { return last_valid_time_; }

 private:
  double last_valid_time_;
};

/// The reduced (A, a) system has no positive equilibrium for the given constant.
class NoEquilibrium : public Error {
 public:
  using Error::Error;
};

/// A trajectory frequency is zero or coincides with the Coriolis parameter.
class ResonanceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The three-point window does not determine the trajectory parameters.
class DegenerateWindow : public Error {
 public:
  using Error::Error;
};

/// A geographic result falls outside the valid latitude range.
class OutOfPlaneError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line) : Error(what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace tcvortex
