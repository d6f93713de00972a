#ifndef FREL_ERRORS_HPP
#define FREL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace frel {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: entries outside [0,1], ragged matrices, dimension
/// mismatches, bad documents, violated preconditions.
class InvalidInput : public Error {
public:
  explicit InvalidInput(const std::string& what) : Error(what) {}
};

/// No equation of the system is solvable on its own, so no consistent
/// subsystem exists at all.
class NoSolvableEquation : public Error {
public:
  explicit NoSolvableEquation(const std::string& what) : Error(what) {}
};

/// Operation is only defined for a subset of the t-norms (subsystem
/// enumeration works for min only).
class UnsupportedTNorm : public Error {
public:
  explicit UnsupportedTNorm(const std::string& what) : Error(what) {}
};

/// An internal cross-check failed. Signals a numerical-tolerance problem;
/// never expected on valid input.
class InternalCheckFailure : public Error {
public:
  explicit InternalCheckFailure(const std::string& what) : Error(what) {}
};

}  // namespace frel

#endif  // FREL_ERRORS_HPP
