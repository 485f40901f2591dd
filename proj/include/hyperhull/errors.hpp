#pragma once

#include <stdexcept>
#include <string>

namespace hyperhull {

// Every failure raised by the library derives from Error.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arguments outside an operation's mathematical domain (negative square root,
// gcd(0, 0), non-integer lattice where integers are required, ...).
struct DomainError : Error {
  using Error::Error;
};

struct DivisionByZero : DomainError {
  using DomainError::DomainError;
};

// A fixed-width scalar could not represent a result.  Never raised by the
// arbitrary-precision instantiation.
struct Overflow : Error {
  using Error::Error;
};

struct DegenerateBasis : DomainError {
  using DomainError::DomainError;
};

// Caller broke a documented precondition (point outside H_n, point off the
// lattice, ...).
struct PreconditionError : Error {
  using Error::Error;
};

struct NotARationalHyperbola : DomainError {
  using DomainError::DomainError;
};

struct DegenerateConic : DomainError {
  using DomainError::DomainError;
};

struct BranchError : DomainError {
  using DomainError::DomainError;
};

// An internal consistency check failed; indicates a bug, not bad input.
struct InvariantViolation : Error {
  using Error::Error;
};

struct BoundViolation : Error {
  BoundViolation(const std::string& what, std::string n_value)
      : Error(what), n(std::move(n_value)) {}
  std::string n;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace hyperhull
