#pragma once

#include <stdexcept>
#include <string>

namespace fiberlevel {

// Base of every domain error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// The requested Weierstrass model has vanishing discriminant.
class SingularCurveError : public Error {
 public:
  using Error::Error;
};

// A division that must be exact left a nonzero remainder.
class InexactDivisionError : public Error {
 public:
  using Error::Error;
};

// A level-k factor matched zero or several level-(k-1) parents.
class LinkageError : public Error {
 public:
  using Error::Error;
};

// Child degrees of some vertex do not sum to the covering-map degree.
class DegreeSumViolation : public Error {
 public:
  using Error::Error;
};

// An operation that needs a certified adic exponent was run without one.
class UncertifiedError : public Error {
 public:
  using Error::Error;
};

// A precondition on the subgroup (e.g. trivial Z) does not hold.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

// The operation is only defined for odd primes.
class OddPrimeRequired : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (rational literals, JSON payloads, spec files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fiberlevel
