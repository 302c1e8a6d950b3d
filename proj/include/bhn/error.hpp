#pragma once

#include <stdexcept>
#include <string>

namespace bhn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violated a documented precondition (degree mismatch, bad
/// cycle, r1 + r2 >= d, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A growth profile cannot be evaluated at the requested index.
class ProfileError : public Error {
 public:
  using Error::Error;
};

/// The greedy radius search exhausted its window without finding an
/// admissible value.
class NoAdmissibleResidue : public Error {
 public:
  using Error::Error;
};

/// d(n) < 16n, so the radius construction has no guarantee of success.
class DivisorTooSmall : public Error {
 public:
  using Error::Error;
};

/// A certified side condition of the sequences failed after construction.
class BoundViolation : public Error {
 public:
  using Error::Error;
};

/// A sequence or coordinate was requested beyond what has been built.
class NotMaterialized : public Error {
 public:
  using Error::Error;
};

class SpreadAssertionFailed : public Error {
 public:
  using Error::Error;
};

class WitnessCheckFailed : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed run configuration or command line.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace bhn
