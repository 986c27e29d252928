#pragma once

#include <stdexcept>
#include <string>

namespace cubictors {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition (malformed, out of range, off-curve).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Weierstrass data with vanishing discriminant.
class SingularCurve : public Error {
 public:
  using Error::Error;
};

/// Numeric reconstruction could not certify an answer within the precision cap.
/// Never to be read as "no solution".
class Undecided : public Error {
 public:
  using Error::Error;
};

/// A result that a cited theorem guarantees turned out false.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A family parameter lies in the excluded set (singular, reducible, pole).
class Excluded : public Error {
 public:
  using Error::Error;
};

}  // namespace cubictors
