#pragma once

#include <stdexcept>
#include <string>

namespace fuzzalg {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (-inf) + (+inf) has no value; callers must treat it as a reported error.
class UndefinedSum : public Error {
 public:
  using Error::Error;
};

// A function declared monotone was observed to violate its direction.
class MonotonicityViolation : public Error {
 public:
  using Error::Error;
};

// uniform_grid(n) requires n >= 2.
class InvalidGrid : public Error {
 public:
  using Error::Error;
};

// Archimedean classification is only meaningful for continuous operators.
class NotContinuous : public Error {
 public:
  using Error::Error;
};

// U(1,0) landed strictly between 0 and 1; the operator has no boundary class.
class NotLocallyClassifiable : public Error {
 public:
  using Error::Error;
};

// A structural guarantee of an operator definition was broken at runtime.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

// A construction-time requirement failed; the message names the constraint.
class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Building a vague operation from a crisp one requires a regular relation.
class RegularityRequired : public Error {
 public:
  using Error::Error;
};

// No element attains membership 1 for some pair of a vague operation.
class MissingProduct : public Error {
 public:
  using Error::Error;
};

// Two distinct elements are related at level 1, or a pair has two products.
class SeparationViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzzalg
