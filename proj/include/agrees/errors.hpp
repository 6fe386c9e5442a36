#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace agrees {

/// Base class of every error raised by the library. Input errors map to CLI
/// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected)
      : Error("syntax error at position " + std::to_string(position) +
              ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

#define AGREES_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  };

AGREES_DEFINE_ERROR(UnknownVariable)
AGREES_DEFINE_ERROR(EmptyIdeal)
AGREES_DEFINE_ERROR(EmptyInput)
AGREES_DEFINE_ERROR(RingMismatch)
AGREES_DEFINE_ERROR(NotZeroDimensional)
AGREES_DEFINE_ERROR(ZeroIdeal)
AGREES_DEFINE_ERROR(ZeroDivisorIdeal)
AGREES_DEFINE_ERROR(NotContained)
AGREES_DEFINE_ERROR(NotStable)
AGREES_DEFINE_ERROR(NoReductionFound)
AGREES_DEFINE_ERROR(EliminationBudgetExceeded)
AGREES_DEFINE_ERROR(BadParameters)
AGREES_DEFINE_ERROR(BadFieldConfig)
AGREES_DEFINE_ERROR(UnknownCheckId)
AGREES_DEFINE_ERROR(InvariantViolation)

#undef AGREES_DEFINE_ERROR

}  // namespace agrees
