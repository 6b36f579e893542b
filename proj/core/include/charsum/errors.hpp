#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace charsum {

enum class ErrorKind {
  NotPrime,
  TooLarge,
  BadOrder,
  BadParameters,
  TrivialCharacter,
  EvenCharacter,
  NotCoprime,
  BadModulus,
  TooManyPoints,
  PrecisionBudgetExceeded,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Raised for every precondition violation in the library. The kind is
/// stable and maps onto CLI exit codes.
class Error : public std::invalid_argument {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::invalid_argument(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace charsum
