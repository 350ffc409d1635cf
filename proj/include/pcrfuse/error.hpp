#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pcrfuse {

enum class ErrorKind {
  InvalidFrame,
  NonUnitSum,
  NegativeMass,
  NonFiniteMass,
  EmptyFocalSet,
  OutOfFrame,
  AlphaOutOfRange,
  FrameMismatch,
  EmptySourceList,
  TooFewSources,
  TooManySources,
  TotalConflict,
  ZeroWeight,
  InvalidArgument,
};

/// Stable identifier for an error kind, e.g. "NonUnitSum".
std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pcrfuse
