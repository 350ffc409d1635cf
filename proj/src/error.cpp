#include "pcrfuse/error.hpp"

namespace pcrfuse {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidFrame: return "InvalidFrame";
    case ErrorKind::NonUnitSum: return "NonUnitSum";
    case ErrorKind::NegativeMass: return "NegativeMass";
    case ErrorKind::NonFiniteMass: return "NonFiniteMass";
    case ErrorKind::EmptyFocalSet: return "EmptyFocalSet";
    case ErrorKind::OutOfFrame: return "OutOfFrame";
    case ErrorKind::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorKind::FrameMismatch: return "FrameMismatch";
    case ErrorKind::EmptySourceList: return "EmptySourceList";
    case ErrorKind::TooFewSources: return "TooFewSources";
    case ErrorKind::TooManySources: return "TooManySources";
    case ErrorKind::TotalConflict: return "TotalConflict";
    case ErrorKind::ZeroWeight: return "ZeroWeight";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace pcrfuse
