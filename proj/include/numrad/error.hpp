#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace numrad {

enum class ErrorCode {
  NotSquare,
  NotHermitian,
  NoConvergence,
  IndexOutOfRange,
  PartitionMismatch,
  DimensionMismatch,
  ZeroRadius,
  NotReal,
  UnequalBlocks,
  NotUpperTriangular,
  NotBlockShift,
  InvalidArgument,
  ParseError,
};

std::string_view toString(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// command-line front end can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(toString(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace numrad
