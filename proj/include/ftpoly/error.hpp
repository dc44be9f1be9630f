#pragma once

#include <stdexcept>
#include <string>

namespace ftpoly {

enum class ErrorCode {
  Empty,
  OddCount,
  OutOfRange,
  NotPositive,
  DimensionMismatch,
  DimensionCap,
  ScaleCap,
  NotAPartition,
  NotHalfMax,
  IndexInSubset,
  Disconnected,
  Parse,
  Io,
};

const char* error_code_name(ErrorCode code) noexcept;

/// The single exception type thrown by the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ftpoly
