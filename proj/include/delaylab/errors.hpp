// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace delaylab {

/// Category of a library failure. The numeric values are mirrored by the
/// status codes of the C API.
enum class ErrorCode : int {
  kIndex = 1,
  kDomain = 2,
  kDimension = 3,
  kAlignment = 4,
  kConfig = 5,
  kInsufficientWindow = 6,
  kNumeric = 7,
  kIo = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define DELAYLAB_DEFINE_ERROR(Name, Code)                                    \
  class Name : public Error {                                                \
   public:                                                                   \
    explicit Name(const std::string& what) : Error(ErrorCode::Code, what) {} \
  };

DELAYLAB_DEFINE_ERROR(IndexError, kIndex)
DELAYLAB_DEFINE_ERROR(DomainError, kDomain)
DELAYLAB_DEFINE_ERROR(DimensionError, kDimension)
DELAYLAB_DEFINE_ERROR(AlignmentError, kAlignment)
DELAYLAB_DEFINE_ERROR(ConfigError, kConfig)
DELAYLAB_DEFINE_ERROR(InsufficientWindowError, kInsufficientWindow)
DELAYLAB_DEFINE_ERROR(NumericError, kNumeric)
DELAYLAB_DEFINE_ERROR(IoError, kIo)

#undef DELAYLAB_DEFINE_ERROR

}  // namespace delaylab
