#pragma once

#include <stdexcept>
#include <string>

namespace toriccap {

enum class ErrorCode {
  kInvalidDomain,
  kDegenerateDomain,
  kInvalidArgument,
  kUnsupportedFan,
  kUnsupportedDomain,
  kNotMovable,
  kResourceExhausted,
  kParse,
  kVerification,
};

const char* error_code_name(ErrorCode code);

// All library failures are reported through this exception; callers switch on
// code() rather than on the message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toriccap
