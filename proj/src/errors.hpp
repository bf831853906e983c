#pragma once

#include <stdexcept>
#include <string>

namespace skv {

enum class ErrorCode {
  UnsupportedOrder,
  DivisionByZero,
  AmbientMismatch,
  Degree,
  Parameter,
  DegenerateElement,
  NonUniquePoint,
  NoPoint,
  OffCurve,
  Precondition,
  NotASubrep,
  RepresentationInvalid,
  SamplingExhausted,
  Parse,
  Config,
  Io,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace skv
