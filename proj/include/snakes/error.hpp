#pragma once

#include <stdexcept>
#include <string>

namespace snakes {

enum class ErrorCode {
  Bounds,
  Domain,
  Parse,
  Shape,
  Step,
  Config,
  Input,
  Refusal,
  Io,
  Load,
  Divergence,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Bounds: return "bounds";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Shape: return "shape";
    case ErrorCode::Step: return "step";
    case ErrorCode::Config: return "config";
    case ErrorCode::Input: return "input";
    case ErrorCode::Refusal: return "refusal";
    case ErrorCode::Io: return "io";
    case ErrorCode::Load: return "load";
    case ErrorCode::Divergence: return "divergence";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace snakes
