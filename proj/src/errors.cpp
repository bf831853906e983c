#include "errors.hpp"

namespace skv {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedOrder: return "unsupported-order";
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::AmbientMismatch: return "ambient-mismatch";
    case ErrorCode::Degree: return "degree";
    case ErrorCode::Parameter: return "parameter";
    case ErrorCode::DegenerateElement: return "degenerate-element";
    case ErrorCode::NonUniquePoint: return "non-unique-point";
    case ErrorCode::NoPoint: return "no-point";
    case ErrorCode::OffCurve: return "off-curve";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::NotASubrep: return "not-a-subrep";
    case ErrorCode::RepresentationInvalid: return "representation-invalid";
    case ErrorCode::SamplingExhausted: return "sampling-exhausted";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Config: return "config";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

}  // namespace skv
