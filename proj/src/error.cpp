#include "ordpigeon/error.hpp"

namespace ordpigeon {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Underflow: return "Underflow";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::EmptyInstance: return "EmptyInstance";
    case ErrorKind::UnrepresentableInput: return "UnrepresentableInput";
    case ErrorKind::PowerOfOmegaInput: return "PowerOfOmegaInput";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::OutOfScope: return "OutOfScope";
    case ErrorKind::NotBelowThreshold: return "NotBelowThreshold";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

}  // namespace ordpigeon
