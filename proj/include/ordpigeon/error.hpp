#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordpigeon {

enum class ErrorKind {
  Underflow,
  ZeroInput,
  EmptyInstance,
  UnrepresentableInput,
  PowerOfOmegaInput,
  PreconditionViolated,
  OutOfScope,
  NotBelowThreshold,
  OutOfDomain,
  SyntaxError,
  TooLarge,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the expression parser; `position` is a 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::SyntaxError,
              what + " at position " + std::to_string(position)),
        position_(position),
        reason_(what) {}

  std::size_t position() const noexcept { return position_; }
  /// Message without the position suffix.
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t position_;
  std::string reason_;
};

}  // namespace ordpigeon
