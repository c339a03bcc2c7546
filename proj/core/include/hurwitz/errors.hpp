#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

enum class ErrorCode {
  SyntaxError,      // malformed DSL/JSON input
  InvalidDiagram,   // structurally bad Coxeter matrix
  InvalidArgument,  // out-of-range index, bad permutation, violated precondition
  NotAReflection,
  ProductMismatch,
  ParityError,
  LengthMismatch,
  NotConnected,
  CapExceeded,
  DivisionByZero,
  InternalError,    // broken invariant; signals a bug, never bad input
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message, std::string location = {});

  ErrorCode code() const { return code_; }
  const std::string& location() const { return location_; }

private:
  ErrorCode code_;
  std::string location_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message,
                       const std::string& location = {});
[[noreturn]] void internal_error(const std::string& message);

// Invariant check that survives NDEBUG builds.
inline void require_internal(bool ok, const char* message) {
  if (!ok) internal_error(message);
}

}  // namespace hurwitz
