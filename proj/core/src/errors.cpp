#include "hurwitz/errors.hpp"

namespace hurwitz {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidDiagram: return "InvalidDiagram";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotAReflection: return "NotAReflection";
    case ErrorCode::ProductMismatch: return "ProductMismatch";
    case ErrorCode::ParityError: return "ParityError";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message, std::string location)
    : std::runtime_error(message), code_(code), location_(std::move(location)) {}

void fail(ErrorCode code, const std::string& message, const std::string& location) {
  throw Error(code, message, location);
}

void internal_error(const std::string& message) {
  throw Error(ErrorCode::InternalError, message);
}

}  // namespace hurwitz
