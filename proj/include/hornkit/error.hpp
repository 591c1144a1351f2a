#pragma once

#include <stdexcept>
#include <string>

namespace hornkit {

enum class ErrorCode {
  duplicate_label,
  empty_declaration,
  unknown_label,
  missing_arrow,
  malformed_input,
  universe_mismatch,
  element_out_of_range,
  bound_exceeded,
  not_acyclic,
  verification_failed,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::duplicate_label: return "duplicate label";
    case ErrorCode::empty_declaration: return "empty universe declaration";
    case ErrorCode::unknown_label: return "unknown label";
    case ErrorCode::missing_arrow: return "missing arrow";
    case ErrorCode::malformed_input: return "malformed input";
    case ErrorCode::universe_mismatch: return "universe mismatch";
    case ErrorCode::element_out_of_range: return "element out of range";
    case ErrorCode::bound_exceeded: return "bound exceeded";
    case ErrorCode::not_acyclic: return "not acyclic";
    case ErrorCode::verification_failed: return "verification failed";
  }
  return "error";
}

// All domain failures raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hornkit
