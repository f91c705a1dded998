#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace relpoly {

// Failure categories. The CLI maps each category to a distinct exit code, so
// every throw site picks the category by who is at fault: the input text
// (Parse), the input's mathematical shape (Classification), or the library
// itself (Internal, raised when a cross-check that must hold fails).
enum class ErrorKind {
  Parse,
  Classification,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Stable machine-readable identifier, e.g. "unknown-letter".
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

[[noreturn]] inline void fail(ErrorKind kind, const char* code,
                              const std::string& message) {
  throw Error(kind, code, message);
}

}  // namespace relpoly
