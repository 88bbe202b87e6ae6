#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace coverlab {

// Broad classes map onto the tool's exit/status codes; `code` is the
// fine-grained tag tests and callers match on (e.g. "ParentMismatch").
enum class ErrorClass {
  invalid_input,   // malformed JSON, schema violation, bad operand
  bound_exceeded,  // enumeration guard tripped
  internal
};

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, std::string code, const std::string& what)
      : std::runtime_error(what), cls_(cls), code_(std::move(code)) {}

  ErrorClass error_class() const noexcept { return cls_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorClass cls_;
  std::string code_;
};

[[noreturn]] inline void fail_input(const std::string& code, const std::string& what) {
  throw Error(ErrorClass::invalid_input, code, what);
}

[[noreturn]] inline void fail_bound(const std::string& what) {
  throw Error(ErrorClass::bound_exceeded, "BoundExceeded", what);
}

[[noreturn]] inline void fail_internal(const std::string& what) {
  throw Error(ErrorClass::internal, "Internal", what);
}

}  // namespace coverlab
