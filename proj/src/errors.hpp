#pragma once

#include <stdexcept>
#include <string>

namespace orthomon {

// Typed failure reasons. Everything a caller can mishandle maps onto one of
// these; the C API translates them 1:1 into status codes.
enum class ErrorCode {
  Domain,         // parameter outside its declared domain (e.g. nu = 0)
  Parse,          // malformed word text
  Shape,          // quadruple matches no reduced-word shape
  Bound,          // quadruple violates a parameter bound (m<=mu / n<=nu)
  NonIdempotent,  // idempotent-only operation applied to a non-idempotent
  Precondition,   // lemma/operation parameter precondition violated
  Length,         // word longer than the congruence table bound
  Overflow,       // exponent would exceed the 2^32 implementation cap
  Undecided,      // cap too small to decide membership
  Io,             // cache file unreadable/corrupt
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace orthomon
