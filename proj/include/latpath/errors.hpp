#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latpath {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance text format violations; `line` is 1-based.
struct ParseError : Error {
  ParseError(const std::string& what, size_t line_)
      : Error("parse error at line " + std::to_string(line_) + ": " + what),
        line(line_) {}
  size_t line;
};

// A constructed object violates a stated invariant.
struct ValidationError : Error {
  using Error::Error;
};

struct InfeasibleError : Error {
  using Error::Error;
};

struct NotAVertexError : Error {
  using Error::Error;
};

struct RankDeficientError : Error {
  using Error::Error;
};

struct DependentBasisError : Error {
  using Error::Error;
};

struct TooLargeError : Error {
  using Error::Error;
};

struct ZeroCbarError : Error {
  using Error::Error;
};

struct CertificateUnavailableError : Error {
  using Error::Error;
};

// H \ E came out empty. This cannot happen for a correct engine, so it is a
// loud internal-invariant failure, not a recoverable state.
struct EmptyHError : Error {
  using Error::Error;
};

struct InvalidPathError : Error {
  InvalidPathError(const std::string& what, size_t step_)
      : Error("invalid path at step " + std::to_string(step_) + ": " + what),
        step(step_) {}
  size_t step;
};

// Internal invariant violations (engine bugs), distinct from bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace latpath
