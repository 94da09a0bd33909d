#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace transfinite {

/// Base class for all domain-level failures. The CLI maps these to exit
/// code 1; parse errors get their own class and exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : Error {
  using Error::Error;
};
struct OutOfDomain : Error {
  using Error::Error;
};
struct LeftDomain : Error {
  using Error::Error;
};
struct NotALimit : Error {
  using Error::Error;
};
struct Epsilon0InArithmetic : Error {
  using Error::Error;
};
struct InvalidOp : Error {
  using Error::Error;
};
struct InvalidLevel : Error {
  using Error::Error;
};
struct NotEstimable : Error {
  using Error::Error;
};
struct MalformedMatrix : Error {
  using Error::Error;
};
struct MalformedTable : Error {
  using Error::Error;
};
struct LengthMismatch : Error {
  using Error::Error;
};
struct TooLarge : Error {
  using Error::Error;
};
struct InvalidParams : Error {
  using Error::Error;
};
struct PrecisionExhausted : Error {
  using Error::Error;
};

/// Expression syntax error with a 1-based character position and a
/// description of what was expected there.
struct ParseError : Error {
  ParseError(size_t pos, std::string expected_set)
      : Error("parse error at position " + std::to_string(pos) + ": expected " + expected_set),
        position(pos),
        expected(std::move(expected_set)) {}
  size_t position;
  std::string expected;
};

}  // namespace transfinite
