#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "transfinite/bignat.hpp"

namespace transfinite {

/// a[n]b: n=1 addition, n=2 multiplication, n=3 exponentiation, n>=4
/// iterates the previous operation right-associatively.
struct HyperCall {
  uint64_t base;
  uint64_t op_index;
  uint64_t height;
  std::string to_string() const;
};

/// g_k of the Graham sequence: g_1 = 3[6]3, g_k = 3[g_{k-1}+2]3. Kept
/// symbolic; never evaluated.
struct GrahamTerm {
  uint64_t level;  // >= 1
  std::string to_string() const;
  std::string describe() const;
};

struct HyperResult {
  struct Exact {
    BigNat value;
  };
  struct DigitEstimate {
    long double digits;  // decimal digit count of the value
  };
  struct Symbolic {
    HyperCall call;
  };
  std::variant<Exact, DigitEstimate, Symbolic> outcome;

  bool is_exact() const { return std::holds_alternative<Exact>(outcome); }
  bool is_estimate() const { return std::holds_alternative<DigitEstimate>(outcome); }
  bool is_symbolic() const { return std::holds_alternative<Symbolic>(outcome); }
  const BigNat& exact() const { return std::get<Exact>(outcome).value; }
  long double estimate_digits() const { return std::get<DigitEstimate>(outcome).digits; }
  const HyperCall& symbolic() const { return std::get<Symbolic>(outcome).call; }
};

constexpr uint64_t kDefaultGuardDigits = 10'000'000;

/// Evaluates a[n]b. Exact when the result has at most guard_digits
/// decimal digits, a digit-count estimate when the count still fits a
/// float, symbolic otherwise. Throws InvalidOp for n = 0.
HyperResult hyper(uint64_t a, uint64_t n, uint64_t b,
                  uint64_t guard_digits = kDefaultGuardDigits);

/// Decimal digit count of a[n]b: exact for guard-admissible values,
/// estimated through the log chain otherwise. Throws NotEstimable when
/// even the digit count overflows floating point.
long double digit_estimate(uint64_t a, uint64_t n, uint64_t b);

/// Symbolic Graham-sequence term; throws InvalidLevel for k = 0.
GrahamTerm graham(uint64_t k);

}  // namespace transfinite
