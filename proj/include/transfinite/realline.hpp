#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "transfinite/rational.hpp"

namespace transfinite {

/// p/q as integer part plus a decimal tail that ends in a minimal
/// repeating block; terminating expansions carry period "0".
struct RepeatingDecimal {
  BigNat integer_part;
  std::string preperiod;
  std::string period;  // non-empty, minimal
  std::string to_string() const;
  /// Reconstructs the exact fraction from the three parts.
  Rational value() const;
};

/// Long division with remainder-cycle detection. q must be >= 1.
RepeatingDecimal decimal_expansion(const BigNat& p, const BigNat& q);

/// First n_digits decimal digits of sum_{n>=a} b / c^(n!), rendered in
/// base 10 from exact rational partial sums. Throws InvalidParams when
/// b >= c.
std::string liouville_digits(uint64_t a, uint64_t b, uint64_t c, uint64_t n_digits);

/// Decimal digits of the concatenation start, start+1, ..., truncated to
/// n_digits.
std::string champernowne_digits(const BigNat& start, uint64_t n_digits);

/// Finite continued fraction [a0; a1, a2, ...] with a_i >= 1 for i >= 1.
/// Canonical form: the final quotient is never 1 unless the list has
/// length one.
struct ContinuedFraction {
  std::vector<BigInt> quotients;
  std::string to_string() const;
  static ContinuedFraction parse(std::string_view s);  // "[a0;a1,a2,...]"
};

/// Euclidean-algorithm partial quotients of p/q (q >= 1).
ContinuedFraction cf_of_rational(const BigInt& p, const BigNat& q);

/// Exact value by the backward recurrence.
Rational cf_eval(const ContinuedFraction& cf);

/// First k convergents p_i/q_i from the forward recurrence.
std::vector<Rational> cf_convergents(const ContinuedFraction& cf, size_t k);

/// First k partial quotients of a float by iterated floor/reciprocal.
/// Reliable to depth ~15; throws PrecisionExhausted past the point where
/// rounding noise would leak into the quotients.
ContinuedFraction cf_approx_irrational(double value, size_t k);

/// Interval cover of the first n+1 deduplicated rationals in [0,1]
/// (pairing order), interval k of half-width epsilon/2^(k+2).
struct CoverResult {
  Rational nominal_total;  // epsilon * (1 - 2^-(n+1)), the series bound
  Rational union_measure;  // exact measure of the union clipped to [0,1]
  std::vector<Rational> centers;
};

CoverResult cover_measure(const Rational& epsilon, uint64_t n_rationals);

}  // namespace transfinite
