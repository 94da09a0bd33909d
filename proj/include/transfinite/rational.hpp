#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "transfinite/bignat.hpp"

namespace transfinite {

/// Signed arbitrary-precision integer: sign-and-magnitude over BigNat.
/// Zero is always non-negative.
class BigInt {
 public:
  BigInt() = default;
  BigInt(int64_t v);
  BigInt(BigNat magnitude, bool negative = false);
  static BigInt from_decimal(std::string_view s);  // optional leading '-'

  bool is_zero() const { return mag_.is_zero(); }
  bool is_negative() const { return negative_; }
  const BigNat& magnitude() const { return mag_; }

  std::string to_string() const;
  int64_t to_i64() const;  // requires the value to fit

  BigInt operator-() const;
  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  /// Floor division (rounds toward -inf) with remainder in [0, |b|).
  friend std::pair<BigInt, BigNat> floor_divmod(const BigInt& a, const BigNat& b);

  std::strong_ordering operator<=>(const BigInt& o) const;
  bool operator==(const BigInt& o) const;

 private:
  BigNat mag_;
  bool negative_ = false;
};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() : num_(), den_(1) {}
  Rational(BigInt num, BigNat den);  // reduces; throws on zero denominator
  Rational(int64_t num, uint64_t den = 1);
  /// Parses "p/q", "p", or a decimal like "0.125".
  static Rational parse(std::string_view s);

  const BigInt& num() const { return num_; }
  const BigNat& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_negative() const { return num_.is_negative(); }

  std::string to_string() const;  // "p/q" or "p" when q == 1
  long double to_long_double() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  std::strong_ordering operator<=>(const Rational& o) const;
  bool operator==(const Rational& o) const;

 private:
  BigInt num_;
  BigNat den_;
};

}  // namespace transfinite
