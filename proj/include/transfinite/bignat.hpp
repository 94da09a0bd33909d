#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace transfinite {

/// Arbitrary-precision natural number.
///
/// Limbs are base 10^9, least significant first; zero is the empty limb
/// vector. The decimal base keeps digit counting and printing linear,
/// which the hyperoperation digit guard relies on.
class BigNat {
 public:
  static constexpr uint32_t kRadix = 1'000'000'000u;
  static constexpr int kRadixDigits = 9;

  BigNat() = default;
  BigNat(uint64_t v);

  static BigNat from_decimal(std::string_view s);  // throws std::invalid_argument
  static BigNat pow10(uint64_t k);

  bool is_zero() const { return limbs_.empty(); }
  bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }
  bool is_even() const { return limbs_.empty() || (limbs_[0] % 2 == 0); }

  bool fits_u64() const;
  uint64_t to_u64() const;  // requires fits_u64()
  /// Nearest long double; saturates to +inf when far beyond range.
  long double to_long_double() const;

  /// Number of decimal digits; zero counts as one digit.
  size_t digit_count() const;
  std::string to_string() const;

  BigNat& operator+=(const BigNat& o);
  BigNat& operator-=(const BigNat& o);  // requires *this >= o
  friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
  friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }
  friend BigNat operator*(const BigNat& a, const BigNat& b);

  /// Quotient and remainder; throws std::domain_error on division by zero.
  friend std::pair<BigNat, BigNat> divmod(const BigNat& a, const BigNat& b);
  friend BigNat operator/(const BigNat& a, const BigNat& b) { return divmod(a, b).first; }
  friend BigNat operator%(const BigNat& a, const BigNat& b) { return divmod(a, b).second; }

  std::strong_ordering operator<=>(const BigNat& o) const;
  bool operator==(const BigNat& o) const = default;

  friend BigNat pow(const BigNat& base, const BigNat& exponent);
  /// Floor square root, computed with integer Newton iteration only.
  friend BigNat isqrt(const BigNat& n);
  friend BigNat gcd(BigNat a, BigNat b);

  size_t limb_count() const { return limbs_.size(); }

 private:
  void trim();
  static BigNat mul_schoolbook(const BigNat& a, const BigNat& b);
  static BigNat mul_karatsuba(const BigNat& a, const BigNat& b);
  BigNat shifted_limbs(size_t k) const;  // *this * kRadix^k
  BigNat low_limbs(size_t k) const;
  BigNat high_limbs(size_t k) const;

  std::vector<uint32_t> limbs_;
};

}  // namespace transfinite
