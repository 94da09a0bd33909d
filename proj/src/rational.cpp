#include "transfinite/rational.hpp"

#include <stdexcept>
#include <utility>

namespace transfinite {

BigInt::BigInt(int64_t v) {
  if (v < 0) {
    negative_ = true;
    mag_ = BigNat(static_cast<uint64_t>(-(v + 1)) + 1);
  } else {
    mag_ = BigNat(static_cast<uint64_t>(v));
  }
}

BigInt::BigInt(BigNat magnitude, bool negative)
    : mag_(std::move(magnitude)), negative_(negative && !mag_.is_zero()) {}

BigInt BigInt::from_decimal(std::string_view s) {
  bool neg = !s.empty() && s[0] == '-';
  if (neg) s.remove_prefix(1);
  return BigInt(BigNat::from_decimal(s), neg);
}

std::string BigInt::to_string() const {
  return (negative_ ? "-" : "") + mag_.to_string();
}

int64_t BigInt::to_i64() const {
  uint64_t m = mag_.to_u64();
  if (negative_) return -static_cast<int64_t>(m);
  return static_cast<int64_t>(m);
}

BigInt BigInt::operator-() const { return BigInt(mag_, !negative_); }

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.negative_ == b.negative_) return BigInt(a.mag_ + b.mag_, a.negative_);
  if (a.mag_ >= b.mag_) return BigInt(a.mag_ - b.mag_, a.negative_);
  return BigInt(b.mag_ - a.mag_, b.negative_);
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  return BigInt(a.mag_ * b.mag_, a.negative_ != b.negative_);
}

std::pair<BigInt, BigNat> floor_divmod(const BigInt& a, const BigNat& b) {
  auto [q, r] = divmod(a.magnitude(), b);
  if (!a.is_negative() || r.is_zero()) {
    return {BigInt(std::move(q), a.is_negative()), std::move(r)};
  }
  // Negative with nonzero remainder: floor rounds one further down.
  return {BigInt(q + BigNat(1), true), b - r};
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
  if (negative_ != o.negative_) {
    return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  auto mc = mag_ <=> o.mag_;
  return negative_ ? (0 <=> mc) : mc;
}

bool BigInt::operator==(const BigInt& o) const {
  return negative_ == o.negative_ && mag_ == o.mag_;
}

Rational::Rational(BigInt num, BigNat den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  BigNat g = gcd(num_.magnitude(), den_);
  if (!g.is_one() && !g.is_zero()) {
    num_ = BigInt(num_.magnitude() / g, num_.is_negative());
    den_ = den_ / g;
  }
  if (num_.is_zero()) den_ = BigNat(1);
}

Rational::Rational(int64_t num, uint64_t den) : Rational(BigInt(num), BigNat(den)) {}

Rational Rational::parse(std::string_view s) {
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    return Rational(BigInt::from_decimal(s.substr(0, slash)),
                    BigNat::from_decimal(s.substr(slash + 1)));
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view frac = s.substr(dot + 1);
    std::string digits = std::string(s.substr(0, dot)) + std::string(frac);
    bool neg = !digits.empty() && digits[0] == '-';
    if (neg) digits.erase(0, 1);
    if (digits.empty()) throw std::invalid_argument("empty numeral");
    return Rational(BigInt(BigNat::from_decimal(digits), neg),
                    BigNat::pow10(frac.size()));
  }
  return Rational(BigInt::from_decimal(s), BigNat(1));
}

std::string Rational::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

long double Rational::to_long_double() const {
  long double v = num_.magnitude().to_long_double() / den_.to_long_double();
  return num_.is_negative() ? -v : v;
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational operator+(const Rational& a, const Rational& b) {
  BigInt num = a.num_ * BigInt(b.den_) + b.num_ * BigInt(a.den_);
  return Rational(std::move(num), a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  BigInt num = a.num_ * BigInt(b.den_);
  BigNat den = a.den_ * b.num_.magnitude();
  return Rational(BigInt(num.magnitude(), num.is_negative() != b.num_.is_negative()),
                  std::move(den));
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  BigInt lhs = num_ * BigInt(o.den_);
  BigInt rhs = o.num_ * BigInt(den_);
  return lhs <=> rhs;
}

bool Rational::operator==(const Rational& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

}  // namespace transfinite
