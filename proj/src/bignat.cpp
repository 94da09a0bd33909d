#include "transfinite/bignat.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace transfinite {

namespace {
constexpr uint64_t R = BigNat::kRadix;
constexpr size_t kKaratsubaThreshold = 32;
}  // namespace

BigNat::BigNat(uint64_t v) {
  while (v > 0) {
    limbs_.push_back(static_cast<uint32_t>(v % R));
    v /= R;
  }
}

void BigNat::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigNat BigNat::from_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty numeral");
  BigNat out;
  size_t first = s.size() % kRadixDigits;
  size_t pos = 0;
  auto take = [&](size_t n) {
    uint32_t chunk = 0;
    for (size_t i = 0; i < n; ++i, ++pos) {
      char c = s[pos];
      if (c < '0' || c > '9') throw std::invalid_argument("non-digit in numeral");
      chunk = chunk * 10 + static_cast<uint32_t>(c - '0');
    }
    return chunk;
  };
  std::vector<uint32_t> big_endian;
  if (first > 0) big_endian.push_back(take(first));
  while (pos < s.size()) big_endian.push_back(take(kRadixDigits));
  out.limbs_.assign(big_endian.rbegin(), big_endian.rend());
  out.trim();
  return out;
}

BigNat BigNat::pow10(uint64_t k) {
  BigNat out;
  out.limbs_.assign(static_cast<size_t>(k / kRadixDigits), 0);
  uint32_t top = 1;
  for (uint64_t i = 0; i < k % kRadixDigits; ++i) top *= 10;
  out.limbs_.push_back(top);
  return out;
}

bool BigNat::fits_u64() const {
  if (limbs_.size() < 3) return true;
  if (limbs_.size() > 3) return false;
  // 2^64-1 = 18'446744073'709551615
  return limbs_[2] < 18 ||
         (limbs_[2] == 18 &&
          (limbs_[1] < 446744073 || (limbs_[1] == 446744073 && limbs_[0] <= 709551615)));
}

uint64_t BigNat::to_u64() const {
  uint64_t v = 0;
  for (size_t i = limbs_.size(); i-- > 0;) v = v * R + limbs_[i];
  return v;
}

long double BigNat::to_long_double() const {
  long double v = 0.0L;
  // Only the top few limbs matter for the mantissa; the rest set the scale.
  size_t n = limbs_.size();
  size_t top = n > 4 ? n - 4 : 0;
  for (size_t i = n; i-- > top;) v = v * static_cast<long double>(R) + limbs_[i];
  if (top > 0) v *= std::pow(static_cast<long double>(R), static_cast<long double>(top));
  return v;
}

size_t BigNat::digit_count() const {
  if (limbs_.empty()) return 1;
  uint32_t hi = limbs_.back();
  size_t d = 0;
  while (hi > 0) {
    ++d;
    hi /= 10;
  }
  return d + (limbs_.size() - 1) * kRadixDigits;
}

std::string BigNat::to_string() const {
  if (limbs_.empty()) return "0";
  std::string out = std::to_string(limbs_.back());
  char buf[16];
  for (size_t i = limbs_.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof buf, "%09u", limbs_[i]);
    out += buf;
  }
  return out;
}

BigNat& BigNat::operator+=(const BigNat& o) {
  if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
  uint32_t carry = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t sum = static_cast<uint64_t>(limbs_[i]) + carry +
                   (i < o.limbs_.size() ? o.limbs_[i] : 0);
    limbs_[i] = static_cast<uint32_t>(sum % R);
    carry = static_cast<uint32_t>(sum / R);
    if (carry == 0 && i >= o.limbs_.size()) break;
  }
  if (carry) limbs_.push_back(carry);
  return *this;
}

BigNat& BigNat::operator-=(const BigNat& o) {
  if (*this < o) throw std::domain_error("BigNat subtraction underflow");
  int64_t borrow = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    int64_t cur = static_cast<int64_t>(limbs_[i]) - borrow -
                  (i < o.limbs_.size() ? static_cast<int64_t>(o.limbs_[i]) : 0);
    if (cur < 0) {
      cur += static_cast<int64_t>(R);
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<uint32_t>(cur);
    if (borrow == 0 && i >= o.limbs_.size()) break;
  }
  trim();
  return *this;
}

std::strong_ordering BigNat::operator<=>(const BigNat& o) const {
  if (limbs_.size() != o.limbs_.size()) return limbs_.size() <=> o.limbs_.size();
  for (size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
  }
  return std::strong_ordering::equal;
}

BigNat BigNat::mul_schoolbook(const BigNat& a, const BigNat& b) {
  BigNat out;
  out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (size_t i = 0; i < a.limbs_.size(); ++i) {
    uint64_t carry = 0;
    uint64_t ai = a.limbs_[i];
    if (ai == 0) continue;
    for (size_t j = 0; j < b.limbs_.size(); ++j) {
      uint64_t cur = out.limbs_[i + j] + ai * b.limbs_[j] + carry;
      out.limbs_[i + j] = static_cast<uint32_t>(cur % R);
      carry = cur / R;
    }
    size_t k = i + b.limbs_.size();
    while (carry > 0) {
      uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = static_cast<uint32_t>(cur % R);
      carry = cur / R;
      ++k;
    }
  }
  out.trim();
  return out;
}

BigNat BigNat::shifted_limbs(size_t k) const {
  if (is_zero()) return {};
  BigNat out;
  out.limbs_.assign(k, 0);
  out.limbs_.insert(out.limbs_.end(), limbs_.begin(), limbs_.end());
  return out;
}

BigNat BigNat::low_limbs(size_t k) const {
  BigNat out;
  out.limbs_.assign(limbs_.begin(), limbs_.begin() + std::min(k, limbs_.size()));
  out.trim();
  return out;
}

BigNat BigNat::high_limbs(size_t k) const {
  BigNat out;
  if (limbs_.size() > k) out.limbs_.assign(limbs_.begin() + k, limbs_.end());
  return out;
}

BigNat BigNat::mul_karatsuba(const BigNat& a, const BigNat& b) {
  size_t n = std::max(a.limbs_.size(), b.limbs_.size());
  if (std::min(a.limbs_.size(), b.limbs_.size()) < kKaratsubaThreshold) {
    return mul_schoolbook(a, b);
  }
  size_t half = n / 2;
  BigNat a0 = a.low_limbs(half), a1 = a.high_limbs(half);
  BigNat b0 = b.low_limbs(half), b1 = b.high_limbs(half);
  BigNat z0 = mul_karatsuba(a0, b0);
  BigNat z2 = mul_karatsuba(a1, b1);
  BigNat z1 = mul_karatsuba(a0 + a1, b0 + b1);
  z1 -= z0;
  z1 -= z2;
  BigNat out = z2.shifted_limbs(2 * half);
  out += z1.shifted_limbs(half);
  out += z0;
  return out;
}

BigNat operator*(const BigNat& a, const BigNat& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return BigNat::mul_karatsuba(a, b);
}

std::pair<BigNat, BigNat> divmod(const BigNat& a, const BigNat& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a < b) return {BigNat{}, a};
  if (b.limbs_.size() == 1) {
    uint64_t d = b.limbs_[0];
    BigNat q;
    q.limbs_.assign(a.limbs_.size(), 0);
    uint64_t rem = 0;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
      uint64_t cur = rem * R + a.limbs_[i];
      q.limbs_[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    q.trim();
    return {std::move(q), BigNat(rem)};
  }

  // Knuth algorithm D in base 10^9.
  uint32_t norm = static_cast<uint32_t>(R / (static_cast<uint64_t>(b.limbs_.back()) + 1));
  BigNat u = a * BigNat(norm);
  BigNat v = b * BigNat(norm);
  size_t n = v.limbs_.size();
  size_t m = u.limbs_.size() - n;
  u.limbs_.push_back(0);

  BigNat q;
  q.limbs_.assign(m + 1, 0);
  for (size_t j = m + 1; j-- > 0;) {
    uint64_t top = static_cast<uint64_t>(u.limbs_[j + n]) * R + u.limbs_[j + n - 1];
    uint64_t qhat = top / v.limbs_.back();
    uint64_t rhat = top % v.limbs_.back();
    while (qhat >= R ||
           qhat * v.limbs_[n - 2] > rhat * R + u.limbs_[j + n - 2]) {
      --qhat;
      rhat += v.limbs_.back();
      if (rhat >= R) break;
    }
    // Multiply-subtract qhat*v from u at offset j.
    int64_t borrow = 0;
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * v.limbs_[i] + carry;
      carry = p / R;
      int64_t sub = static_cast<int64_t>(u.limbs_[i + j]) -
                    static_cast<int64_t>(p % R) - borrow;
      if (sub < 0) {
        sub += static_cast<int64_t>(R);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u.limbs_[i + j] = static_cast<uint32_t>(sub);
    }
    int64_t top_sub = static_cast<int64_t>(u.limbs_[j + n]) -
                      static_cast<int64_t>(carry) - borrow;
    if (top_sub < 0) {
      // qhat was one too large; add v back.
      --qhat;
      uint64_t add_carry = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t sum = static_cast<uint64_t>(u.limbs_[i + j]) + v.limbs_[i] + add_carry;
        u.limbs_[i + j] = static_cast<uint32_t>(sum % R);
        add_carry = sum / R;
      }
      top_sub += static_cast<int64_t>(add_carry);
    }
    u.limbs_[j + n] = static_cast<uint32_t>(top_sub);
    q.limbs_[j] = static_cast<uint32_t>(qhat);
  }
  q.trim();
  u.limbs_.resize(n);
  u.trim();
  // Undo normalization of the remainder.
  if (norm > 1) {
    uint64_t rem = 0;
    for (size_t i = u.limbs_.size(); i-- > 0;) {
      uint64_t cur = rem * R + u.limbs_[i];
      u.limbs_[i] = static_cast<uint32_t>(cur / norm);
      rem = cur % norm;
    }
    u.trim();
  }
  return {std::move(q), std::move(u)};
}

BigNat pow(const BigNat& base, const BigNat& exponent) {
  BigNat result(1);
  BigNat b = base;
  BigNat e = exponent;
  BigNat two(2);
  while (!e.is_zero()) {
    if (!e.is_even()) result = result * b;
    e = e / two;
    if (!e.is_zero()) b = b * b;
  }
  return result;
}

BigNat isqrt(const BigNat& n) {
  if (n.is_zero()) return {};
  if (n.fits_u64() && n.to_u64() < 4) return BigNat(1);
  // Initial guess: 10^(ceil(digits/2)) >= sqrt(n), then Newton descends.
  BigNat x = BigNat::pow10((n.digit_count() + 1) / 2);
  BigNat two(2);
  while (true) {
    BigNat y = (x + n / x) / two;
    if (y >= x) break;
    x = std::move(y);
  }
  assert(x * x <= n && n < (x + BigNat(1)) * (x + BigNat(1)));
  return x;
}

BigNat gcd(BigNat a, BigNat b) {
  while (!b.is_zero()) {
    BigNat r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace transfinite
