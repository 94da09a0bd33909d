#include "transfinite/realline.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numeric>
#include <utility>

#include "transfinite/bijections.hpp"
#include "transfinite/errors.hpp"

namespace transfinite {

namespace {
const BigNat kTen(10);
}

std::string RepeatingDecimal::to_string() const {
  return integer_part.to_string() + "." + preperiod + "(" + period + ")";
}

Rational RepeatingDecimal::value() const {
  Rational out(BigInt(integer_part), BigNat(1));
  BigNat pre_scale = BigNat::pow10(preperiod.size());
  if (!preperiod.empty()) {
    out = out + Rational(BigInt(BigNat::from_decimal(preperiod)), pre_scale);
  }
  BigNat per = BigNat::from_decimal(period);
  if (!per.is_zero()) {
    // The repeating block is a geometric series scaled past the preperiod.
    BigNat per_den = (BigNat::pow10(period.size()) - BigNat(1)) * pre_scale;
    out = out + Rational(BigInt(per), per_den);
  }
  return out;
}

RepeatingDecimal decimal_expansion(const BigNat& p, const BigNat& q) {
  if (q.is_zero()) throw InvalidParams("decimal expansion requires q >= 1");
  RepeatingDecimal out;
  auto [ip, r0] = divmod(p, q);
  out.integer_part = std::move(ip);
  std::string digits;
  std::map<BigNat, size_t> seen;  // remainder -> digit position
  BigNat r = std::move(r0);
  while (!r.is_zero()) {
    auto it = seen.find(r);
    if (it != seen.end()) {
      out.preperiod = digits.substr(0, it->second);
      out.period = digits.substr(it->second);
      return out;
    }
    seen.emplace(r, digits.size());
    auto [d, next] = divmod(r * kTen, q);
    digits += d.is_zero() ? "0" : d.to_string();
    r = std::move(next);
  }
  out.preperiod = std::move(digits);
  out.period = "0";
  return out;
}

std::string liouville_digits(uint64_t a, uint64_t b, uint64_t c, uint64_t n_digits) {
  if (a < 1 || b < 1 || c < 2) throw InvalidParams("liouville requires a,b >= 1 and c >= 2");
  if (b >= c) throw InvalidParams("liouville requires b < c");
  if (n_digits == 0) return "";
  // Partial sum of b/c^(n!) over every term large enough to touch the
  // requested digits (with slack for carries from the tail).
  BigNat cutoff = BigNat::pow10(n_digits + 16) * BigNat(b);
  Rational sum(0);
  BigNat factorial(1);
  for (uint64_t n = 1;; ++n) {
    factorial = factorial * BigNat(n);
    if (!factorial.fits_u64()) break;
    BigNat den = pow(BigNat(c), factorial);
    if (den > cutoff) break;
    if (n >= a) sum = sum + Rational(BigInt(b), den);
  }
  BigNat scaled = (sum.num().magnitude() * BigNat::pow10(n_digits)) / sum.den();
  std::string s = scaled.to_string();
  if (s.size() < n_digits) s.insert(0, n_digits - s.size(), '0');
  return s;
}

std::string champernowne_digits(const BigNat& start, uint64_t n_digits) {
  std::string out;
  BigNat n = start;
  while (out.size() < n_digits) {
    out += n.to_string();
    n += BigNat(1);
  }
  out.resize(n_digits);
  return out;
}

std::string ContinuedFraction::to_string() const {
  std::string out = "[" + quotients.front().to_string();
  for (size_t i = 1; i < quotients.size(); ++i) {
    out += (i == 1 ? "; " : ", ") + quotients[i].to_string();
  }
  return out + "]";
}

ContinuedFraction ContinuedFraction::parse(std::string_view s) {
  std::string cleaned;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) cleaned.push_back(ch);
  }
  std::string_view v = cleaned;
  if (v.size() < 2 || v.front() != '[' || v.back() != ']') {
    throw InvalidParams("continued fractions look like [a0;a1,a2,...]");
  }
  v = v.substr(1, v.size() - 2);
  ContinuedFraction cf;
  size_t semi = v.find(';');
  std::string_view head = semi == std::string_view::npos ? v : v.substr(0, semi);
  cf.quotients.push_back(BigInt::from_decimal(head));
  if (semi != std::string_view::npos) {
    std::string_view rest = v.substr(semi + 1);
    while (!rest.empty()) {
      size_t comma = rest.find(',');
      std::string_view tok = comma == std::string_view::npos ? rest : rest.substr(0, comma);
      BigInt q = BigInt::from_decimal(tok);
      if (q.is_negative() || q.is_zero()) {
        throw InvalidParams("partial quotients after a0 must be >= 1");
      }
      cf.quotients.push_back(std::move(q));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  // Canonicalize the [..., a, 1] == [..., a+1] ambiguity.
  if (cf.quotients.size() > 1 && cf.quotients.back() == BigInt(1)) {
    cf.quotients.pop_back();
    cf.quotients.back() = cf.quotients.back() + BigInt(1);
  }
  return cf;
}

ContinuedFraction cf_of_rational(const BigInt& p, const BigNat& q) {
  if (q.is_zero()) throw InvalidParams("continued fraction requires q >= 1");
  ContinuedFraction cf;
  auto [a0, r] = floor_divmod(p, q);
  cf.quotients.push_back(std::move(a0));
  BigNat num = q, rem = std::move(r);
  while (!rem.is_zero()) {
    auto [quot, next] = divmod(num, rem);
    cf.quotients.push_back(BigInt(std::move(quot)));
    num = std::move(rem);
    rem = std::move(next);
  }
  return cf;
}

Rational cf_eval(const ContinuedFraction& cf) {
  if (cf.quotients.empty()) throw InvalidParams("empty continued fraction");
  Rational value(cf.quotients.back(), BigNat(1));
  for (size_t i = cf.quotients.size() - 1; i-- > 0;) {
    if (value.is_zero()) throw Error("continued fraction tail evaluates to zero");
    value = Rational(cf.quotients[i], BigNat(1)) + Rational(1) / value;
  }
  return value;
}

std::vector<Rational> cf_convergents(const ContinuedFraction& cf, size_t k) {
  std::vector<Rational> out;
  BigInt h_prev2(0), h_prev1(1);
  BigInt k_prev2(1), k_prev1(0);
  size_t count = std::min(k, cf.quotients.size());
  for (size_t i = 0; i < count; ++i) {
    BigInt h = cf.quotients[i] * h_prev1 + h_prev2;
    BigInt kq = cf.quotients[i] * k_prev1 + k_prev2;
    out.emplace_back(h, kq.magnitude());
    h_prev2 = std::move(h_prev1);
    h_prev1 = std::move(h);
    k_prev2 = std::move(k_prev1);
    k_prev1 = std::move(kq);
  }
  return out;
}

ContinuedFraction cf_approx_irrational(double value, size_t k) {
  ContinuedFraction cf;
  double v = value;
  double abs_err = 2.3e-16 * std::max(1.0, std::abs(value));
  for (size_t i = 0; i < k; ++i) {
    double a = std::floor(v);
    if (i > 0 && abs_err > 0.5) {
      throw PrecisionExhausted("float precision cannot support quotient " +
                               std::to_string(i));
    }
    cf.quotients.push_back(BigInt(static_cast<int64_t>(a)));
    double frac = v - a;
    if (frac == 0.0) break;  // the value was exactly rational at this depth
    if (frac <= 4 * abs_err && i + 1 < k) {
      throw PrecisionExhausted("float precision exhausted after quotient " +
                               std::to_string(i + 1));
    }
    abs_err /= frac * frac;
    v = 1.0 / frac;
  }
  return cf;
}

namespace {

// First count reduced fractions p/q in [0,1], in Cantor pairing order.
std::vector<std::pair<uint64_t, uint64_t>> unit_rationals(uint64_t count) {
  std::vector<std::pair<uint64_t, uint64_t>> out;
  out.reserve(count);
  for (uint64_t n = 0; out.size() < count; ++n) {
    auto [p, q] = cantor_unpair(n);
    if (q == 0 || p > q) continue;
    if (std::gcd(p, q) != 1) continue;  // a duplicate of an earlier diagonal
    out.emplace_back(p, q);
  }
  return out;
}

}  // namespace

CoverResult cover_measure(const Rational& epsilon, uint64_t n_rationals) {
  if (!(epsilon > Rational(0))) throw InvalidParams("epsilon must be positive");
  if (n_rationals > 30000) {
    throw TooLarge("cover of " + std::to_string(n_rationals) +
                   " rationals needs gigabytes of exact endpoints");
  }
  const uint64_t count = n_rationals + 1;  // intervals around Q_0 .. Q_n
  auto centers = unit_rationals(count);

  // Everything is scaled to integers over the common denominator
  // D = B * e_d * 2^(n+2), with B the lcm of the center denominators.
  // Interval k then has endpoints  a_k*(B/q_k)*e_d*2^(n+2) +- e_n*B*2^(n-k).
  const uint64_t M = n_rationals + 2;
  BigNat pow2_m(1);
  for (uint64_t j = 0; j < M; ++j) pow2_m += pow2_m;

  BigNat B(1);
  for (auto [p, q] : centers) {
    (void)p;
    BigNat bq(q);
    B = B * (bq / gcd(B, bq));
  }
  const BigNat& e_n = epsilon.num().magnitude();
  const BigNat& e_d = epsilon.den();
  BigNat D = B * e_d * pow2_m;

  struct Interval {
    BigInt left;
    BigInt right;
  };
  std::vector<Interval> intervals;
  intervals.reserve(count);
  const BigInt zero(0);
  const BigInt one_scaled{D};
  const BigNat two(2);
  BigNat halfwidth = e_n * B * pow2_m / BigNat(4);  // e_n * B * 2^(M-2-k), halved per k
  for (uint64_t kidx = 0; kidx < count; ++kidx) {
    auto [p, q] = centers[kidx];
    BigNat center = BigNat(p) * (B / BigNat(q)) * e_d * pow2_m;
    BigInt left = BigInt(center) - BigInt(halfwidth);
    BigInt right = BigInt(center + halfwidth);
    if (left < zero) left = zero;
    if (right > one_scaled) right = one_scaled;
    intervals.push_back({std::move(left), std::move(right)});
    halfwidth = halfwidth / two;
  }

  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.left < b.left; });

  BigNat total;
  BigInt cur_l = intervals.front().left;
  BigInt cur_r = intervals.front().right;
  for (size_t i = 1; i < intervals.size(); ++i) {
    if (intervals[i].left <= cur_r) {
      if (intervals[i].right > cur_r) cur_r = intervals[i].right;
    } else {
      total += (cur_r - cur_l).magnitude();
      cur_l = intervals[i].left;
      cur_r = intervals[i].right;
    }
  }
  total += (cur_r - cur_l).magnitude();

  CoverResult out;
  out.union_measure = Rational(BigInt(std::move(total)), std::move(D));
  // epsilon * (1 - 2^-(n+1)) from the geometric partial sum.
  BigNat pow2_m1 = pow2_m / two;
  out.nominal_total = epsilon * Rational(BigInt(pow2_m1 - BigNat(1)), pow2_m1);
  out.centers.reserve(count);
  for (auto [p, q] : centers) {
    out.centers.emplace_back(BigInt(static_cast<int64_t>(p)), BigNat(q));
  }
  return out;
}

}  // namespace transfinite
