#include "transfinite/hyperops.hpp"

#include <cmath>
#include <limits>

#include "transfinite/errors.hpp"

namespace transfinite {

namespace {

constexpr long double kDigitOverflow = std::numeric_limits<long double>::max() / 64;

// Running value of a partially evaluated tower: exact while small,
// then only its digit count, then nothing representable at all.
struct TowerState {
  enum class Kind { Exact, Log10, TooBig } kind = Kind::Exact;
  BigNat value;      // Kind::Exact
  long double log10 = 0;  // Kind::Log10: log10 of the value

  static TowerState exact(BigNat v) { return {Kind::Exact, std::move(v), 0}; }
  static TowerState log(long double l) { return {Kind::Log10, {}, l}; }
  static TowerState too_big() { return {Kind::TooBig, {}, 0}; }
};

// One exponentiation step v -> a^v under the digit guard.
TowerState step_exponent(uint64_t a, const TowerState& s, uint64_t guard_digits) {
  const long double log10_a = std::log10(static_cast<long double>(a));
  switch (s.kind) {
    case TowerState::Kind::Exact: {
      long double exponent = s.value.to_long_double();
      long double result_log10 = exponent * log10_a;
      if (result_log10 < static_cast<long double>(guard_digits)) {
        BigNat r = pow(BigNat(a), s.value);
        if (r.digit_count() <= guard_digits) return TowerState::exact(std::move(r));
        return TowerState::log(static_cast<long double>(r.digit_count()) - 1);
      }
      if (result_log10 < kDigitOverflow) return TowerState::log(result_log10);
      return TowerState::too_big();
    }
    case TowerState::Kind::Log10: {
      // The value is about 10^log10; it survives one more level only if
      // it is itself representable as a float exponent.
      if (s.log10 >= std::log10(kDigitOverflow)) return TowerState::too_big();
      long double value = std::pow(10.0L, s.log10);
      long double result_log10 = value * log10_a;
      if (!std::isfinite(result_log10) || result_log10 >= kDigitOverflow) {
        return TowerState::too_big();
      }
      return TowerState::log(result_log10);
    }
    case TowerState::Kind::TooBig:
      return TowerState::too_big();
  }
  return TowerState::too_big();
}

HyperResult finish(uint64_t a, uint64_t n, uint64_t b, const TowerState& s) {
  switch (s.kind) {
    case TowerState::Kind::Exact:
      return HyperResult{HyperResult::Exact{s.value}};
    case TowerState::Kind::Log10:
      return HyperResult{
          HyperResult::DigitEstimate{std::floor(s.log10) + 1}};
    case TowerState::Kind::TooBig:
      break;
  }
  return HyperResult{HyperResult::Symbolic{HyperCall{a, n, b}}};
}

HyperResult tetration(uint64_t a, uint64_t b, uint64_t guard_digits) {
  TowerState s = TowerState::exact(BigNat(1));
  for (uint64_t i = 0; i < b; ++i) {
    s = step_exponent(a, s, guard_digits);
    if (s.kind == TowerState::Kind::TooBig) break;
  }
  return finish(a, 4, b, s);
}

}  // namespace

std::string HyperCall::to_string() const {
  return std::to_string(base) + "[" + std::to_string(op_index) + "]" +
         std::to_string(height);
}

HyperResult hyper(uint64_t a, uint64_t n, uint64_t b, uint64_t guard_digits) {
  if (n == 0) throw InvalidOp("hyperoperation index must be >= 1");
  if (n == 1) return HyperResult{HyperResult::Exact{BigNat(a) + BigNat(b)}};
  if (n == 2) return HyperResult{HyperResult::Exact{BigNat(a) * BigNat(b)}};
  if (n == 3) {
    if (a == 0) return HyperResult{HyperResult::Exact{BigNat(b == 0 ? 1 : 0)}};
    TowerState s = step_exponent(a, TowerState::exact(BigNat(b)), guard_digits);
    return finish(a, 3, b, s);
  }
  // n >= 4: height conventions, then iterate the level below.
  if (b == 0) return HyperResult{HyperResult::Exact{BigNat(1)}};
  if (b == 1) return HyperResult{HyperResult::Exact{BigNat(a)}};
  if (a == 0) {
    // 0[n]b alternates 1, 0 by the recurrence.
    return HyperResult{HyperResult::Exact{BigNat(b % 2 == 0 ? 1 : 0)}};
  }
  if (a == 1) return HyperResult{HyperResult::Exact{BigNat(1)}};
  if (n == 4) return tetration(a, b, guard_digits);

  HyperResult inner = hyper(a, n, b - 1, guard_digits);
  if (inner.is_exact() && inner.exact().fits_u64()) {
    HyperResult out = hyper(a, n - 1, inner.exact().to_u64(), guard_digits);
    if (!out.is_symbolic()) return out;
  }
  return HyperResult{HyperResult::Symbolic{HyperCall{a, n, b}}};
}

long double digit_estimate(uint64_t a, uint64_t n, uint64_t b) {
  HyperResult r = hyper(a, n, b);
  if (r.is_exact()) return static_cast<long double>(r.exact().digit_count());
  if (r.is_estimate()) return r.estimate_digits();
  throw NotEstimable("digit count of " + HyperCall{a, n, b}.to_string() +
                     " exceeds floating-point range");
}

std::string GrahamTerm::to_string() const {
  if (level == 1) return "3[6]3";
  return "3[g" + std::to_string(level - 1) + "+2]3";
}

std::string GrahamTerm::describe() const {
  if (level == 1) {
    return "g1 = 3[6]3: 3, followed by 4 up-arrows, followed by 3";
  }
  return "g" + std::to_string(level) + " = 3[g" + std::to_string(level - 1) +
         "+2]3: 3, followed by g" + std::to_string(level - 1) +
         " up-arrows, followed by 3";
}

GrahamTerm graham(uint64_t k) {
  if (k == 0) throw InvalidLevel("Graham sequence starts at g1");
  return GrahamTerm{k};
}

}  // namespace transfinite
