#include "transfinite/ordinal.hpp"

#include <cassert>
#include <utility>

#include "transfinite/errors.hpp"

namespace transfinite {

Ordinal::Term Ordinal::make_term(Ordinal exponent, BigNat coefficient) {
  return Term{std::make_shared<const Ordinal>(std::move(exponent)), std::move(coefficient)};
}

Ordinal::Ordinal(BigNat finite_value) {
  if (!finite_value.is_zero()) {
    terms_.push_back(make_term(Ordinal{}, std::move(finite_value)));
  }
}

Ordinal Ordinal::omega() { return omega_pow(Ordinal(1)); }

Ordinal Ordinal::omega_pow(Ordinal e) {
  Ordinal out;
  out.terms_.push_back(make_term(std::move(e), BigNat(1)));
  return out;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  Ordinal out;
  out.terms_ = std::move(terms);
  for (size_t i = 0; i + 1 < out.terms_.size(); ++i) {
    assert(compare(out.terms_[i].exp(), out.terms_[i + 1].exp()) ==
           std::strong_ordering::greater);
  }
  return out;
}

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp().is_zero());
}

const BigNat& Ordinal::finite_value() const {
  static const BigNat zero;
  if (terms_.empty()) return zero;
  assert(is_finite());
  return terms_[0].coefficient;
}

const Ordinal& Ordinal::leading_exponent() const {
  assert(!terms_.empty());
  return terms_.front().exp();
}

const BigNat& Ordinal::leading_coefficient() const {
  assert(!terms_.empty());
  return terms_.front().coefficient;
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    auto ce = compare(a.terms_[i].exp(), b.terms_[i].exp());
    if (ce != std::strong_ordering::equal) return ce;
    auto cc = a.terms_[i].coefficient <=> b.terms_[i].coefficient;
    if (cc != std::strong_ordering::equal) return cc;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::strong_ordering compare(const OrdinalOrEps& a, const OrdinalOrEps& b) {
  if (a.is_epsilon0() && b.is_epsilon0()) return std::strong_ordering::equal;
  if (a.is_epsilon0()) return std::strong_ordering::greater;
  if (b.is_epsilon0()) return std::strong_ordering::less;
  return compare(*a.value, *b.value);
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.leading_exponent();
  Ordinal out;
  // Keep a's terms with exponent above b's leading exponent; a term equal
  // to it merges coefficients; everything below is absorbed.
  for (const auto& t : a.terms_) {
    auto c = compare(t.exp(), lead);
    if (c == std::strong_ordering::greater) {
      out.terms_.push_back(t);
    } else {
      if (c == std::strong_ordering::equal) {
        out.terms_.push_back(
            Ordinal::Term{t.exponent, t.coefficient + b.leading_coefficient()});
        out.terms_.insert(out.terms_.end(), b.terms_.begin() + 1, b.terms_.end());
        return out;
      }
      break;
    }
  }
  out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
  return out;
}

Ordinal operator*(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal{};
  Ordinal out;
  // Left-distribute over b's CNF, largest term first: each infinite term
  // ω^f·d of b contributes ω^(e₁+f)·d; a finite tail d scales a's leading
  // coefficient and keeps a's remainder.
  for (const auto& t : b.terms_) {
    Ordinal piece;
    if (t.exp().is_zero()) {
      piece = a;
      piece.terms_.front().coefficient = a.leading_coefficient() * t.coefficient;
    } else {
      piece.terms_.push_back(
          Ordinal::make_term(a.leading_exponent() + t.exp(), t.coefficient));
    }
    out = out + piece;
  }
  return out;
}

namespace {

// a^k for finite k by binary exponentiation over ordinal multiplication.
Ordinal pow_finite_exponent(const Ordinal& a, BigNat k) {
  Ordinal result(1);
  Ordinal base = a;
  while (!k.is_zero()) {
    if (!k.is_even()) result = result * base;
    k = k / BigNat(2);
    if (!k.is_zero()) base = base * base;
  }
  return result;
}

// Splits b = λ + k into its infinite part λ (terms with exponent ≥ 1)
// and finite remainder k.
std::pair<Ordinal, BigNat> split_limit_finite(const Ordinal& b) {
  std::vector<Ordinal::Term> infinite;
  BigNat finite;
  for (const auto& t : b.terms()) {
    if (t.exp().is_zero()) {
      finite = t.coefficient;
    } else {
      infinite.push_back(t);
    }
  }
  return {Ordinal::from_terms(std::move(infinite)), std::move(finite)};
}

}  // namespace

Ordinal pow(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return Ordinal(1);  // includes 0^0 = 1
  if (a.is_zero()) return Ordinal{};
  if (a == Ordinal(1)) return Ordinal(1);
  if (b.is_finite()) {
    if (a.is_finite()) return Ordinal(pow(a.finite_value(), b.finite_value()));
    return pow_finite_exponent(a, b.finite_value());
  }

  auto [lambda, k] = split_limit_finite(b);
  Ordinal limit_part;
  if (a.is_finite()) {
    // n^(ω^e·c + …): each exponent e ≥ 1 steps down by one when finite
    // and stays put when infinite, the whole sum landing in ω's exponent.
    std::vector<Ordinal::Term> shifted;
    for (const auto& t : lambda.terms()) {
      Ordinal e = t.exp();
      if (e.is_finite()) e = Ordinal(e.finite_value() - BigNat(1));
      shifted.push_back(Ordinal::make_term(std::move(e), t.coefficient));
    }
    limit_part = Ordinal::omega_pow(Ordinal::from_terms(std::move(shifted)));
  } else {
    limit_part = Ordinal::omega_pow(a.leading_exponent() * lambda);
  }
  if (k.is_zero()) return limit_part;
  if (a.is_finite()) return limit_part * Ordinal(pow(a.finite_value(), k));
  return limit_part * pow_finite_exponent(a, k);
}

OrdinalClass classify(const Ordinal& a) {
  if (a.is_zero()) return OrdinalClass::Zero;
  if (a.terms().back().exp().is_zero()) return OrdinalClass::Successor;
  return OrdinalClass::Limit;
}

CardinalClass cardinality(const Ordinal& a) {
  if (a.is_finite()) return CardinalClass{a.finite_value()};
  return CardinalClass{std::nullopt};
}

std::string CardinalClass::to_string() const {
  if (finite) return "Finite(" + finite->to_string() + ")";
  return "Aleph0";
}

Ordinal fundamental_sequence(const Ordinal& a, uint64_t n) {
  if (classify(a) != OrdinalClass::Limit) {
    throw NotALimit("fundamental sequence requires a limit ordinal, got " + a.to_string());
  }
  // Rewrite the last CNF term; everything before it rides along unchanged.
  std::vector<Ordinal::Term> prefix(a.terms().begin(), a.terms().end() - 1);
  const Ordinal::Term& last = a.terms().back();
  Ordinal head = Ordinal::from_terms(std::move(prefix));

  if (last.coefficient > BigNat(1)) {
    // γ + ω^e·c  ->  (γ + ω^e·(c−1)) + fs(ω^e, n)
    Ordinal reduced =
        head + Ordinal::from_terms({Ordinal::Term{last.exponent, last.coefficient - BigNat(1)}});
    return reduced + fundamental_sequence(Ordinal::omega_pow(last.exp()), n);
  }
  if (classify(last.exp()) == OrdinalClass::Successor) {
    // γ + ω^(e'+1)  ->  γ + ω^e'·n
    const auto& ets = last.exp().terms();
    std::vector<Ordinal::Term> pred_terms(ets.begin(), ets.end() - 1);
    if (ets.back().coefficient > BigNat(1)) {
      pred_terms.push_back(Ordinal::make_term(Ordinal{}, ets.back().coefficient - BigNat(1)));
    }
    Ordinal pred = Ordinal::from_terms(std::move(pred_terms));
    if (n == 0) return head;
    return head + Ordinal::from_terms({Ordinal::make_term(std::move(pred), BigNat(n))});
  }
  // γ + ω^λ with λ limit  ->  γ + ω^fs(λ, n)
  return head + Ordinal::omega_pow(fundamental_sequence(last.exp(), n));
}

Ordinal fundamental_sequence(Epsilon0Token, uint64_t n) {
  // The result nests n exponents deep; past ~10^4 levels the recursive
  // printing and destruction of that tower would blow the native stack.
  if (n > 10000) {
    throw TooLarge("w^^" + std::to_string(n) + " nests too deep to materialize");
  }
  Ordinal t(1);
  for (uint64_t i = 0; i < n; ++i) t = Ordinal::omega_pow(std::move(t));
  return t;
}

Ordinal fundamental_sequence(const OrdinalOrEps& a, uint64_t n) {
  if (a.is_epsilon0()) return fundamental_sequence(Epsilon0Token{}, n);
  return fundamental_sequence(*a.value, n);
}

namespace {

// An exponent prints without parentheses only when it is a plain numeral
// or a single coefficient-1 power (right-associative ^ chains reparse).
bool exponent_needs_parens(const Ordinal& e) {
  if (e.is_finite()) return false;
  return e.terms().size() != 1 || !(e.leading_coefficient() == BigNat(1));
}

}  // namespace

std::string Ordinal::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) out += " + ";
    const Term& t = terms_[i];
    if (t.exp().is_zero()) {
      out += t.coefficient.to_string();
      continue;
    }
    out += "w";
    if (!(t.exp() == Ordinal(1))) {
      out += "^";
      if (exponent_needs_parens(t.exp())) {
        out += "(" + t.exp().to_string() + ")";
      } else {
        out += t.exp().to_string();
      }
    }
    if (!(t.coefficient == BigNat(1))) {
      out += "*" + t.coefficient.to_string();
    }
  }
  return out;
}

}  // namespace transfinite
