#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "transfinite/bignat.hpp"

namespace transfinite {

/// Ordinal below ε₀ in Cantor normal form: a finite sum
/// ω^e₁·c₁ + … + ω^e_k·c_k with strictly decreasing ordinal exponents
/// and coefficients ≥ 1. The empty sum is 0; finite naturals are the
/// single term ω⁰·c. Values are immutable after construction and every
/// operation is a pure function, so they can be shared across threads.
class Ordinal {
 public:
  /// One CNF term ω^exponent·coefficient. Exponents are held behind a
  /// shared_ptr purely to close the recursive type; they are immutable,
  /// so sharing is safe and copies stay cheap.
  struct Term {
    std::shared_ptr<const Ordinal> exponent;
    BigNat coefficient;  // >= 1
    const Ordinal& exp() const { return *exponent; }
  };
  static Term make_term(Ordinal exponent, BigNat coefficient);

  Ordinal() = default;  // zero
  explicit Ordinal(BigNat finite_value);
  explicit Ordinal(uint64_t finite_value) : Ordinal(BigNat(finite_value)) {}

  static Ordinal omega();
  /// ω^e (coefficient 1).
  static Ordinal omega_pow(Ordinal e);
  /// Builds from terms already in strictly decreasing exponent order.
  static Ordinal from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  /// True when the value is below ω, i.e. a plain natural number.
  bool is_finite() const;
  /// The natural value; requires is_finite().
  const BigNat& finite_value() const;

  const std::vector<Term>& terms() const { return terms_; }
  const Ordinal& leading_exponent() const;  // requires non-zero
  const BigNat& leading_coefficient() const;

  std::string to_string() const;

  friend std::strong_ordering compare(const Ordinal& a, const Ordinal& b);
  std::strong_ordering operator<=>(const Ordinal& o) const { return compare(*this, o); }
  bool operator==(const Ordinal& o) const { return compare(*this, o) == std::strong_ordering::equal; }

  friend Ordinal operator+(const Ordinal& a, const Ordinal& b);
  friend Ordinal operator*(const Ordinal& a, const Ordinal& b);
  /// Ordinal exponentiation; 0^0 = 1 by convention.
  friend Ordinal pow(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Term> terms_;
};

enum class OrdinalClass { Zero, Successor, Limit };

/// Zero for the empty sum, Successor when the last CNF term has exponent
/// zero, Limit otherwise.
OrdinalClass classify(const Ordinal& a);

struct CardinalClass {
  /// Engaged with the natural value when the ordinal is below ω,
  /// disengaged for the countably infinite class (ℵ₀).
  std::optional<BigNat> finite;
  bool is_aleph0() const { return !finite.has_value(); }
  std::string to_string() const;
};

CardinalClass cardinality(const Ordinal& a);

/// Distinguished ε₀ marker: accepted by comparison and fundamental-
/// sequence queries only, never by arithmetic.
struct Epsilon0Token {};

/// n-th element of the canonical fundamental sequence of a limit
/// ordinal. Throws NotALimit for zero and successors.
Ordinal fundamental_sequence(const Ordinal& a, uint64_t n);
/// fs(ε₀, n) = ω↑↑n, with ω↑↑0 = 1.
Ordinal fundamental_sequence(Epsilon0Token, uint64_t n);

/// Either a CNF ordinal or the ε₀ token, for the queries that admit both.
struct OrdinalOrEps {
  std::optional<Ordinal> value;  // disengaged == ε₀
  bool is_epsilon0() const { return !value.has_value(); }
};

/// Total order extended by ε₀ > every Ordinal.
std::strong_ordering compare(const OrdinalOrEps& a, const OrdinalOrEps& b);

Ordinal fundamental_sequence(const OrdinalOrEps& a, uint64_t n);

}  // namespace transfinite
