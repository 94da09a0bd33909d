#include <doctest.h>

#include <random>

#include "ordinal_oracle.hpp"
#include "ordinal_samples.hpp"
#include "transfinite/errors.hpp"
#include "transfinite/ordinal.hpp"

using transfinite::BigNat;
using transfinite::cardinality;
using transfinite::CardinalClass;
using transfinite::classify;
using transfinite::Epsilon0Token;
using transfinite::fundamental_sequence;
using transfinite::Ordinal;
using transfinite::OrdinalClass;
using transfinite::OrdinalOrEps;

namespace {

const Ordinal w = Ordinal::omega();

Ordinal wpow(uint64_t e) { return Ordinal::omega_pow(Ordinal(e)); }

}  // namespace

TEST_CASE("addition absorbs below the right operand's lead") {
  CHECK(Ordinal(1) + w == w);
  CHECK(w + Ordinal(0) == w);
  CHECK((w * Ordinal(2) + Ordinal(3)) + wpow(2) == wpow(2));
  CHECK((w + Ordinal(1)).to_string() == "w + 1");
  CHECK((Ordinal(1) + w).to_string() == "w");
}

TEST_CASE("multiplication follows the CNF rules") {
  CHECK(w * Ordinal(2) == w + w);
  CHECK((w * Ordinal(2)).to_string() == "w*2");
  Ordinal a = wpow(2) * Ordinal(3) + w;
  CHECK(a * Ordinal(1) == a);
  CHECK(Ordinal(2) * w == w);
  CHECK(((w + Ordinal(1)) * Ordinal(2)).to_string() == "w*2 + 1");
  CHECK((w + Ordinal(1)) * w == wpow(2));
}

TEST_CASE("exponentiation") {
  CHECK(pow(w, Ordinal(2)) == w * w);
  CHECK(pow(Ordinal(2), w) == w);
  CHECK(pow(w, w + Ordinal(1)) == pow(w, w) * w);
  CHECK(pow(w, w + Ordinal(1)).to_string() == "w^(w + 1)");
  CHECK(pow(Ordinal(0), Ordinal(0)) == Ordinal(1));
  CHECK(pow(Ordinal(0), w) == Ordinal(0));
  CHECK(pow(Ordinal(1), wpow(2)) == Ordinal(1));
  CHECK(pow(Ordinal(2), Ordinal(10)) == Ordinal(1024));
  CHECK(pow(Ordinal(2), w + Ordinal(2)) == w * Ordinal(4));
  CHECK(pow(Ordinal(2), w * Ordinal(2)) == wpow(2));
  CHECK(pow(Ordinal(3), pow(w, w)) == pow(w, pow(w, w)));
  CHECK(pow(w + Ordinal(1), Ordinal(2)) == wpow(2) + w + Ordinal(1));
  CHECK(pow(w + Ordinal(1), w) == pow(w, w));
}

TEST_CASE("exponent laws tie pow to mul and add") {
  std::mt19937_64 rng(97);
  for (int i = 0; i < 150; ++i) {
    Ordinal a = samples::random_cnf(rng, 2);
    Ordinal b = samples::random_cnf(rng, 1);
    Ordinal c = samples::random_cnf(rng, 1);
    CHECK(pow(a, b + c) == pow(a, b) * pow(a, c));
    CHECK(pow(pow(a, b), c) == pow(a, b * c));
  }
}

TEST_CASE("comparison is the total CNF order") {
  CHECK(compare(w + Ordinal(1), Ordinal(1) + w) == std::strong_ordering::greater);
  Ordinal a = wpow(3) * Ordinal(5);
  CHECK(compare(a, a) == std::strong_ordering::equal);
  CHECK(compare(wpow(3) * Ordinal(5), pow(w, w)) == std::strong_ordering::less);
  CHECK(w < w + Ordinal(1));
  CHECK(w * Ordinal(2) < wpow(2));

  OrdinalOrEps eps{std::nullopt};
  OrdinalOrEps big{pow(w, pow(w, w))};
  CHECK(compare(eps, big) == std::strong_ordering::greater);
  CHECK(compare(big, eps) == std::strong_ordering::less);
  CHECK(compare(eps, eps) == std::strong_ordering::equal);
}

TEST_CASE("classification") {
  CHECK(classify(Ordinal(0)) == OrdinalClass::Zero);
  CHECK(classify(Ordinal(7)) == OrdinalClass::Successor);
  CHECK(classify(w + Ordinal(1)) == OrdinalClass::Successor);
  CHECK(classify(w * Ordinal(2)) == OrdinalClass::Limit);
  CHECK(classify(w) == OrdinalClass::Limit);
  CHECK(classify(pow(w, w) + wpow(2) * Ordinal(7)) == OrdinalClass::Limit);
}

TEST_CASE("cardinality classifier") {
  CHECK(cardinality(Ordinal(7)).to_string() == "Finite(7)");
  CHECK(cardinality(Ordinal(0)).to_string() == "Finite(0)");
  CHECK(cardinality(pow(w, w) * Ordinal(3) + w).is_aleph0());
  CHECK(cardinality(w).is_aleph0());
}

TEST_CASE("fundamental sequences match the canonical assignment") {
  CHECK(fundamental_sequence(w, 5) == Ordinal(5));
  CHECK(fundamental_sequence(w, 0) == Ordinal(0));
  CHECK(fundamental_sequence(w * Ordinal(2), 3) == w + Ordinal(3));
  CHECK(fundamental_sequence(wpow(2), 4) == w * Ordinal(4));
  CHECK(fundamental_sequence(pow(w, w), 3) == wpow(3));
  CHECK(fundamental_sequence(pow(w, w + Ordinal(1)), 2) == pow(w, w) * Ordinal(2));
  // Multi-term: only the last term is rewritten.
  CHECK(fundamental_sequence(pow(w, w) + wpow(2), 5) == pow(w, w) + w * Ordinal(5));

  CHECK(fundamental_sequence(Epsilon0Token{}, 0) == Ordinal(1));
  CHECK(fundamental_sequence(Epsilon0Token{}, 1) == w);
  CHECK(fundamental_sequence(Epsilon0Token{}, 2) == pow(w, w));
  CHECK(fundamental_sequence(Epsilon0Token{}, 3) == pow(w, pow(w, w)));

  CHECK_THROWS_AS(fundamental_sequence(Ordinal(0), 1), transfinite::NotALimit);
  CHECK_THROWS_AS(fundamental_sequence(w + Ordinal(1), 1), transfinite::NotALimit);
}

TEST_CASE("exhaustive oracle agreement below w^3 with coefficients <= 5") {
  std::vector<oracle::PolyOrdinal> all;
  for (uint64_t a = 0; a <= 5; ++a) {
    for (uint64_t b = 0; b <= 5; ++b) {
      for (uint64_t c = 0; c <= 5; ++c) {
        oracle::PolyOrdinal p{{c, b, a}};
        p.trim();
        all.push_back(p);
      }
    }
  }
  for (const auto& pa : all) {
    Ordinal oa = oracle::to_ordinal(pa);
    for (const auto& pb : all) {
      Ordinal ob = oracle::to_ordinal(pb);
      int c = oracle::cmp(pa, pb);
      auto got = compare(oa, ob);
      CHECK((c < 0) == (got == std::strong_ordering::less));
      CHECK((c == 0) == (got == std::strong_ordering::equal));
      REQUIRE(oa + ob == oracle::to_ordinal(oracle::add(pa, pb)));
      REQUIRE(oa * ob == oracle::to_ordinal(oracle::mul(pa, pb)));
    }
  }
}

TEST_CASE("associativity over random CNF samples") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 300; ++i) {
    Ordinal a = samples::random_cnf(rng, 3);
    Ordinal b = samples::random_cnf(rng, 3);
    Ordinal c = samples::random_cnf(rng, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("left distributivity holds, right distributivity fails") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 300; ++i) {
    Ordinal a = samples::random_cnf(rng, 3);
    Ordinal b = samples::random_cnf(rng, 3);
    Ordinal c = samples::random_cnf(rng, 3);
    CHECK(a * (b + c) == a * b + a * c);
  }
  // Witness: (1+1)*w = w but 1*w + 1*w = w*2.
  Ordinal lhs = (Ordinal(1) + Ordinal(1)) * w;
  Ordinal rhs = Ordinal(1) * w + Ordinal(1) * w;
  CHECK(lhs == w);
  CHECK(rhs == w * Ordinal(2));
  CHECK(lhs != rhs);
}

TEST_CASE("fixed-point thresholds") {
  const Ordinal w2 = wpow(2);
  const Ordinal ww = pow(w, w);
  std::mt19937_64 rng(47);
  int fixed_add = 0, fixed_mul = 0;
  for (int i = 0; i < 2000; ++i) {
    Ordinal a = samples::random_cnf(rng, 3);
    // w + a = a exactly when a >= w^2.
    bool add_fixed = (w + a == a);
    CHECK(add_fixed == (compare(a, w2) != std::strong_ordering::less));
    if (add_fixed) ++fixed_add;
    // w * a = a exactly when every CNF exponent of a is infinite; the
    // least positive such ordinal is w^w.
    bool mul_fixed = (w * a == a);
    bool all_infinite = !a.is_zero();
    for (const auto& t : a.terms()) {
      if (t.exp().is_finite()) all_infinite = false;
    }
    CHECK(mul_fixed == (a.is_zero() || all_infinite));
    if (mul_fixed && !a.is_zero()) {
      CHECK(compare(a, ww) != std::strong_ordering::less);
      ++fixed_mul;
    }
    // w^a > a for every CNF ordinal.
    CHECK(compare(pow(w, a), a) == std::strong_ordering::greater);
  }
  CHECK(fixed_add > 0);
  CHECK(fixed_mul > 0);
  // The thresholds themselves.
  CHECK(w + w2 == w2);
  CHECK(w * ww == ww);
  CHECK(w + (w2 + Ordinal(1)) == w2 + Ordinal(1));
  CHECK(w * (ww + w) != ww + w);  // past w^w is not sufficient for products
}

TEST_CASE("monotonicity") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 500; ++i) {
    Ordinal a = samples::random_cnf(rng, 3);
    Ordinal b = samples::random_cnf(rng, 3);
    Ordinal c = samples::random_cnf(rng, 3);
    if (b < c) {
      CHECK(a + b < a + c);
    }
    if (a < b) {
      CHECK(compare(a + c, b + c) != std::strong_ordering::greater);
    }
  }
}

TEST_CASE("fundamental sequence properties") {
  std::mt19937_64 rng(59);
  int tested = 0;
  for (int i = 0; i < 800 || tested < 100; ++i) {
    Ordinal a = samples::random_cnf(rng, 2);
    if (classify(a) != OrdinalClass::Limit) continue;
    ++tested;
    Ordinal prev = fundamental_sequence(a, 0);
    CHECK(prev < a);
    for (uint64_t n = 1; n <= 6; ++n) {
      Ordinal cur = fundamental_sequence(a, n);
      CHECK(cur < a);
      CHECK(prev < cur);
      prev = cur;
    }
    // Anything below a is eventually overtaken.
    Ordinal b = samples::random_cnf(rng, 2);
    if (b < a) {
      bool overtaken = false;
      for (uint64_t n = 0; n <= 64 && !overtaken; ++n) {
        overtaken = b < fundamental_sequence(a, n);
      }
      CHECK(overtaken);
    }
    if (i > 5000) break;
  }
}

TEST_CASE("epsilon0 stays out of arithmetic but answers queries") {
  OrdinalOrEps eps{std::nullopt};
  CHECK(fundamental_sequence(eps, 3) == pow(w, pow(w, w)));
  CHECK(compare(eps, OrdinalOrEps{Ordinal(0)}) == std::strong_ordering::greater);
}

TEST_CASE("printing conventions") {
  CHECK(Ordinal(0).to_string() == "0");
  CHECK(Ordinal(42).to_string() == "42");
  CHECK(w.to_string() == "w");
  CHECK((w * Ordinal(2)).to_string() == "w*2");
  CHECK(wpow(2).to_string() == "w^2");
  CHECK(pow(w, w).to_string() == "w^w");
  CHECK(pow(w, pow(w, w)).to_string() == "w^w^w");
  CHECK(pow(w, w * Ordinal(2)).to_string() == "w^(w*2)");
  CHECK((pow(w, w) * Ordinal(3) + w * Ordinal(2) + Ordinal(5)).to_string() ==
        "w^w*3 + w*2 + 5");
}
