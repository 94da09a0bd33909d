#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "transfinite/bignat.hpp"
#include "transfinite/ordinal.hpp"

namespace transfinite {

/// Syntax tree for ordinal expressions over {naturals, w, e0, +, *, ^}.
/// ^ is right-associative and binds tighter than *, which binds tighter
/// than +.
struct OrdinalExpr {
  enum class Kind { Nat, Omega, Epsilon0, Add, Mul, Pow };
  Kind kind;
  BigNat nat;  // Kind::Nat only
  std::unique_ptr<OrdinalExpr> lhs, rhs;
};

/// Grammar (whitespace ignored):
///   expr  := term { '+' term }
///   term  := power { '*' power }
///   power := atom [ '^' power ]
///   atom  := 'w' | 'e0' | NAT | '(' expr ')'
/// Throws ParseError with a 1-based position and expected-token set.
std::unique_ptr<OrdinalExpr> parse_ordinal(std::string_view src);

/// Evaluates to CNF. e0 anywhere inside arithmetic throws
/// Epsilon0InArithmetic; as the whole expression it yields the token.
OrdinalOrEps eval_ordinal(const OrdinalExpr& e);

/// Convenience: parse then evaluate, rejecting a bare e0.
Ordinal eval_ordinal_string(std::string_view src);
/// Parse then evaluate, admitting a bare e0 for fs/cmp queries.
OrdinalOrEps eval_ordinal_or_eps_string(std::string_view src);

}  // namespace transfinite
