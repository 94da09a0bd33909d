#include "transfinite/parser.hpp"

#include <cctype>

#include "transfinite/errors.hpp"

namespace transfinite {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  std::unique_ptr<OrdinalExpr> run() {
    auto e = expr();
    skip_ws();
    if (pos_ < src_.size()) fail("end of input, '+', '*' or '^'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError(pos_ + 1, expected);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::unique_ptr<OrdinalExpr> expr() {
    auto lhs = term();
    while (eat('+')) {
      auto node = std::make_unique<OrdinalExpr>();
      node->kind = OrdinalExpr::Kind::Add;
      node->lhs = std::move(lhs);
      node->rhs = term();
      lhs = std::move(node);
    }
    return lhs;
  }

  std::unique_ptr<OrdinalExpr> term() {
    auto lhs = power();
    while (eat('*')) {
      auto node = std::make_unique<OrdinalExpr>();
      node->kind = OrdinalExpr::Kind::Mul;
      node->lhs = std::move(lhs);
      node->rhs = power();
      lhs = std::move(node);
    }
    return lhs;
  }

  std::unique_ptr<OrdinalExpr> power() {
    auto base = atom();
    if (eat('^')) {
      auto node = std::make_unique<OrdinalExpr>();
      node->kind = OrdinalExpr::Kind::Pow;
      node->lhs = std::move(base);
      node->rhs = power();  // right-associative
      return node;
    }
    return base;
  }

  std::unique_ptr<OrdinalExpr> atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("'w', 'e0', a natural number or '('");
    char c = src_[pos_];
    auto node = std::make_unique<OrdinalExpr>();
    if (c == 'w') {
      ++pos_;
      node->kind = OrdinalExpr::Kind::Omega;
      return node;
    }
    if (c == 'e') {
      if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '0') {
        pos_ += 2;
        node->kind = OrdinalExpr::Kind::Epsilon0;
        return node;
      }
      ++pos_;
      fail("'0' to complete 'e0'");
    }
    if (c >= '0' && c <= '9') {
      size_t start = pos_;
      while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') ++pos_;
      node->kind = OrdinalExpr::Kind::Nat;
      node->nat = BigNat::from_decimal(src_.substr(start, pos_ - start));
      return node;
    }
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      if (!eat(')')) fail("')'");
      return inner;
    }
    fail("'w', 'e0', a natural number or '('");
  }

  std::string_view src_;
  size_t pos_ = 0;
};

Ordinal eval_arith(const OrdinalExpr& e) {
  switch (e.kind) {
    case OrdinalExpr::Kind::Nat:
      return Ordinal(e.nat);
    case OrdinalExpr::Kind::Omega:
      return Ordinal::omega();
    case OrdinalExpr::Kind::Epsilon0:
      throw Epsilon0InArithmetic("e0 is only legal as a whole expression");
    case OrdinalExpr::Kind::Add:
      return eval_arith(*e.lhs) + eval_arith(*e.rhs);
    case OrdinalExpr::Kind::Mul:
      return eval_arith(*e.lhs) * eval_arith(*e.rhs);
    case OrdinalExpr::Kind::Pow:
      return pow(eval_arith(*e.lhs), eval_arith(*e.rhs));
  }
  throw Error("unreachable expression kind");
}

}  // namespace

std::unique_ptr<OrdinalExpr> parse_ordinal(std::string_view src) {
  return Parser(src).run();
}

OrdinalOrEps eval_ordinal(const OrdinalExpr& e) {
  if (e.kind == OrdinalExpr::Kind::Epsilon0) return OrdinalOrEps{std::nullopt};
  return OrdinalOrEps{eval_arith(e)};
}

Ordinal eval_ordinal_string(std::string_view src) {
  auto ast = parse_ordinal(src);
  return eval_arith(*ast);
}

OrdinalOrEps eval_ordinal_or_eps_string(std::string_view src) {
  auto ast = parse_ordinal(src);
  return eval_ordinal(*ast);
}

}  // namespace transfinite
