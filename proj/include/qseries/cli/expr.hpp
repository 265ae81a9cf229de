#pragma once

// Series expressions:
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' ['-'] digits)?
//   atom   := digits ['/' digits] | 'zeta' | 't'k | 'x'i | 'inv' '(' expr ')' | '(' expr ')'
//
// Products keep their left-to-right order. A negative power is accepted only
// on a generator, zeta, t_k or a number; anything else needs inv().

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qseries/cli/config.hpp"

namespace qseries::cli {

struct SeriesExpr;
using ExprPtr = std::shared_ptr<const SeriesExpr>;

struct SeriesExpr {
  enum class Kind { Number, Zeta, FreeGen, Var, Neg, Add, Sub, Mul, Pow, Inv };

  Kind kind = Kind::Number;
  Rational value;           // Number
  int index = 0;            // FreeGen, Var: one-based
  std::int64_t exponent = 0; // Pow
  std::vector<ExprPtr> children;

  static ExprPtr number(const Rational& v);
  static ExprPtr zeta();
  static ExprPtr free_gen(int k);
  static ExprPtr var(int i);
  static ExprPtr unary(Kind kind, ExprPtr a);
  static ExprPtr binary(Kind kind, ExprPtr a, ExprPtr b);
  static ExprPtr pow(ExprPtr base, std::int64_t e);
};

bool structurally_equal(const SeriesExpr& a, const SeriesExpr& b);

// Identifiers are checked against cfg (x_i for i <= n, t_k for k <= r).
ExprPtr parse_series(const std::string& text, const RingConfig& cfg);
// Unchecked identifiers.
ExprPtr parse_series(const std::string& text);

// Canonical form; parse_series(print_expr(e)) is structurally equal to e.
std::string print_expr(const SeriesExpr& e);

LaurentElem evaluate(const SeriesExpr& e, const RingConfig& cfg);
LaurentElem evaluate(const SeriesExpr& e, const RingConfig& cfg, int precision);

} // namespace qseries::cli
