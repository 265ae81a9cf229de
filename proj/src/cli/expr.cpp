#include "qseries/cli/expr.hpp"

#include <cctype>

#include "qseries/errors.hpp"

namespace qseries::cli {

using Kind = SeriesExpr::Kind;

ExprPtr SeriesExpr::number(const Rational& v)
{
  auto e = std::make_shared<SeriesExpr>();
  e->kind = Kind::Number;
  e->value = v;
  return e;
}

ExprPtr SeriesExpr::zeta()
{
  auto e = std::make_shared<SeriesExpr>();
  e->kind = Kind::Zeta;
  return e;
}

ExprPtr SeriesExpr::free_gen(int k)
{
  auto e = std::make_shared<SeriesExpr>();
  e->kind = Kind::FreeGen;
  e->index = k;
  return e;
}

ExprPtr SeriesExpr::var(int i)
{
  auto e = std::make_shared<SeriesExpr>();
  e->kind = Kind::Var;
  e->index = i;
  return e;
}

ExprPtr SeriesExpr::unary(Kind kind, ExprPtr a)
{
  auto e = std::make_shared<SeriesExpr>();
  e->kind = kind;
  e->children = {std::move(a)};
  return e;
}

ExprPtr SeriesExpr::binary(Kind kind, ExprPtr a, ExprPtr b)
{
  auto e = std::make_shared<SeriesExpr>();
  e->kind = kind;
  e->children = {std::move(a), std::move(b)};
  return e;
}

ExprPtr SeriesExpr::pow(ExprPtr base, std::int64_t exponent)
{
  auto e = std::make_shared<SeriesExpr>();
  e->kind = Kind::Pow;
  e->exponent = exponent;
  e->children = {std::move(base)};
  return e;
}

bool structurally_equal(const SeriesExpr& a, const SeriesExpr& b)
{
  if (a.kind != b.kind || a.children.size() != b.children.size())
    return false;
  switch (a.kind) {
  case Kind::Number:
    return a.value == b.value;
  case Kind::FreeGen:
  case Kind::Var:
    return a.index == b.index;
  case Kind::Pow:
    if (a.exponent != b.exponent)
      return false;
    break;
  default:
    break;
  }
  for (std::size_t k = 0; k < a.children.size(); ++k) {
    if (!structurally_equal(*a.children[k], *b.children[k]))
      return false;
  }
  return true;
}

namespace {

class Parser {
public:
  Parser(const std::string& text, const RingConfig* cfg) : text_(text), cfg_(cfg) {}

  ExprPtr parse()
  {
    ExprPtr e = expr();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

private:
  void skip_space()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c)
  {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c)
  {
    if (!accept(c))
      throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  std::string digits()
  {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  ExprPtr expr()
  {
    ExprPtr left = term();
    for (;;) {
      if (accept('+'))
        left = SeriesExpr::binary(Kind::Add, left, term());
      else if (accept('-'))
        left = SeriesExpr::binary(Kind::Sub, left, term());
      else
        return left;
    }
  }

  ExprPtr term()
  {
    ExprPtr left = unary();
    while (accept('*'))
      left = SeriesExpr::binary(Kind::Mul, left, unary());
    return left;
  }

  ExprPtr unary()
  {
    if (accept('-'))
      return SeriesExpr::unary(Kind::Neg, unary());
    return power();
  }

  ExprPtr power()
  {
    skip_space();
    const std::size_t base_pos = pos_;
    ExprPtr base = atom();
    if (!accept('^'))
      return base;
    skip_space();
    const bool negative = pos_ < text_.size() && text_[pos_] == '-';
    if (negative)
      ++pos_;
    const std::size_t exp_pos = pos_;
    const std::string d = digits();
    if (d.empty())
      throw ParseError("expected an integer exponent", exp_pos);
    if (d.size() > 9)
      throw ParseError("exponent too large", exp_pos);
    std::int64_t e = std::stoll(d);
    if (negative) {
      const Kind k = base->kind;
      if (k != Kind::Var && k != Kind::Zeta && k != Kind::FreeGen && k != Kind::Number)
        throw ParseError("negative power of a non-monomial; use inv()", base_pos);
      e = -e;
    }
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^')
      throw ParseError("chained '^' needs parentheses", pos_);
    return SeriesExpr::pow(base, e);
  }

  int index_after(char prefix, int limit, const char* what)
  {
    const std::size_t start = pos_ - 1;
    const std::string d = digits();
    if (d.empty() || d.size() > 6)
      throw ParseError(std::string("unknown identifier '") + prefix + "'", start);
    const int k = std::stoi(d);
    if (k < 1 || (cfg_ && k > limit))
      throw ParseError(std::string("unknown identifier '") + prefix + d + "' (" + what + ")", start);
    return k;
  }

  ExprPtr atom()
  {
    skip_space();
    if (pos_ >= text_.size())
      throw ParseError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string num = digits();
      Rational v{Integer(num)};
      if (pos_ < text_.size() && text_[pos_] == '/') {
        const std::size_t slash = pos_++;
        const std::string den = digits();
        if (den.empty())
          throw ParseError("expected a denominator", pos_);
        const Integer d(den);
        if (d == 0)
          throw ParseError("zero denominator", slash);
        v /= Rational(d);
      }
      return SeriesExpr::number(v);
    }
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      if (text_.compare(pos_, 4, "zeta") == 0 && !ident_continues(pos_ + 4)) {
        pos_ += 4;
        return SeriesExpr::zeta();
      }
      if (text_.compare(pos_, 3, "inv") == 0 && !ident_continues(pos_ + 3)) {
        pos_ += 3;
        expect('(');
        ExprPtr e = expr();
        expect(')');
        return SeriesExpr::unary(Kind::Inv, e);
      }
      ++pos_;
      if (c == 'x' && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        return SeriesExpr::var(index_after('x', cfg_ ? cfg_->n : 0, "no such generator"));
      if (c == 't' && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        return SeriesExpr::free_gen(index_after('t', cfg_ ? cfg_->signature.free_rank : 0, "no such parameter"));
      std::size_t end = start;
      while (ident_continues(end))
        ++end;
      throw ParseError("unknown identifier '" + text_.substr(start, end - start) + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  bool ident_continues(std::size_t at) const
  {
    return at < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[at])) || text_[at] == '_');
  }

  const std::string& text_;
  const RingConfig* cfg_;
  std::size_t pos_ = 0;
};

// 1: sum level, 2: product level, 3: unary minus, 4: power, 5: atom
int precedence(const SeriesExpr& e)
{
  switch (e.kind) {
  case Kind::Add:
  case Kind::Sub:
    return 1;
  case Kind::Mul:
    return 2;
  case Kind::Neg:
    return 3;
  case Kind::Pow:
    return 4;
  default:
    return 5;
  }
}

std::string wrap(const SeriesExpr& e, int min_prec)
{
  const std::string s = print_expr(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

} // namespace

ExprPtr parse_series(const std::string& text, const RingConfig& cfg) { return Parser(text, &cfg).parse(); }

ExprPtr parse_series(const std::string& text) { return Parser(text, nullptr).parse(); }

std::string print_expr(const SeriesExpr& e)
{
  switch (e.kind) {
  case Kind::Number:
    return to_string(e.value);
  case Kind::Zeta:
    return "zeta";
  case Kind::FreeGen:
    return "t" + std::to_string(e.index);
  case Kind::Var:
    return "x" + std::to_string(e.index);
  case Kind::Neg:
    return "-" + wrap(*e.children[0], 3);
  case Kind::Add:
    return wrap(*e.children[0], 1) + " + " + wrap(*e.children[1], 2);
  case Kind::Sub:
    return wrap(*e.children[0], 1) + " - " + wrap(*e.children[1], 2);
  case Kind::Mul:
    return wrap(*e.children[0], 2) + "*" + wrap(*e.children[1], 3);
  case Kind::Pow:
    // a fraction base reads as a single atom, 3/4^2 is (3/4)^2
    return wrap(*e.children[0], 5) + "^" + std::to_string(e.exponent);
  case Kind::Inv:
    return "inv(" + print_expr(*e.children[0]) + ")";
  }
  return {};
}

namespace {

LaurentElem constant(const RingConfig& cfg, int d, const FieldElem& c)
{
  return LaurentElem(SkewSeries::constant(cfg.n, cfg.signature, d, c));
}

LaurentElem laurent_pow(const QMatrix& q, const LaurentElem& a, std::int64_t k, int d)
{
  LaurentElem base = k < 0 ? laurent_inv(q, a) : a;
  std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
  LaurentElem result(SkewSeries::one(q.size(), q.signature(), d));
  while (e) {
    if (e & 1u)
      result = laurent_mul(q, result, base);
    e >>= 1u;
    if (e)
      base = laurent_mul(q, base, base);
  }
  return result;
}

} // namespace

LaurentElem evaluate(const SeriesExpr& e, const RingConfig& cfg, int d)
{
  const QMatrix& q = cfg.q;
  switch (e.kind) {
  case Kind::Number:
    return constant(cfg, d, FieldElem(cfg.signature, e.value));
  case Kind::Zeta:
    return constant(cfg, d, field_embed(GroupUnit::zeta(cfg.signature)));
  case Kind::FreeGen:
    if (e.index > cfg.signature.free_rank)
      throw ConfigurationError("t" + std::to_string(e.index) + " exceeds the free rank");
    return constant(cfg, d, FieldElem::free_generator(cfg.signature, e.index - 1));
  case Kind::Var:
    if (e.index > cfg.n)
      throw ConfigurationError("x" + std::to_string(e.index) + " exceeds n");
    return LaurentElem::monomial(q, unit_exponent(cfg.n, e.index - 1), d);
  case Kind::Neg: {
    const LaurentElem a = evaluate(*e.children[0], cfg, d);
    return LaurentElem(a.shift(), -a.body());
  }
  case Kind::Add:
    return laurent_add(q, evaluate(*e.children[0], cfg, d), evaluate(*e.children[1], cfg, d));
  case Kind::Sub: {
    const LaurentElem b = evaluate(*e.children[1], cfg, d);
    return laurent_add(q, evaluate(*e.children[0], cfg, d), LaurentElem(b.shift(), -b.body()));
  }
  case Kind::Mul:
    return laurent_mul(q, evaluate(*e.children[0], cfg, d), evaluate(*e.children[1], cfg, d));
  case Kind::Pow:
    if (e.children[0]->kind == Kind::Var && e.exponent < 0) {
      if (e.children[0]->index > cfg.n)
        throw ConfigurationError("x" + std::to_string(e.children[0]->index) + " exceeds n");
      const Exponent v = e.exponent * unit_exponent(cfg.n, e.children[0]->index - 1);
      return LaurentElem::monomial(q, v, d);
    }
    return laurent_pow(q, evaluate(*e.children[0], cfg, d), e.exponent, d);
  case Kind::Inv:
    return laurent_inv(q, evaluate(*e.children[0], cfg, d));
  }
  throw Error("unknown expression node");
}

LaurentElem evaluate(const SeriesExpr& e, const RingConfig& cfg) { return evaluate(e, cfg, cfg.precision); }

} // namespace qseries::cli
