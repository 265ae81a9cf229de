#pragma once

// The coefficient field Q(zeta_m)(t_1, ..., t_r).
//
// Elements are fractions of sparse Laurent polynomials in t with cyclotomic
// coefficients. Fractions are not gcd-reduced; equality is decided by
// cross-multiplication. Normalization only absorbs monomial denominators,
// makes the denominator's leading coefficient 1, and detects the case where
// the numerator is a scalar multiple of the denominator.

#include <cstdint>
#include <map>
#include <string>

#include "qseries/cyclotomic.hpp"
#include "qseries/group_unit.hpp"

namespace qseries {

class LaurentPoly {
public:
  using Terms = std::map<Exponent, CycNumber, LexLess>;

  LaurentPoly() = default;
  explicit LaurentPoly(ScalarSignature sig) : sig_(sig) {}
  LaurentPoly(ScalarSignature sig, const CycNumber& c);
  LaurentPoly(ScalarSignature sig, const CycNumber& c, const Exponent& e);

  const ScalarSignature& signature() const noexcept { return sig_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;

  void add_term(const Exponent& e, const CycNumber& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly scaled(const CycNumber& c) const;
  LaurentPoly scaled(const GroupUnit& u) const;
  // Multiply by t^e.
  LaurentPoly shifted(const Exponent& e) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

private:
  ScalarSignature sig_;
  Terms terms_;
};

class FieldElem {
public:
  // Zero of the plain rationals.
  FieldElem() : FieldElem(ScalarSignature{}) {}
  explicit FieldElem(ScalarSignature sig);
  FieldElem(ScalarSignature sig, const Rational& value);
  FieldElem(ScalarSignature sig, const CycNumber& value);
  FieldElem(LaurentPoly num, LaurentPoly den);

  static FieldElem zero(ScalarSignature sig) { return FieldElem(sig); }
  static FieldElem one(ScalarSignature sig) { return FieldElem(sig, Rational(1)); }
  static FieldElem free_generator(ScalarSignature sig, int index);

  const ScalarSignature& signature() const noexcept { return num_.signature(); }
  const LaurentPoly& numerator() const noexcept { return num_; }
  const LaurentPoly& denominator() const noexcept { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  // A single term c * t^e over denominator 1.
  bool is_monomial() const { return den_.is_one() && num_.is_monomial(); }
  // Value in Q, if it is one.
  bool is_rational() const;

  FieldElem inverse() const;
  FieldElem scaled(const GroupUnit& u) const;
  FieldElem pow(std::int64_t e) const;
  // Same value regarded in another signature; only plain rationals move.
  FieldElem promoted(ScalarSignature sig) const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

  // Printed in the series expression grammar; `atomic` is true when the
  // string needs no parentheses as a factor.
  std::string to_string() const;
  bool prints_atomic() const;

private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

// zeta^torsion * t^free as a field element; a group homomorphism.
FieldElem field_embed(const GroupUnit& u);
FieldElem field_inv(const FieldElem& a);

} // namespace qseries
