#pragma once

// Truncated skew power series in R = k_q[[x_1..x_n]] and elements
// x^{-u} f of its Laurent localization.
//
// A SkewSeries of precision d knows every coefficient of total degree < d;
// everything at degree >= d is unknown. Binary operations work at the
// smaller of the operand precisions.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qseries/field.hpp"
#include "qseries/qmatrix.hpp"

namespace qseries {

inline constexpr int kDefaultPrecision = 8;

using TermMap = std::map<Exponent, FieldElem, GrlexLess>;

class SkewSeries {
public:
  SkewSeries(int n, ScalarSignature sig, int precision);

  static SkewSeries constant(int n, ScalarSignature sig, int precision, const FieldElem& c);
  static SkewSeries one(int n, ScalarSignature sig, int precision);
  static SkewSeries monomial(int n, ScalarSignature sig, int precision, const Exponent& s);
  static SkewSeries monomial(int n, ScalarSignature sig, int precision, const Exponent& s, const FieldElem& c);
  // The generator x_{i+1} (zero-based i).
  static SkewSeries variable(int n, ScalarSignature sig, int precision, int i);

  int variables() const noexcept { return n_; }
  const ScalarSignature& signature() const noexcept { return sig_; }
  int precision() const noexcept { return precision_; }
  const TermMap& terms() const noexcept { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  FieldElem coefficient(const Exponent& s) const;
  FieldElem constant_term() const { return coefficient(Exponent::Zero(n_)); }
  // Least total degree of a stored term; precision() when zero.
  int order() const;

  // Adds c x^s; terms at degree >= precision are dropped.
  void add_term(const Exponent& s, const FieldElem& c);
  SkewSeries truncated(int precision) const;
  // Homogeneous component of the given total degree.
  SkewSeries homogeneous_part(int degree) const;

  SkewSeries operator-() const;
  SkewSeries& operator+=(const SkewSeries& o);
  SkewSeries& operator-=(const SkewSeries& o);
  friend SkewSeries operator+(SkewSeries a, const SkewSeries& b) { return a += b; }
  friend SkewSeries operator-(SkewSeries a, const SkewSeries& b) { return a -= b; }
  // Scalars are central.
  friend SkewSeries operator*(const FieldElem& c, const SkewSeries& f);

  // Agreement of all coefficients below the smaller precision.
  friend bool operator==(const SkewSeries& a, const SkewSeries& b);
  friend bool operator!=(const SkewSeries& a, const SkewSeries& b) { return !(a == b); }

private:
  void check_compatible(const SkewSeries& o) const;

  int n_;
  ScalarSignature sig_;
  int precision_;
  TermMap terms_;
};

// (mu(s,t), s + t) with x^s x^t = mu(s,t) x^{s+t}.
std::pair<GroupUnit, Exponent> mono_mul(const QMatrix& q, const Exponent& s, const Exponent& t);

SkewSeries mul(const QMatrix& q, const SkewSeries& f, const SkewSeries& g);
SkewSeries power(const QMatrix& q, const SkewSeries& f, int k);
// Two-sided inverse; the constant term must be nonzero.
SkewSeries invert(const QMatrix& q, const SkewSeries& f);

// x^v f x^{-v}: each c x^s becomes sigma(v, s) c x^s. v may be negative.
SkewSeries conjugate_by_monomial(const QMatrix& q, const Exponent& v, const SkewSeries& f);
// Zero-based generator index i.
SkewSeries conjugate_by_xi(const QMatrix& q, int i, const SkewSeries& f);

class TorusElement {
public:
  explicit TorusElement(std::vector<FieldElem> entries);
  static TorusElement from_rationals(ScalarSignature sig, const std::vector<Rational>& values);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  const std::vector<FieldElem>& entries() const noexcept { return entries_; }
  // h(s) = h_1^{s_1} ... h_n^{s_n}.
  FieldElem character(const Exponent& s) const;

private:
  std::vector<FieldElem> entries_;
};

SkewSeries apply_torus(const TorusElement& h, const SkewSeries& f);

struct NormalityReport {
  bool normal = true;
  int precision = 0;
  // First generator (zero-based) and total degree where the system failed.
  int failing_generator = -1;
  int failing_degree = -1;
};

// For each x_j, looks for g_j with f x_j = g_j f mod J^d. The verdict is
// "normal to precision d" only.
NormalityReport normality_check(const QMatrix& q, const SkewSeries& f);
inline bool is_normal(const QMatrix& q, const SkewSeries& f) { return normality_check(q, f).normal; }

// Grlex-least monomial and its coefficient.
std::pair<Exponent, FieldElem> grlex_leading(const SkewSeries& f);

// x^{-shift} * body.
class LaurentElem {
public:
  explicit LaurentElem(SkewSeries body);
  LaurentElem(Exponent shift, SkewSeries body);

  // The monomial x^v (any v in Z^n), known below total degree known_below.
  static LaurentElem monomial(const QMatrix& q, const Exponent& v, int known_below);
  // Rebuilds from expanded terms with the smallest non-negative shift.
  static LaurentElem from_terms(const QMatrix& q, const TermMap& terms, int known_below);

  const Exponent& shift() const noexcept { return shift_; }
  const SkewSeries& body() const noexcept { return body_; }
  int variables() const noexcept { return body_.variables(); }
  // Coefficients of total degree below this value are determined.
  int known_below() const { return body_.precision() - static_cast<int>(total_degree(shift_)); }
  bool is_power_series() const { return shift_.isZero(); }

private:
  Exponent shift_;
  SkewSeries body_;
};

// Least total degree of a term, capped at known_below().
int lowest_degree(const LaurentElem& a);

// Terms c x^e, e in Z^n, of x^{-shift} body in normal order.
TermMap expand(const QMatrix& q, const LaurentElem& a);

LaurentElem laurent_add(const QMatrix& q, const LaurentElem& a, const LaurentElem& b);
LaurentElem laurent_mul(const QMatrix& q, const LaurentElem& a, const LaurentElem& b);
// Requires body = x^v u with u(0) != 0.
LaurentElem laurent_inv(const QMatrix& q, const LaurentElem& a);
bool laurent_congruent(const QMatrix& q, const LaurentElem& a, const LaurentElem& b);

// Monomial multiplication on expanded terms.
TermMap left_multiply_monomial(const QMatrix& q, const Exponent& w, const TermMap& terms);
TermMap right_multiply_monomial(const QMatrix& q, const TermMap& terms, const Exponent& w);

std::string monomial_to_string(const Exponent& s);
std::string terms_to_string(const TermMap& terms);
std::string to_string(const SkewSeries& f);
std::string to_string(const QMatrix& q, const LaurentElem& a);

} // namespace qseries
