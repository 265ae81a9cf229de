#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_m) = Q[z] / Phi_m(z).

#include <cstdint>
#include <string>

#include "qseries/numeric.hpp"

namespace qseries {

int euler_phi(int m);

// Coefficients of Phi_m, lowest degree first; length euler_phi(m) + 1.
// Built from z^m - 1 = prod_{d | m} Phi_d and cached per m.
const IntVector& cyclotomic_polynomial(int m);

// Integer polynomial helpers (coefficients lowest degree first).
IntVector poly_mul(const IntVector& a, const IntVector& b);
IntVector poly_exact_div(const IntVector& num, const IntVector& den);

class CycNumber {
public:
  // The zero of Q (order 1).
  CycNumber();
  explicit CycNumber(int order);
  CycNumber(int order, const Rational& value);
  CycNumber(int order, Vector<Rational> coeffs);

  static CycNumber zeta_power(int order, std::int64_t k);

  int order() const noexcept { return order_; }
  const Vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // True when the value lies in Q (only the constant coefficient is nonzero).
  bool is_rational() const;
  Rational rational_part() const { return coeffs_(0); }

  CycNumber inverse() const;
  CycNumber times_zeta_power(std::int64_t k) const;
  // Same value regarded as an element of Q(zeta_order); *this must be rational
  // or already of that order.
  CycNumber promoted(int order) const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber& operator*=(const Rational& r);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator*(CycNumber a, const Rational& r) { return a *= r; }
  friend bool operator==(const CycNumber& a, const CycNumber& b);
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

  // Number of nonzero coefficients.
  int weight() const;

  // e.g. "3/2", "zeta", "1 - 2*zeta^3".
  std::string to_string() const;

private:
  int order_;
  Vector<Rational> coeffs_;
};

} // namespace qseries
