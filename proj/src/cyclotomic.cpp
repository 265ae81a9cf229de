#include "qseries/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "qseries/errors.hpp"

namespace qseries {

std::int64_t to_int64(const Integer& v)
{
  if (v > Integer(INT64_MAX) || v < Integer(INT64_MIN))
    throw Error("integer value does not fit in 64 bits: " + v.str());
  return v.convert_to<std::int64_t>();
}

std::string to_string(const Rational& r) { return r.str(); }

int euler_phi(int m)
{
  if (m < 1)
    throw ConfigurationError("cyclotomic order must be positive, got " + std::to_string(m));
  int result = m;
  int rest = m;
  for (int p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      while (rest % p == 0)
        rest /= p;
      result -= result / p;
    }
  }
  if (rest > 1)
    result -= result / rest;
  return result;
}

IntVector poly_mul(const IntVector& a, const IntVector& b)
{
  IntVector out = IntVector::Zero(a.size() + b.size() - 1);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) == 0)
      continue;
    for (Eigen::Index j = 0; j < b.size(); ++j)
      out(i + j) += a(i) * b(j);
  }
  return out;
}

IntVector poly_exact_div(const IntVector& num, const IntVector& den)
{
  // den is monic in every use here
  const Eigen::Index dn = den.size() - 1;
  IntVector rem = num;
  IntVector quot = IntVector::Zero(num.size() - dn);
  for (Eigen::Index k = num.size() - 1; k >= dn; --k) {
    const Integer c = rem(k) / den(dn);
    quot(k - dn) = c;
    for (Eigen::Index j = 0; j <= dn; ++j)
      rem(k - dn + j) -= c * den(j);
  }
  for (Eigen::Index k = 0; k < dn; ++k) {
    if (rem(k) != 0)
      throw Error("polynomial division is not exact");
  }
  return quot;
}

namespace {

struct CyclotomicTables {
  IntVector phi_poly;
  // zeta_powers[k] = z^k mod Phi_m, enough entries for a product of two
  // reduced elements and for shifts by any k < m.
  std::vector<Vector<Rational>> zeta_powers;
};

std::mutex& table_mutex()
{
  static std::mutex mu;
  return mu;
}

std::map<int, IntVector>& poly_cache()
{
  static std::map<int, IntVector> cache;
  return cache;
}

IntVector compute_cyclotomic_locked(int m)
{
  auto& cache = poly_cache();
  if (auto it = cache.find(m); it != cache.end())
    return it->second;
  IntVector num = IntVector::Zero(m + 1);
  num(0) = -1;
  num(m) = 1;
  IntVector divisor_product = IntVector::Ones(1);
  for (int d = 1; d < m; ++d) {
    if (m % d == 0)
      divisor_product = poly_mul(divisor_product, compute_cyclotomic_locked(d));
  }
  IntVector phi = poly_exact_div(num, divisor_product);
  cache.emplace(m, phi);
  return phi;
}

const CyclotomicTables& tables(int m)
{
  static std::map<int, CyclotomicTables> cache;
  std::lock_guard<std::mutex> lock(table_mutex());
  if (auto it = cache.find(m); it != cache.end())
    return it->second;
  CyclotomicTables t;
  t.phi_poly = compute_cyclotomic_locked(m);
  const int phi = static_cast<int>(t.phi_poly.size()) - 1;
  const int count = std::max(2 * phi - 1, phi + m);
  Vector<Rational> current = Vector<Rational>::Zero(phi);
  current(0) = 1;
  t.zeta_powers.reserve(count);
  for (int k = 0; k < count; ++k) {
    t.zeta_powers.push_back(current);
    // multiply by z and reduce the overflow with the monic Phi_m
    Vector<Rational> next = Vector<Rational>::Zero(phi);
    const Rational top = current(phi - 1);
    for (int i = phi - 1; i > 0; --i)
      next(i) = current(i - 1);
    for (int i = 0; i < phi; ++i)
      next(i) -= top * Rational(t.phi_poly(i));
    current = next;
  }
  return cache.emplace(m, std::move(t)).first->second;
}

int common_order(int a, int b)
{
  if (a == b)
    return a;
  if (a == 1)
    return b;
  if (b == 1)
    return a;
  throw ConfigurationError("cyclotomic orders differ: " + std::to_string(a) + " vs " +
                           std::to_string(b));
}

} // namespace

const IntVector& cyclotomic_polynomial(int m)
{
  euler_phi(m);
  return tables(m).phi_poly;
}

CycNumber::CycNumber() : CycNumber(1) {}

CycNumber::CycNumber(int order) : order_(order), coeffs_(Vector<Rational>::Zero(euler_phi(order))) {}

CycNumber::CycNumber(int order, const Rational& value) : CycNumber(order) { coeffs_(0) = value; }

CycNumber::CycNumber(int order, Vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs))
{
  if (coeffs_.size() != euler_phi(order))
    throw ConfigurationError("cyclotomic coefficient vector has wrong length");
}

CycNumber CycNumber::zeta_power(int order, std::int64_t k)
{
  const auto& t = tables(order);
  return CycNumber(order, t.zeta_powers[static_cast<std::size_t>(floor_mod(k, order))]);
}

bool CycNumber::is_zero() const
{
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_(i) != 0)
      return false;
  }
  return true;
}

bool CycNumber::is_rational() const
{
  for (Eigen::Index i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_(i) != 0)
      return false;
  }
  return true;
}

bool CycNumber::is_one() const { return is_rational() && coeffs_(0) == 1; }

int CycNumber::weight() const
{
  int w = 0;
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
    w += coeffs_(i) != 0;
  return w;
}

CycNumber CycNumber::promoted(int order) const
{
  if (order == order_)
    return *this;
  if (order_ != 1)
    throw ConfigurationError("cannot move a non-rational cyclotomic number between fields");
  return CycNumber(order, coeffs_(0));
}

CycNumber CycNumber::operator-() const { return CycNumber(order_, Vector<Rational>(-coeffs_)); }

CycNumber& CycNumber::operator+=(const CycNumber& o)
{
  const int m = common_order(order_, o.order_);
  if (order_ != m)
    *this = promoted(m);
  if (o.order_ == m)
    coeffs_ += o.coeffs_;
  else
    coeffs_(0) += o.coeffs_(0);
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) { return *this += -o; }

CycNumber& CycNumber::operator*=(const Rational& r)
{
  coeffs_ *= r;
  return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& o)
{
  const int m = common_order(order_, o.order_);
  if (o.is_rational())
    return *this *= o.coeffs_(0);
  if (is_rational()) {
    const Rational c = coeffs_(0);
    *this = o;
    return *this *= c;
  }
  const auto& t = tables(m);
  const Eigen::Index phi = coeffs_.size();
  Vector<Rational> out = Vector<Rational>::Zero(phi);
  std::vector<Rational> product(static_cast<std::size_t>(2 * phi - 1));
  for (Eigen::Index i = 0; i < phi; ++i) {
    if (coeffs_(i) == 0)
      continue;
    for (Eigen::Index j = 0; j < phi; ++j) {
      if (o.coeffs_(j) != 0)
        product[static_cast<std::size_t>(i + j)] += coeffs_(i) * o.coeffs_(j);
    }
  }
  for (std::size_t k = 0; k < product.size(); ++k) {
    if (product[k] != 0)
      out += t.zeta_powers[k] * product[k];
  }
  coeffs_ = std::move(out);
  return *this;
}

CycNumber CycNumber::times_zeta_power(std::int64_t k) const
{
  const auto shift = static_cast<std::size_t>(floor_mod(k, order_));
  if (shift == 0)
    return *this;
  const auto& t = tables(order_);
  Vector<Rational> out = Vector<Rational>::Zero(coeffs_.size());
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_(i) != 0)
      out += t.zeta_powers[static_cast<std::size_t>(i) + shift] * coeffs_(i);
  }
  return CycNumber(order_, std::move(out));
}

CycNumber CycNumber::inverse() const
{
  if (is_zero())
    throw DivisionByZero("inverse of zero cyclotomic number");
  if (is_rational())
    return CycNumber(order_, Rational(1) / coeffs_(0));
  // Solve M x = e_0 where column k of M is this * z^k.
  const Eigen::Index phi = coeffs_.size();
  Matrix<Rational> aug(phi, phi + 1);
  for (Eigen::Index k = 0; k < phi; ++k)
    aug.col(k) = times_zeta_power(k).coeffs_;
  aug.col(phi).setZero();
  aug(0, phi) = 1;
  for (Eigen::Index col = 0; col < phi; ++col) {
    Eigen::Index pivot = col;
    while (pivot < phi && aug(pivot, col) == 0)
      ++pivot;
    if (pivot == phi)
      throw DivisionByZero("singular multiplication matrix in cyclotomic inverse");
    aug.row(col).swap(aug.row(pivot));
    const Rational p = aug(col, col);
    aug.row(col) /= p;
    for (Eigen::Index r = 0; r < phi; ++r) {
      if (r != col && aug(r, col) != 0) {
        const Rational f = aug(r, col);
        aug.row(r) -= aug.row(col) * f;
      }
    }
  }
  return CycNumber(order_, Vector<Rational>(aug.col(phi)));
}

bool operator==(const CycNumber& a, const CycNumber& b)
{
  if (a.order_ == b.order_)
    return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational())
    return a.coeffs_(0) == b.coeffs_(0);
  return false;
}

std::string CycNumber::to_string() const
{
  std::string out;
  bool first = true;
  for (Eigen::Index k = 0; k < coeffs_.size(); ++k) {
    Rational c = coeffs_(k);
    if (c == 0)
      continue;
    const bool negative = c < 0;
    if (negative)
      c = -c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (k == 0) {
      out += c.str();
      continue;
    }
    if (c != 1)
      out += c.str() + "*";
    out += "zeta";
    if (k > 1)
      out += "^" + std::to_string(k);
  }
  return first ? "0" : out;
}

} // namespace qseries
