#pragma once

// Reference computations for the tests. These avoid the library's lattice
// and multiplication code paths: scalars are tracked as raw exponent tuples
// read off the matrix entries, monomial products are done by rewriting words
// one adjacent swap at a time, and lattices are found by exhaustive search.

#include <complex>
#include <random>
#include <set>
#include <vector>

#include "qseries/qmatrix.hpp"
#include "qseries/series.hpp"

namespace oracle {

using namespace qseries;

// zeta^torsion * t^free, torsion kept unreduced.
struct RawScalar {
  std::int64_t torsion = 0;
  std::vector<std::int64_t> free;

  explicit RawScalar(int r = 0) : free(static_cast<std::size_t>(r), 0) {}

  void absorb(const GroupUnit& u, std::int64_t times)
  {
    torsion += times * u.torsion();
    for (std::size_t k = 0; k < free.size(); ++k)
      free[k] += times * u.free()(static_cast<Eigen::Index>(k));
  }

  bool trivial(int m) const
  {
    if (((torsion % m) + m) % m != 0)
      return false;
    for (auto f : free) {
      if (f != 0)
        return false;
    }
    return true;
  }

  GroupUnit to_unit(ScalarSignature sig) const
  {
    Exponent f(static_cast<Eigen::Index>(free.size()));
    for (std::size_t k = 0; k < free.size(); ++k)
      f(static_cast<Eigen::Index>(k)) = free[k];
    return GroupUnit(sig, torsion, f);
  }
};

// prod q_ij^{s_i t_j} straight from the entries.
inline RawScalar sigma_raw(const QMatrix& q, const Exponent& s, const Exponent& t)
{
  RawScalar out(q.signature().free_rank);
  for (int i = 0; i < q.size(); ++i) {
    for (int j = 0; j < q.size(); ++j)
      out.absorb(q(i, j), s(i) * t(j));
  }
  return out;
}

inline bool sigma_trivial(const QMatrix& q, const Exponent& s, const Exponent& t)
{
  return sigma_raw(q, s, t).trivial(q.signature().torsion_order);
}

inline bool in_radical(const QMatrix& q, const Exponent& s)
{
  for (int j = 0; j < q.size(); ++j) {
    if (!sigma_trivial(q, s, unit_exponent(q.size(), j)))
      return false;
  }
  return true;
}

// Word x_{w0} x_{w1} ... bubble-sorted into x_1^. x_2^. ..., applying
// x_i x_j = q_ij x_j x_i at every swap of an adjacent out-of-order pair.
inline RawScalar sort_word(const QMatrix& q, std::vector<int> word)
{
  RawScalar scalar(q.signature().free_rank);
  for (std::size_t pass = 0; pass < word.size(); ++pass) {
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if (word[k] > word[k + 1]) {
        scalar.absorb(q(word[k], word[k + 1]), 1);
        std::swap(word[k], word[k + 1]);
      }
    }
  }
  return scalar;
}

inline std::vector<int> word_of(const Exponent& s)
{
  std::vector<int> w;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    for (std::int64_t k = 0; k < s(i); ++k)
      w.push_back(static_cast<int>(i));
  }
  return w;
}

// x^s * x^t = scalar * x^{s+t}, for s, t in N^n.
inline GroupUnit word_product_scalar(const QMatrix& q, const Exponent& s, const Exponent& t)
{
  std::vector<int> w = word_of(s);
  const std::vector<int> wt = word_of(t);
  w.insert(w.end(), wt.begin(), wt.end());
  return sort_word(q, w).to_unit(q.signature());
}

// Expansion of a product of linear factors sum_i a_i x_i by summing over all
// words; feasible for small powers only.
inline TermMap expand_linear_power(const QMatrix& q, const std::vector<FieldElem>& coeffs, int power)
{
  const int n = q.size();
  TermMap out;
  std::vector<int> word(static_cast<std::size_t>(power), 0);
  for (;;) {
    FieldElem c = FieldElem::one(q.signature());
    Exponent e = Exponent::Zero(n);
    for (int letter : word) {
      c *= coeffs[static_cast<std::size_t>(letter)];
      e(letter) += 1;
    }
    c *= field_embed(sort_word(q, word).to_unit(q.signature()));
    auto [it, fresh] = out.emplace(e, c);
    if (!fresh)
      it->second += c;
    std::size_t k = 0;
    while (k < word.size() && ++word[k] == n)
      word[k++] = 0;
    if (k == word.size())
      break;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

// All s in [-R, R]^n with x^s central.
inline std::vector<Exponent> box_radical(const QMatrix& q, int R)
{
  const int n = q.size();
  std::vector<Exponent> out;
  Exponent s = Exponent::Constant(n, -R);
  if (n == 0)
    return {Exponent(0)};
  for (;;) {
    if (in_radical(q, s))
      out.push_back(s);
    int k = 0;
    while (k < n && ++s(k) > R)
      s(k++) = -R;
    if (k == n)
      break;
  }
  return out;
}

// [Z^n : S] for a root-of-unity matrix: S contains m Z^n, so it is the number
// of distinct characters t -> sigma(s, t) for s in [0, m)^n.
inline long long index_by_characters(const QMatrix& q)
{
  const int n = q.size();
  const int m = q.signature().torsion_order;
  std::set<std::vector<std::int64_t>> seen;
  Exponent s = Exponent::Zero(n);
  for (;;) {
    std::vector<std::int64_t> ch;
    for (int j = 0; j < n; ++j) {
      const auto raw = sigma_raw(q, s, unit_exponent(n, j));
      ch.push_back(((raw.torsion % m) + m) % m);
    }
    seen.insert(ch);
    int k = 0;
    while (k < n && ++s(k) == m)
      s(k++) = 0;
    if (k == n)
      break;
  }
  return static_cast<long long>(seen.size());
}

// Numerical value at zeta = exp(2 pi i / m).
inline std::complex<double> complex_value(const CycNumber& c)
{
  const double pi = 3.14159265358979323846;
  const std::complex<double> z = std::polar(1.0, 2 * pi / c.order());
  std::complex<double> sum = 0, power = 1;
  for (Eigen::Index k = 0; k < c.coeffs().size(); ++k) {
    sum += c.coeffs()(k).convert_to<double>() * power;
    power *= z;
  }
  return sum;
}

// Random fixtures.

inline QMatrix random_qmatrix(std::mt19937_64& rng, int n, ScalarSignature sig, int spread = 2)
{
  std::uniform_int_distribution<std::int64_t> tor(0, sig.torsion_order - 1);
  std::uniform_int_distribution<std::int64_t> fr(-spread, spread);
  std::vector<GroupUnit> upper;
  for (int k = 0; k < n * (n - 1) / 2; ++k) {
    Exponent f(sig.free_rank);
    for (int j = 0; j < sig.free_rank; ++j)
      f(j) = fr(rng);
    upper.emplace_back(sig, tor(rng), f);
  }
  return QMatrix::from_upper(sig, n, upper);
}

inline FieldElem random_coefficient(std::mt19937_64& rng, ScalarSignature sig)
{
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3), coin(0, 3);
  int a = 0;
  while (a == 0)
    a = num(rng);
  FieldElem c(sig, Rational(a) / Rational(den(rng)));
  if (sig.torsion_order > 1 && coin(rng) == 0)
    c = c.scaled(GroupUnit::zeta(sig, coin(rng) + 1));
  if (sig.free_rank > 0 && coin(rng) == 0)
    c = c.scaled(GroupUnit::free_generator(sig, coin(rng) % sig.free_rank));
  if (coin(rng) == 0)
    c += FieldElem::one(sig);
  if (c.is_zero())
    c = FieldElem::one(sig);
  return c;
}

inline Exponent random_exponent(std::mt19937_64& rng, int n, int max_degree)
{
  std::uniform_int_distribution<int> pick(0, n - 1), deg(0, max_degree);
  Exponent e = Exponent::Zero(n);
  const int d = deg(rng);
  for (int k = 0; k < d; ++k)
    e(pick(rng)) += 1;
  return e;
}

inline SkewSeries random_series(std::mt19937_64& rng, int n, ScalarSignature sig, int precision, int max_terms)
{
  std::uniform_int_distribution<int> count(1, max_terms);
  SkewSeries f(n, sig, precision);
  const int terms = count(rng);
  for (int k = 0; k < terms; ++k)
    f.add_term(random_exponent(rng, n, precision - 1), random_coefficient(rng, sig));
  return f;
}

inline SkewSeries random_unit(std::mt19937_64& rng, int n, ScalarSignature sig, int precision, int max_terms)
{
  SkewSeries f = random_series(rng, n, sig, precision, max_terms);
  if (f.constant_term().is_zero())
    f.add_term(Exponent::Zero(n), random_coefficient(rng, sig));
  return f;
}

} // namespace oracle
