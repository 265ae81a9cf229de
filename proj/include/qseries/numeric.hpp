#pragma once

// Exact scalar types and the dense Eigen aliases used across the library.

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace qseries {

namespace mp = boost::multiprecision;

// Expression templates are disabled so that Eigen sees plain value types.
using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

// Exponent vectors of monomials and of free scalar generators.
using Exponent = Vector<std::int64_t>;
using ExponentMatrix = Matrix<std::int64_t>;

inline Exponent zero_exponent(Eigen::Index n) { return Exponent::Zero(n); }

inline Exponent unit_exponent(Eigen::Index n, Eigen::Index i)
{
  Exponent e = Exponent::Zero(n);
  e(i) = 1;
  return e;
}

inline std::int64_t total_degree(const Exponent& e) { return e.sum(); }

// Lexicographic comparison of equal-length exponent vectors.
inline bool lex_less(const Exponent& a, const Exponent& b)
{
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i))
      return a(i) < b(i);
  }
  return false;
}

// Graded lexicographic order: total degree first, then lexicographic
// (so x1 x2 precedes x2^2, and x2 precedes x1^2).
//
// Lexicographic here follows the reading of exponent tuples as words in
// x1 > x2 > ... : the tuple with the larger leading exponent comes first.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const
  {
    const auto da = total_degree(a), db = total_degree(b);
    if (da != db)
      return da < db;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) != b(i))
        return a(i) > b(i);
    }
    return false;
  }
};

struct LexLess {
  bool operator()(const Exponent& a, const Exponent& b) const { return lex_less(a, b); }
};

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m)
{
  const auto r = a % m;
  return r < 0 ? r + m : r;
}

inline Integer floor_mod(const Integer& a, const Integer& m)
{
  Integer r = a % m;
  if (r < 0)
    r += (m < 0 ? -m : m);
  return r;
}

std::int64_t to_int64(const Integer& v);

std::string to_string(const Rational& r);

} // namespace qseries
