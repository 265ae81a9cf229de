#pragma once

// Multiplicatively antisymmetric matrices q = (q_ij) of commutation scalars
// and the bicharacter they define on Z^n.

#include <vector>

#include "qseries/group_unit.hpp"
#include "qseries/numeric.hpp"

namespace qseries {

// Sorted zero-based variable indices.
using IndexSet = std::vector<int>;

class QMatrix {
public:
  // The all-ones (commutative) matrix.
  QMatrix(ScalarSignature sig, int n);

  // upper lists q_ij for i < j in row-major order (q_12, q_13, ..., q_23, ...).
  static QMatrix from_upper(ScalarSignature sig, int n, const std::vector<GroupUnit>& upper);
  // Full matrix; checked for q_ii = 1 and q_ij q_ji = 1.
  static QMatrix from_entries(ScalarSignature sig, const std::vector<std::vector<GroupUnit>>& entries);

  int size() const noexcept { return n_; }
  const ScalarSignature& signature() const noexcept { return sig_; }

  // Entry q_ij (zero-based); q_ji is kept as the inverse.
  GroupUnit operator()(int i, int j) const;
  void set(int i, int j, const GroupUnit& value);

  // Exponent of zeta in each q_ij, and of t_k in each q_ij.
  const ExponentMatrix& torsion_exponents() const noexcept { return torsion_; }
  const ExponentMatrix& free_exponents(int k) const { return free_.at(static_cast<std::size_t>(k)); }

  // The unit whose exponents are the bilinear forms s^T E t for the given
  // exponent matrices.
  GroupUnit bilinear(const Exponent& s, const Exponent& t, bool strictly_lower) const;

  friend bool operator==(const QMatrix& a, const QMatrix& b);

private:
  ScalarSignature sig_;
  int n_;
  ExponentMatrix torsion_;
  std::vector<ExponentMatrix> free_;
};

// sigma(s, t) = prod_{i,j} q_ij^{s_i t_j}; x^s x^t = sigma(s,t) x^t x^s.
GroupUnit sigma(const QMatrix& q, const Exponent& s, const Exponent& t);

// The scalar mu(s,t) with x^s * x^t = mu(s,t) x^{s+t} in normal order
// x_1^{.} ... x_n^{.}: mu(s,t) = prod_{i<j} q_ji^{s_j t_i}.
GroupUnit normal_order_scalar(const QMatrix& q, const Exponent& s, const Exponent& t);

// Submatrix on the indices not in w, order preserved.
QMatrix restrict_to_stratum(const QMatrix& q, const IndexSet& w);

} // namespace qseries
