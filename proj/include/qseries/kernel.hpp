#pragma once

// The radical S = { s : sigma(s, t) = 1 for all t } of the bicharacter,
// its index in Z^n, coset representatives, and genericity of q.

#include <optional>

#include "qseries/lattice.hpp"
#include "qseries/qmatrix.hpp"

namespace qseries {

class KernelLattice {
public:
  KernelLattice(int ambient_n, IntMatrix generators);

  // Rows form the Hermite normal form basis b_1..b_r.
  const IntMatrix& basis() const noexcept { return basis_; }
  int rank() const noexcept { return static_cast<int>(basis_.rows()); }
  int ambient_n() const noexcept { return ambient_n_; }

  bool contains(const IntVector& v) const { return in_row_lattice(basis_, v); }
  bool contains(const Exponent& v) const { return contains(IntVector(v.cast<Integer>())); }

  std::vector<Exponent> basis_vectors() const;

  friend bool operator==(const KernelLattice& a, const KernelLattice& b)
  {
    return a.ambient_n_ == b.ambient_n_ && a.basis_ == b.basis_;
  }

private:
  int ambient_n_;
  IntMatrix basis_;
};

KernelLattice kernel_lattice(const QMatrix& q);

// [Z^n : S] when rank S = n; std::nullopt stands for an infinite index.
std::optional<Integer> subgroup_index(const KernelLattice& S);

// The subgroup generated by q_ij (i < j) is free abelian of rank n(n-1)/2.
bool is_generic(const QMatrix& q);

// Canonical coset representatives for Z^n / S from the Smith form of the
// basis of S: coordinates e V are reduced modulo the elementary divisors.
class Transversal {
public:
  explicit Transversal(const KernelLattice& S);

  Exponent coset_rep(const Exponent& e) const;
  bool same_coset(const Exponent& a, const Exponent& b) const { return coset_rep(a) == coset_rep(b); }

  const IntMatrix& change_of_basis() const noexcept { return v_; }
  const IntMatrix& change_of_basis_inverse() const noexcept { return v_inv_; }
  const std::vector<Integer>& elementary_divisors() const noexcept { return divisors_; }

private:
  IntMatrix v_;
  IntMatrix v_inv_;
  std::vector<Integer> divisors_;
};

inline Transversal transversal(const KernelLattice& S) { return Transversal(S); }

// Inverse of a unimodular integer matrix.
IntMatrix unimodular_inverse(const IntMatrix& m);

} // namespace qseries
