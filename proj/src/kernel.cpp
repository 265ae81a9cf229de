#include "qseries/kernel.hpp"

#include "qseries/errors.hpp"

namespace qseries {

KernelLattice::KernelLattice(int ambient_n, IntMatrix generators) : ambient_n_(ambient_n)
{
  if (generators.cols() != ambient_n)
    throw DimensionMismatch("lattice generators must have " + std::to_string(ambient_n) + " columns");
  basis_ = hermite_normal_form(generators);
}

std::vector<Exponent> KernelLattice::basis_vectors() const
{
  std::vector<Exponent> out;
  for (Eigen::Index r = 0; r < basis_.rows(); ++r) {
    Exponent e(ambient_n_);
    for (int j = 0; j < ambient_n_; ++j)
      e(j) = to_int64(basis_(r, j));
    out.push_back(e);
  }
  return out;
}

KernelLattice kernel_lattice(const QMatrix& q)
{
  const int n = q.size();
  const auto& sig = q.signature();
  const int r = sig.free_rank;
  // Unknowns (s, lambda) in Z^{2n}; for each column j:
  //   sum_i s_i F_k(i,j) = 0                      (each free generator k)
  //   sum_i s_i A(i,j) - m * lambda_j = 0         (torsion, a congruence mod m)
  IntMatrix system = IntMatrix::Zero(2 * n, n * r + n);
  for (int k = 0; k < r; ++k) {
    const auto& f = q.free_exponents(k);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j)
        system(i, k * n + j) = f(i, j);
    }
  }
  const auto& a = q.torsion_exponents();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i)
      system(i, r * n + j) = a(i, j);
    system(n + j, r * n + j) = -sig.torsion_order;
  }
  const IntMatrix kernel = left_kernel(system);
  return KernelLattice(n, kernel.leftCols(n));
}

std::optional<Integer> subgroup_index(const KernelLattice& S)
{
  if (S.rank() < S.ambient_n())
    return std::nullopt;
  Integer index(1);
  for (int i = 0; i < S.rank(); ++i)
    index *= S.basis()(i, i);
  return abs_value(index);
}

bool is_generic(const QMatrix& q)
{
  const int n = q.size();
  const int pairs = n * (n - 1) / 2;
  if (pairs == 0)
    return true;
  const int r = q.signature().free_rank;
  if (r < pairs)
    return false;
  IntMatrix exps(r, pairs);
  int col = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++col) {
      for (int k = 0; k < r; ++k)
        exps(k, col) = q.free_exponents(k)(i, j);
    }
  }
  return smith_normal_form(exps).rank == pairs;
}

IntMatrix unimodular_inverse(const IntMatrix& m)
{
  const Eigen::Index n = m.rows();
  Matrix<Rational> aug(n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      aug(i, j) = Rational(m(i, j));
      aug(i, n + j) = Rational(i == j ? 1 : 0);
    }
  }
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && aug(p, c) == 0)
      ++p;
    if (p == n)
      throw Error("matrix is singular");
    aug.row(c).swap(aug.row(p));
    const Rational pivot = aug(c, c);
    aug.row(c) /= pivot;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i != c && aug(i, c) != 0) {
        const Rational f = aug(i, c);
        aug.row(i) -= aug.row(c) * f;
      }
    }
  }
  IntMatrix inv(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Rational& v = aug(i, n + j);
      if (mp::denominator(v) != 1)
        throw Error("matrix is not unimodular");
      inv(i, j) = Integer(mp::numerator(v));
    }
  }
  return inv;
}

Transversal::Transversal(const KernelLattice& S)
{
  const auto snf = smith_normal_form(S.basis());
  v_ = snf.V;
  v_inv_ = unimodular_inverse(v_);
  for (Eigen::Index i = 0; i < snf.rank; ++i)
    divisors_.push_back(snf.divisor(i));
}

Exponent Transversal::coset_rep(const Exponent& e) const
{
  if (e.size() != v_.rows())
    throw DimensionMismatch("exponent length does not match the lattice");
  IntVector y = (e.cast<Integer>().transpose() * v_).transpose();
  for (std::size_t i = 0; i < divisors_.size(); ++i)
    y(static_cast<Eigen::Index>(i)) = floor_mod(y(static_cast<Eigen::Index>(i)), divisors_[i]);
  const IntVector rep = (y.transpose() * v_inv_).transpose();
  Exponent out(rep.size());
  for (Eigen::Index i = 0; i < rep.size(); ++i)
    out(i) = to_int64(rep(i));
  return out;
}

} // namespace qseries
