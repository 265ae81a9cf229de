#pragma once

// Integer normal forms on dense Eigen matrices, templated on the scalar.
// Scalar is any exact integer type with truncating division (std::int64_t,
// Integer).

#include <utility>

#include "qseries/numeric.hpp"

namespace qseries {

template <typename Scalar>
Scalar abs_value(const Scalar& a)
{
  return a < Scalar(0) ? Scalar(-a) : a;
}

// Floor division for b > 0.
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b)
{
  Scalar q = a / b;
  if (q * b > a)
    q -= Scalar(1);
  return q;
}

template <typename Scalar>
struct SmithDecomposition {
  Matrix<Scalar> U; // rows x rows, unimodular
  Matrix<Scalar> D; // rows x cols, diagonal with d_1 | d_2 | ...
  Matrix<Scalar> V; // cols x cols, unimodular
  Eigen::Index rank = 0;

  Scalar divisor(Eigen::Index i) const { return D(i, i); }
};

namespace detail {

template <typename Scalar>
bool min_nonzero(const Matrix<Scalar>& D, Eigen::Index from, Eigen::Index& pi, Eigen::Index& pj)
{
  bool found = false;
  Scalar best(0);
  for (Eigen::Index j = from; j < D.cols(); ++j) {
    for (Eigen::Index i = from; i < D.rows(); ++i) {
      if (D(i, j) == Scalar(0))
        continue;
      const Scalar a = abs_value(D(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

} // namespace detail

// U * M * V = D. Pivots are chosen as the nonzero entry of least absolute
// value in the remaining block.
template <typename Scalar>
SmithDecomposition<Scalar> smith_normal_form(const Matrix<Scalar>& M)
{
  const Eigen::Index rows = M.rows(), cols = M.cols();
  SmithDecomposition<Scalar> out;
  out.D = M;
  out.U = Matrix<Scalar>::Identity(rows, rows);
  out.V = Matrix<Scalar>::Identity(cols, cols);
  auto& D = out.D;
  auto& U = out.U;
  auto& V = out.V;

  Eigen::Index t = 0;
  for (; t < std::min(rows, cols); ++t) {
    Eigen::Index pi = 0, pj = 0;
    if (!detail::min_nonzero(D, t, pi, pj))
      break;
    for (;;) {
      if (pi != t) {
        D.row(t).swap(D.row(pi));
        U.row(t).swap(U.row(pi));
      }
      if (pj != t) {
        D.col(t).swap(D.col(pj));
        V.col(t).swap(V.col(pj));
      }
      bool changed = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (D(i, t) == Scalar(0))
          continue;
        const Scalar q = D(i, t) / D(t, t);
        D.row(i) -= q * D.row(t);
        U.row(i) -= q * U.row(t);
        changed |= D(i, t) != Scalar(0);
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (D(t, j) == Scalar(0))
          continue;
        const Scalar q = D(t, j) / D(t, t);
        D.col(j) -= q * D.col(t);
        V.col(j) -= q * V.col(t);
        changed |= D(t, j) != Scalar(0);
      }
      if (changed) {
        // a remainder smaller than the pivot survived in row or column t
        detail::min_nonzero(D, t, pi, pj);
        continue;
      }
      // divisibility of the remaining block by the pivot
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i) {
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (D(i, j) % D(t, t) != Scalar(0)) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0)
        break;
      D.row(t) += D.row(bad);
      U.row(t) += U.row(bad);
      pi = t;
      pj = t;
    }
    if (D(t, t) < Scalar(0)) {
      D.row(t) = -D.row(t);
      U.row(t) = -U.row(t);
    }
  }
  out.rank = t;
  return out;
}

// Row-style Hermite normal form of the lattice spanned by the rows of G:
// echelon rows with positive pivots and entries above each pivot reduced to
// [0, pivot). Zero rows are dropped, so the result is a basis.
template <typename Scalar>
Matrix<Scalar> hermite_normal_form(const Matrix<Scalar>& G)
{
  Matrix<Scalar> H = G;
  const Eigen::Index k = H.rows(), n = H.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n && row < k; ++col) {
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index i = row; i < k; ++i) {
        if (H(i, col) != Scalar(0) && (best < 0 || abs_value(H(i, col)) < abs_value(H(best, col))))
          best = i;
      }
      if (best < 0)
        break;
      if (best != row)
        H.row(row).swap(H.row(best));
      bool remaining = false;
      for (Eigen::Index i = row + 1; i < k; ++i) {
        if (H(i, col) == Scalar(0))
          continue;
        const Scalar q = H(i, col) / H(row, col);
        H.row(i) -= q * H.row(row);
        remaining |= H(i, col) != Scalar(0);
      }
      if (!remaining)
        break;
    }
    if (H(row, col) == Scalar(0))
      continue;
    if (H(row, col) < Scalar(0))
      H.row(row) = -H.row(row);
    for (Eigen::Index i = 0; i < row; ++i) {
      const Scalar q = floor_div(H(i, col), H(row, col));
      if (q != Scalar(0))
        H.row(i) -= q * H.row(row);
    }
    ++row;
  }
  return H.topRows(row);
}

// Rows spanning {y : y * M = 0} over the integers.
template <typename Scalar>
Matrix<Scalar> left_kernel(const Matrix<Scalar>& M)
{
  const auto snf = smith_normal_form(M);
  return snf.U.bottomRows(M.rows() - snf.rank);
}

// Leading column of each row in a row echelon matrix.
template <typename Scalar>
Eigen::Index pivot_column(const Matrix<Scalar>& H, Eigen::Index row)
{
  for (Eigen::Index j = 0; j < H.cols(); ++j) {
    if (H(row, j) != Scalar(0))
      return j;
  }
  return H.cols();
}

// Membership of v in the row lattice of a Hermite normal form basis.
template <typename Scalar>
bool in_row_lattice(const Matrix<Scalar>& hnf, Vector<Scalar> v)
{
  for (Eigen::Index r = 0; r < hnf.rows(); ++r) {
    const Eigen::Index p = pivot_column(hnf, r);
    if (v(p) % hnf(r, p) != Scalar(0))
      return false;
    const Scalar q = v(p) / hnf(r, p);
    v -= q * hnf.row(r).transpose();
  }
  return v.isZero();
}

} // namespace qseries
