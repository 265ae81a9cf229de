#include "qseries/qmatrix.hpp"

#include <string>

#include "qseries/errors.hpp"

namespace qseries {

namespace {

std::string pair_name(int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

} // namespace

QMatrix::QMatrix(ScalarSignature sig, int n)
    : sig_(sig), n_(n), torsion_(ExponentMatrix::Zero(n, n)),
      free_(static_cast<std::size_t>(sig.free_rank), ExponentMatrix::Zero(n, n))
{
  validate(sig);
  if (n < 0)
    throw ConfigurationError("number of variables must be non-negative");
}

QMatrix QMatrix::from_upper(ScalarSignature sig, int n, const std::vector<GroupUnit>& upper)
{
  QMatrix q(sig, n);
  const auto expected = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  if (upper.size() != expected)
    throw ConfigurationError("expected " + std::to_string(expected) + " upper-triangular entries, got " +
                             std::to_string(upper.size()));
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j)
      q.set(i, j, upper[k++]);
  }
  return q;
}

QMatrix QMatrix::from_entries(ScalarSignature sig, const std::vector<std::vector<GroupUnit>>& entries)
{
  const int n = static_cast<int>(entries.size());
  QMatrix q(sig, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(entries[static_cast<std::size_t>(i)].size()) != n)
      throw DimensionMismatch("q-matrix is not square");
  }
  for (int i = 0; i < n; ++i) {
    const auto& row = entries[static_cast<std::size_t>(i)];
    if (!row[static_cast<std::size_t>(i)].is_identity())
      throw ConfigurationError("q" + pair_name(i, i) + " must be 1");
    for (int j = i + 1; j < n; ++j) {
      const auto& a = row[static_cast<std::size_t>(j)];
      const auto& b = entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (!unit_mul(a, b).is_identity())
        throw ConfigurationError("q" + pair_name(i, j) + " * q" + pair_name(j, i) + " must be 1");
      q.set(i, j, a);
    }
  }
  return q;
}

GroupUnit QMatrix::operator()(int i, int j) const
{
  Exponent f(sig_.free_rank);
  for (int k = 0; k < sig_.free_rank; ++k)
    f(k) = free_[static_cast<std::size_t>(k)](i, j);
  return GroupUnit(sig_, torsion_(i, j), f);
}

void QMatrix::set(int i, int j, const GroupUnit& value)
{
  if (value.signature() != sig_)
    throw ConfigurationError("q" + pair_name(i, j) + " has the wrong scalar signature");
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    throw DimensionMismatch("q-matrix index " + pair_name(i, j) + " out of range");
  if (i == j) {
    if (!value.is_identity())
      throw ConfigurationError("diagonal entries of q must be 1");
    return;
  }
  torsion_(i, j) = value.torsion();
  torsion_(j, i) = floor_mod(-value.torsion(), sig_.torsion_order);
  for (int k = 0; k < sig_.free_rank; ++k) {
    free_[static_cast<std::size_t>(k)](i, j) = value.free()(k);
    free_[static_cast<std::size_t>(k)](j, i) = -value.free()(k);
  }
}

GroupUnit QMatrix::bilinear(const Exponent& s, const Exponent& t, bool strictly_lower) const
{
  if (s.size() != n_ || t.size() != n_)
    throw DimensionMismatch("exponent vectors must have length " + std::to_string(n_));
  auto form = [&](const ExponentMatrix& e) -> std::int64_t {
    if (strictly_lower)
      return s.dot(e.triangularView<Eigen::StrictlyLower>() * t);
    return s.dot(e * t);
  };
  Exponent f(sig_.free_rank);
  for (int k = 0; k < sig_.free_rank; ++k)
    f(k) = form(free_[static_cast<std::size_t>(k)]);
  return GroupUnit(sig_, floor_mod(form(torsion_), sig_.torsion_order), f);
}

bool operator==(const QMatrix& a, const QMatrix& b)
{
  return a.sig_ == b.sig_ && a.n_ == b.n_ && a.torsion_ == b.torsion_ && a.free_ == b.free_;
}

GroupUnit sigma(const QMatrix& q, const Exponent& s, const Exponent& t) { return q.bilinear(s, t, false); }

GroupUnit normal_order_scalar(const QMatrix& q, const Exponent& s, const Exponent& t)
{
  return q.bilinear(s, t, true);
}

QMatrix restrict_to_stratum(const QMatrix& q, const IndexSet& w)
{
  std::vector<int> keep;
  for (int i = 0; i < q.size(); ++i) {
    bool removed = false;
    for (int x : w) {
      if (x < 0 || x >= q.size())
        throw DimensionMismatch("stratum index " + std::to_string(x + 1) + " out of range");
      removed |= x == i;
    }
    if (!removed)
      keep.push_back(i);
  }
  QMatrix out(q.signature(), static_cast<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a + 1; b < keep.size(); ++b)
      out.set(static_cast<int>(a), static_cast<int>(b), q(keep[a], keep[b]));
  }
  return out;
}

} // namespace qseries
