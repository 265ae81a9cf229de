#include "qseries/spectrum.hpp"

#include <algorithm>
#include <sstream>

#include "qseries/errors.hpp"
#include "qseries/series.hpp"

namespace qseries {

std::vector<IndexSet> all_subsets(int n)
{
  if (n < 0 || n > 20)
    throw DimensionMismatch("subset enumeration supports 0 <= n <= 20");
  std::vector<IndexSet> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    IndexSet w;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i))
        w.push_back(i);
    }
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<IndexSet> h_primes(const QMatrix& q) { return all_subsets(q.size()); }

bool center_is_field(const KernelLattice& S)
{
  if (S.rank() == 0)
    return true;
  if (S.rank() > 1)
    return false;
  bool nonneg = true, nonpos = true;
  for (int j = 0; j < S.ambient_n(); ++j) {
    nonneg &= S.basis()(0, j) >= 0;
    nonpos &= S.basis()(0, j) <= 0;
  }
  return nonneg || nonpos;
}

Stratum analyze_stratum(const QMatrix& q, const IndexSet& w)
{
  QMatrix q_w = restrict_to_stratum(q, w);
  KernelLattice S_w = kernel_lattice(q_w);
  Stratum st{w, q_w, S_w, S_w.rank(), center_is_field(S_w), subgroup_index(S_w)};
  return st;
}

SpectrumReport full_report(const QMatrix& q)
{
  SpectrumReport report;
  report.n = q.size();
  report.generic = is_generic(q);
  report.h_primes = h_primes(q);
  for (const auto& w : report.h_primes)
    report.strata.push_back(analyze_stratum(q, w));
  if (report.generic) {
    report.ufd = UfdVerdict::UFD;
    for (int i = 0; i < q.size(); ++i)
      report.height_one.push_back(i);
  }
  const KernelLattice& S = report.strata.front().S_w;
  if (const auto index = subgroup_index(S); index && S.rank() == q.size()) {
    const Integer root = mp::sqrt(*index);
    if (root * root != *index)
      throw Error("index of a full-rank radical is not a perfect square: " + index->str());
    report.goldie_bound = root;
  }
  return report;
}

bool ideal_contains(const IndexSet& larger, const IndexSet& smaller)
{
  return std::includes(larger.begin(), larger.end(), smaller.begin(), smaller.end());
}

int chain_check(const SpectrumReport& report, const IndexSet& w, int* chains)
{
  if (!report.generic)
    throw NotApplicable("chain check needs the generic case, where Spec R is exactly the H-primes");
  const auto& primes = report.h_primes;
  auto covers = [](const IndexSet& big, const IndexSet& small) {
    return big.size() == small.size() + 1 && ideal_contains(big, small);
  };
  if (std::find(primes.begin(), primes.end(), w) == primes.end())
    throw DimensionMismatch("subset is not one of the reported primes");
  // depth-first enumeration of saturated chains from J_0 up to J_w
  int count = 0;
  bool uniform = true;
  auto walk = [&](auto&& self, const IndexSet& current, int length) -> void {
    if (current == w) {
      ++count;
      uniform &= length == static_cast<int>(w.size());
      return;
    }
    for (const auto& next : primes) {
      if (covers(next, current) && ideal_contains(w, next))
        self(self, next, length + 1);
    }
  };
  walk(walk, IndexSet{}, 0);
  if (!uniform || count == 0)
    throw Error("saturated chains to " + subset_label(w) + " have different lengths");
  if (chains)
    *chains = count;
  return static_cast<int>(w.size());
}

bool conjugation_fixes(const QMatrix& q, int i, const IndexSet& w)
{
  const int n = q.size();
  for (int j : w) {
    const SkewSeries xj = SkewSeries::variable(n, q.signature(), 2, j);
    const SkewSeries image = conjugate_by_xi(q, i, xj);
    // image must be c x_j with c a nonzero scalar
    if (image.terms().size() != 1 || image.terms().begin()->first != unit_exponent(n, j))
      return false;
  }
  return true;
}

std::string subset_label(const IndexSet& w)
{
  std::string out = "{";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k)
      out += ",";
    out += std::to_string(w[k] + 1);
  }
  return out + "}";
}

std::string to_dot(const SpectrumReport& report)
{
  std::ostringstream out;
  out << "digraph hprimes {\n";
  out << "  rankdir=BT;\n";
  auto node = [](const IndexSet& w) { return "\"J" + subset_label(w) + "\""; };
  for (const auto& st : report.strata) {
    out << "  " << node(st.w) << " [label=\"J" << subset_label(st.w) << "\\nrank S=" << st.center_rank
        << (st.simple ? "\\nsimple" : "\\nnot simple") << "\"];\n";
  }
  for (const auto& small : report.h_primes) {
    for (const auto& big : report.h_primes) {
      if (big.size() == small.size() + 1 && ideal_contains(big, small))
        out << "  " << node(small) << " -> " << node(big) << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

} // namespace qseries
