#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qseries/errors.hpp"
#include "qseries/spectrum.hpp"

using namespace qseries;

namespace {

QMatrix three_variable_example()
{
  const ScalarSignature sig{1, 1};
  const GroupUnit one(sig), gamma = GroupUnit::free_generator(sig, 0);
  return QMatrix::from_upper(sig, 3, {one, gamma, gamma});
}

QMatrix generic_matrix(int n)
{
  const ScalarSignature sig{1, n * (n - 1) / 2};
  std::vector<GroupUnit> upper;
  for (int k = 0; k < sig.free_rank; ++k)
    upper.push_back(GroupUnit::free_generator(sig, k));
  return QMatrix::from_upper(sig, n, upper);
}

const Stratum& stratum(const SpectrumReport& r, const IndexSet& w)
{
  for (const auto& st : r.strata) {
    if (st.w == w)
      return st;
  }
  throw std::logic_error("no such stratum");
}

std::size_t count(const std::string& text, const std::string& needle)
{
  std::size_t c = 0;
  for (std::size_t p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1))
    ++c;
  return c;
}

} // namespace

TEST_CASE("H-primes are all subsets")
{
  CHECK(h_primes(QMatrix(ScalarSignature{}, 2)).size() == 4);
  const auto subsets = all_subsets(3);
  REQUIRE(subsets.size() == 8);
  CHECK(subsets.front().empty());
  CHECK(subsets.back() == IndexSet{0, 1, 2});
  CHECK(subsets[1] == IndexSet{0});
}

TEST_CASE("strata of the three-variable example")
{
  const SpectrumReport r = full_report(three_variable_example());
  const Stratum& bottom = stratum(r, {});
  CHECK(bottom.center_rank == 1);
  CHECK_FALSE(bottom.simple);
  const Stratum& one = stratum(r, {0});
  CHECK(one.center_rank == 0);
  CHECK(one.simple);
  CHECK(one.q_w(0, 1) == GroupUnit::free_generator(one.q_w.signature(), 0));
  // x1 and x2 commute once x3 is gone
  CHECK(stratum(r, {2}).center_rank == 2);
  CHECK_FALSE(r.generic);
  CHECK(r.ufd == UfdVerdict::Inconclusive);
  CHECK_FALSE(r.goldie_bound.has_value());
}

TEST_CASE("simplicity of the centre")
{
  // k((x)) is a field
  CHECK(center_is_field(KernelLattice(1, IntMatrix::Ones(1, 1))));
  IntMatrix b(1, 3);
  b << 1, -1, 0;
  CHECK_FALSE(center_is_field(KernelLattice(3, b)));
  b << 0, 2, 1;
  CHECK(center_is_field(KernelLattice(3, b)));
  CHECK_FALSE(center_is_field(KernelLattice(2, IntMatrix::Identity(2, 2))));
}

TEST_CASE("generic two-variable report")
{
  const SpectrumReport r = full_report(generic_matrix(2));
  CHECK(r.generic);
  CHECK(r.h_primes.size() == 4);
  CHECK(r.ufd == UfdVerdict::UFD);
  CHECK(r.height_one == std::vector<int>{0, 1});
  CHECK(r.infinite_field);
}

TEST_CASE("root of unity report")
{
  const ScalarSignature sig{3, 0};
  const SpectrumReport r = full_report(QMatrix::from_upper(sig, 2, {GroupUnit::zeta(sig)}));
  CHECK_FALSE(r.generic);
  REQUIRE(r.goldie_bound.has_value());
  CHECK(*r.goldie_bound == 3);
  CHECK(r.ufd == UfdVerdict::Inconclusive);
}

TEST_CASE("generic strata are simple")
{
  for (int n = 2; n <= 4; ++n) {
    const SpectrumReport r = full_report(generic_matrix(n));
    CHECK(r.generic);
    for (const auto& st : r.strata) {
      CHECK(st.simple);
      if (n - static_cast<int>(st.w.size()) >= 2)
        CHECK(st.center_rank == 0);
    }
  }
}

TEST_CASE("chains")
{
  const SpectrumReport r = full_report(generic_matrix(3));
  int chains = 0;
  CHECK(chain_check(r, {0, 1, 2}, &chains) == 3);
  CHECK(chains == 6);
  CHECK(chain_check(r, {1, 2}, &chains) == 2);
  CHECK(chains == 2);
  CHECK(chain_check(r, {}, &chains) == 0);
  CHECK(chains == 1);
  CHECK_THROWS_AS(chain_check(full_report(three_variable_example()), {0}), NotApplicable);
}

TEST_CASE("containment and conjugation")
{
  const auto subsets = all_subsets(3);
  for (const auto& a : subsets) {
    for (const auto& b : subsets) {
      bool sub = true;
      for (int i : a)
        sub &= std::find(b.begin(), b.end(), i) != b.end();
      CHECK(ideal_contains(b, a) == sub);
    }
  }
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const QMatrix q = oracle::random_qmatrix(rng, 3, ScalarSignature{5, 1});
    for (int i = 0; i < 3; ++i) {
      for (const auto& w : subsets)
        CHECK(conjugation_fixes(q, i, w));
    }
  }
}

TEST_CASE("dot export")
{
  const SpectrumReport r = full_report(generic_matrix(3));
  const std::string dot = to_dot(r);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(count(dot, "[label=") == 8);
  CHECK(count(dot, " -> ") == 12);
  CHECK(subset_label({0, 2}) == "{1,3}");
}
