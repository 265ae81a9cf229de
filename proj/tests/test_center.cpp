#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qseries/center.hpp"
#include "qseries/errors.hpp"

using namespace qseries;

namespace {

Exponent ex(std::initializer_list<std::int64_t> v)
{
  Exponent e(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (auto x : v)
    e(i++) = x;
  return e;
}

QMatrix three_variable_example()
{
  const ScalarSignature sig{1, 1};
  const GroupUnit one(sig), gamma = GroupUnit::free_generator(sig, 0);
  return QMatrix::from_upper(sig, 3, {one, gamma, gamma});
}

QMatrix root_pair(int ell)
{
  const ScalarSignature sig{ell, 0};
  return QMatrix::from_upper(sig, 2, {GroupUnit::zeta(sig)});
}

// z commutes with every generator, checked term by term with the raw
// bicharacter and by multiplying out.
bool central(const QMatrix& q, const LaurentElem& z)
{
  for (const auto& [e, c] : expand(q, z)) {
    if (!oracle::in_radical(q, e))
      return false;
  }
  for (int i = 0; i < q.size(); ++i) {
    const LaurentElem xi = LaurentElem::monomial(q, unit_exponent(q.size(), i), z.known_below() + 2);
    if (!laurent_congruent(q, laurent_mul(q, xi, z), laurent_mul(q, z, xi)))
      return false;
  }
  return true;
}

} // namespace

TEST_CASE("central monomials")
{
  const QMatrix q = three_variable_example();
  const KernelLattice S = kernel_lattice(q);
  CHECK(is_central_monomial(S, ex({1, -1, 0})));
  CHECK_FALSE(is_central_monomial(S, ex({1, 0, 0})));
  const KernelLattice S2 = kernel_lattice(root_pair(2));
  CHECK(is_central_monomial(S2, ex({2, 0})));
  CHECK_FALSE(is_central_monomial(S2, ex({1, 1})));
}

TEST_CASE("decomposition of x^2 + y^2 + x at eps = -1")
{
  const QMatrix q = root_pair(2);
  const ScalarSignature sig = q.signature();
  SkewSeries f(2, sig, 6);
  f.add_term(ex({2, 0}), FieldElem::one(sig));
  f.add_term(ex({0, 2}), FieldElem::one(sig));
  f.add_term(ex({1, 0}), FieldElem::one(sig));
  const KernelLattice S = kernel_lattice(q);
  const Transversal T(S);
  const CentralDecomposition dec = central_decompose(q, S, T, f);
  REQUIRE(dec.components.size() == 2);

  TermMap even;
  even.emplace(ex({2, 0}), FieldElem::one(sig));
  even.emplace(ex({0, 2}), FieldElem::one(sig));
  TermMap unit;
  unit.emplace(ex({0, 0}), FieldElem::one(sig));
  CHECK(expand(q, dec.components.at(ex({0, 0}))) == even);
  CHECK(expand(q, dec.components.at(ex({1, 0}))) == unit);
  CHECK(laurent_congruent(q, reassemble(q, dec), LaurentElem(f)));
}

TEST_CASE("random decompositions reassemble into central pieces")
{
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 2;
    const ScalarSignature sig{2 + trial % 3, trial % 2};
    const QMatrix q = oracle::random_qmatrix(rng, n, sig, 1);
    const auto f = oracle::random_series(rng, n, sig, 6, 6);
    const KernelLattice S = kernel_lattice(q);
    const Transversal T(S);
    const auto dec = central_decompose(q, S, T, f);
    CHECK(laurent_congruent(q, reassemble(q, dec), LaurentElem(f)));
    for (const auto& [t, z] : dec.components)
      CHECK(central(q, z));
    CHECK(static_cast<int>(dec.components.size()) == coset_count(T, f));
  }
}

TEST_CASE("shears isolate each coset component")
{
  // eps a primitive cube root: three cosets of x-degree modulo 3 in one
  // variable direction
  const QMatrix q = root_pair(3);
  const ScalarSignature sig = q.signature();
  SkewSeries f(2, sig, 6);
  f.add_term(ex({0, 0}), FieldElem::one(sig));
  f.add_term(ex({1, 0}), FieldElem(sig, Rational(2)));
  f.add_term(ex({2, 0}), FieldElem(sig, Rational(-1)));
  f.add_term(ex({3, 1}), FieldElem(sig, Rational(5)));
  f.add_term(ex({0, 3}), FieldElem::one(sig));
  const KernelLattice S = kernel_lattice(q);
  const Transversal T(S);
  const auto dec = central_decompose(q, S, T, f);
  CHECK(coset_count(T, f) == 4);
  for (const auto& [t, z] : dec.components) {
    int steps = 0;
    const SkewSeries part = isolate_coset_component(q, T, f, t, &steps);
    CHECK(part == coset_part(T, f, t));
    const LaurentElem xt = LaurentElem::monomial(q, t, 6 + static_cast<int>(total_degree(t)));
    CHECK(laurent_congruent(q, LaurentElem(part), laurent_mul(q, xt, z)));
    CHECK(steps >= 1);
  }
  CHECK_THROWS_AS(rho_shear(q, f, ex({1, 0}), ex({0, 0}), ex({0, 3})), DegenerateShear);
  CHECK_FALSE(separating_direction(q, ex({0, 0}), ex({3, 0})).has_value());
}

TEST_CASE("monomialize x1 + x1 x2 with h = (2, 3)")
{
  const QMatrix q = three_variable_example();
  const ScalarSignature sig = q.signature();
  SkewSeries f(3, sig, 5);
  f.add_term(ex({1, 0, 0}), FieldElem::one(sig));
  f.add_term(ex({1, 1, 0}), FieldElem::one(sig));
  // the three-variable ring needs a third entry; it does not affect these exponents
  const auto h = TorusElement::from_rationals(sig, {Rational(2), Rational(3), Rational(5)});
  const auto r = monomialize(q, f, h);
  CHECK(r.monomials == std::vector<Exponent>{ex({1, 0, 0}), ex({1, 1, 0})});
  CHECK(r.probe_retries == 0);

  const QMatrix q2 = root_pair(2);
  SkewSeries g(2, q2.signature(), 5);
  g.add_term(ex({1, 0}), FieldElem::one(q2.signature()));
  g.add_term(ex({1, 1}), FieldElem::one(q2.signature()));
  const auto r2 = monomialize(q2, g, TorusElement::from_rationals(q2.signature(), {Rational(2), Rational(3)}));
  CHECK(r2.monomials == std::vector<Exponent>{ex({1, 0}), ex({1, 1})});
}

TEST_CASE("monomialize falls back to prime probes")
{
  const QMatrix q = root_pair(3);
  const ScalarSignature sig = q.signature();
  SkewSeries f(2, sig, 5);
  f.add_term(ex({1, 0}), FieldElem(sig, Rational(4)));
  f.add_term(ex({0, 1}), FieldElem(sig, Rational(-1)));
  f.add_term(ex({1, 2}), FieldElem::one(sig));
  const auto r = monomialize(q, f, TorusElement::from_rationals(sig, {Rational(1), Rational(1)}));
  CHECK(r.monomials == std::vector<Exponent>{ex({1, 0}), ex({0, 1}), ex({1, 2})});
  CHECK(r.probe_retries == 1);
}

TEST_CASE("monomialize recovers random supports")
{
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 25; ++trial) {
    const ScalarSignature sig{4, 1};
    const QMatrix q = oracle::random_qmatrix(rng, 3, sig);
    const auto f = oracle::random_series(rng, 3, sig, 5, 6);
    std::vector<Exponent> support;
    for (const auto& [e, c] : f.terms())
      support.push_back(e);
    const auto r = monomialize(q, f, prime_probe(sig, 3, 0));
    CHECK(r.monomials == support);
  }
  CHECK_THROWS_AS(monomialize(root_pair(2), SkewSeries(2, ScalarSignature{2, 0}, 4),
                              prime_probe(ScalarSignature{2, 0}, 2, 0)),
                  NoLeadingTerm);
}

TEST_CASE("prime probes")
{
  const auto h0 = prime_probe({}, 3, 0);
  const auto h1 = prime_probe({}, 3, 1);
  CHECK(h0.character(ex({1, 1, 1})) == FieldElem(ScalarSignature{}, Rational(30)));
  CHECK(h1.character(ex({1, 0, 1})) == FieldElem(ScalarSignature{}, Rational(21)));
}
