#include "qseries/center.hpp"

#include "qseries/errors.hpp"

namespace qseries {

namespace {

constexpr int kMaxProbes = 8;

std::vector<int> first_primes(int count)
{
  std::vector<int> primes;
  for (int p = 2; static_cast<int>(primes.size()) < count; ++p) {
    bool prime = true;
    for (int d : primes) {
      if (d * d > p)
        break;
      if (p % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime)
      primes.push_back(p);
  }
  return primes;
}

} // namespace

bool is_central_monomial(const KernelLattice& S, const Exponent& s)
{
  if (s.size() != S.ambient_n())
    throw DimensionMismatch("exponent length does not match the lattice");
  return Transversal(S).coset_rep(s).isZero();
}

CentralDecomposition central_decompose(const QMatrix& q, const KernelLattice& S, const Transversal& T,
                                       const SkewSeries& f)
{
  if (S.ambient_n() != f.variables())
    throw DimensionMismatch("lattice and series dimensions differ");
  CentralDecomposition dec;
  dec.precision = f.precision();
  std::map<Exponent, TermMap, GrlexLess> grouped;
  for (const auto& [e, c] : f.terms()) {
    const Exponent t = T.coset_rep(e);
    const Exponent s = e - t;
    // c x^e = (c / mu(t, s)) x^t x^s
    grouped[t].emplace(s, c.scaled(normal_order_scalar(q, t, s).inverse()));
  }
  for (const auto& [t, terms] : grouped) {
    const int known = f.precision() - static_cast<int>(total_degree(t));
    dec.components.emplace(t, LaurentElem::from_terms(q, terms, known));
  }
  return dec;
}

LaurentElem reassemble(const QMatrix& q, const CentralDecomposition& dec)
{
  const int n = q.size();
  LaurentElem sum(SkewSeries(n, q.signature(), std::max(1, dec.precision)));
  for (const auto& [t, z] : dec.components) {
    const LaurentElem xt = LaurentElem::monomial(q, t, dec.precision + static_cast<int>(total_degree(t)));
    sum = laurent_add(q, sum, laurent_mul(q, xt, z));
  }
  return sum;
}

SkewSeries coset_part(const Transversal& T, const SkewSeries& f, const Exponent& t)
{
  SkewSeries out(f.variables(), f.signature(), f.precision());
  for (const auto& [e, c] : f.terms()) {
    if (T.coset_rep(e) == t)
      out.add_term(e, c);
  }
  return out;
}

int coset_count(const Transversal& T, const SkewSeries& f)
{
  std::map<Exponent, int, LexLess> seen;
  for (const auto& [e, c] : f.terms())
    ++seen[T.coset_rep(e)];
  return static_cast<int>(seen.size());
}

SkewSeries rho_shear(const QMatrix& q, const SkewSeries& f, const Exponent& v, const Exponent& t0,
                     const Exponent& r)
{
  const GroupUnit keep = sigma(q, v, t0);
  const GroupUnit kill = sigma(q, v, r);
  if (keep == kill)
    throw DegenerateShear("sigma(v, t0) equals sigma(v, r); v does not separate the cosets");
  const FieldElem kill_value = field_embed(kill);
  const FieldElem scale = (field_embed(keep) - kill_value).inverse();
  SkewSeries numerator = conjugate_by_monomial(q, v, f) - kill_value * f;
  return scale * numerator;
}

std::optional<Exponent> separating_direction(const QMatrix& q, const Exponent& t0, const Exponent& r)
{
  for (int j = 0; j < q.size(); ++j) {
    const Exponent v = unit_exponent(q.size(), j);
    if (sigma(q, v, t0) != sigma(q, v, r))
      return v;
  }
  return std::nullopt;
}

SkewSeries isolate_coset_component(const QMatrix& q, const Transversal& T, const SkewSeries& f,
                                   const Exponent& t0, int* steps)
{
  SkewSeries current = f;
  int applied = 0;
  for (;;) {
    // lowest-degree term outside the coset of t0
    std::optional<Exponent> r;
    for (const auto& [e, c] : current.terms()) {
      const Exponent rep = T.coset_rep(e);
      if (rep != t0) {
        r = rep;
        break;
      }
    }
    if (!r)
      break;
    const auto v = separating_direction(q, t0, *r);
    if (!v)
      throw DegenerateShear("cosets of t0 and r coincide; no separating direction");
    current = rho_shear(q, current, *v, t0, *r);
    ++applied;
  }
  if (steps)
    *steps = applied;
  return current;
}

TorusElement prime_probe(ScalarSignature sig, int n, int k)
{
  const auto primes = first_primes(n + k);
  std::vector<Rational> values;
  for (int i = 0; i < n; ++i)
    values.emplace_back(primes[static_cast<std::size_t>(k + i)]);
  return TorusElement::from_rationals(sig, values);
}

MonomializeResult monomialize(const QMatrix& q, const SkewSeries& f, const TorusElement& h)
{
  if (f.is_zero())
    throw NoLeadingTerm("monomialize needs a nonzero series");
  if (h.size() != q.size())
    throw DimensionMismatch("torus element has the wrong number of entries");
  MonomializeResult result;
  std::vector<TorusElement> probes{h};
  std::size_t probe = 0;
  SkewSeries remaining = f;

  while (!remaining.is_zero()) {
    const auto [j1, a1] = grlex_leading(remaining);
    SkewSeries g = a1.inverse() * remaining;
    while (g.terms().size() > 1) {
      const Exponent j2 = std::next(g.terms().begin())->first;
      for (;;) {
        const TorusElement& probe_h = probes[probe];
        const FieldElem h1 = probe_h.character(j1);
        const FieldElem h2 = probe_h.character(j2);
        if (h1 != h2) {
          g = (h1 - h2).inverse() * (apply_torus(probe_h, g) - h2 * g);
          break;
        }
        ++result.probe_retries;
        if (static_cast<int>(probes.size()) >= kMaxProbes)
          throw SeparationFailure("no probe separates " + monomial_to_string(j1) + " from " +
                                  monomial_to_string(j2));
        probes.push_back(prime_probe(f.signature(), q.size(), static_cast<int>(probes.size()) - 1));
        ++probe;
      }
    }
    // g is now exactly x^{j1}
    if (g.terms().size() != 1 || g.terms().begin()->first != j1 || !g.terms().begin()->second.is_one())
      throw SeparationFailure("averaging did not converge to a monomial");
    result.monomials.push_back(j1);
    remaining -= SkewSeries::monomial(f.variables(), f.signature(), f.precision(), j1, a1);
  }
  return result;
}

} // namespace qseries
