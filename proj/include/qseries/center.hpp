#pragma once

// Central structure of the Laurent series ring: the splitting
// f = sum_t x^t z_t over coset representatives t of Z^n / S with each z_t
// central, the shear maps that isolate one coset component inside any ideal,
// and torus averaging that isolates monomials inside H-stable ideals.

#include <map>
#include <optional>
#include <vector>

#include "qseries/kernel.hpp"
#include "qseries/series.hpp"

namespace qseries {

// x^s is central iff s lies in S.
bool is_central_monomial(const KernelLattice& S, const Exponent& s);

struct CentralDecomposition {
  // Coset representative t -> z_t, supported on S.
  std::map<Exponent, LaurentElem, GrlexLess> components;
  int precision = 0;

  bool empty() const { return components.empty(); }
};

CentralDecomposition central_decompose(const QMatrix& q, const KernelLattice& S, const Transversal& T,
                                       const SkewSeries& f);

// sum_t x^t z_t.
LaurentElem reassemble(const QMatrix& q, const CentralDecomposition& dec);

// Terms of f whose exponent lies in the coset of t, i.e. x^t z_t.
SkewSeries coset_part(const Transversal& T, const SkewSeries& f, const Exponent& t);

// Number of cosets met by the support of f.
int coset_count(const Transversal& T, const SkewSeries& f);

// (x^v f x^{-v} - sigma(v,r) f) / (sigma(v,t0) - sigma(v,r)): keeps the coset
// t0 component, kills the coset r component, rescales the others.
SkewSeries rho_shear(const QMatrix& q, const SkewSeries& f, const Exponent& v, const Exponent& t0,
                     const Exponent& r);

// A generator x_j separating the cosets of t0 and r, if t0 - r is not in S.
std::optional<Exponent> separating_direction(const QMatrix& q, const Exponent& t0, const Exponent& r);

// Repeated shears until only the coset of t0 survives; the result equals
// coset_part(T, f, t0). The number of shears applied is written to steps.
SkewSeries isolate_coset_component(const QMatrix& q, const Transversal& T, const SkewSeries& f,
                                   const Exponent& t0, int* steps = nullptr);

struct MonomializeResult {
  // Support of f in grlex order, each recovered as an exact monomial.
  std::vector<Exponent> monomials;
  // Times a probe failed to separate two exponents and the next was used.
  int probe_retries = 0;
};

// Torus averaging f -> (h.f - h(j2) f) / (h(j1) - h(j2)) until a single
// monomial remains, then subtract it and repeat. When h fails to separate
// the current pair, the prime tuples (2,3,5,...), (3,5,7,...), ... follow.
MonomializeResult monomialize(const QMatrix& q, const SkewSeries& f, const TorusElement& h);

// The k-th probe tuple of distinct primes (k = 0 gives 2, 3, 5, ...).
TorusElement prime_probe(ScalarSignature sig, int n, int k);

} // namespace qseries
