#pragma once

// Stratification of Spec R by the sets w = { i : x_i in P }, the H-primes
// J_w = <x_i : i in w>, and the per-stratum centre data.

#include <optional>
#include <string>
#include <vector>

#include "qseries/kernel.hpp"

namespace qseries {

struct Stratum {
  IndexSet w;
  QMatrix q_w;
  KernelLattice S_w;
  int center_rank = 0;
  // L_w is simple exactly when its centre Z_w is a field.
  bool simple = false;
  std::optional<Integer> index; // nullopt: infinite
};

enum class UfdVerdict { UFD, Inconclusive };

struct SpectrumReport {
  int n = 0;
  bool generic = false;
  // Every scalar field used here is infinite, which the H-prime
  // classification requires.
  bool infinite_field = true;
  std::vector<IndexSet> h_primes;
  std::vector<Stratum> strata;
  UfdVerdict ufd = UfdVerdict::Inconclusive;
  // Generic case only: J_{i} for each i.
  std::vector<int> height_one;
  // sqrt [Z^n : S] when rank S = n.
  std::optional<Integer> goldie_bound;
};

// All 2^n subsets, ordered by size and then lexicographically.
std::vector<IndexSet> h_primes(const QMatrix& q);
std::vector<IndexSet> all_subsets(int n);

// Z_w is a field iff S_w = 0, or S_w = Z b with b or -b in N^n.
bool center_is_field(const KernelLattice& S);

Stratum analyze_stratum(const QMatrix& q, const IndexSet& w);
SpectrumReport full_report(const QMatrix& q);

// Checks that every saturated chain J_0 < ... < J_w in the reported poset has
// length |w|, and returns |w|. Only meaningful when the report is generic.
int chain_check(const SpectrumReport& report, const IndexSet& w, int* chains = nullptr);

bool ideal_contains(const IndexSet& larger, const IndexSet& smaller);

// conjugation by x_i sends each generator x_j (j in w) to a unit multiple of
// itself, so J_w is fixed.
bool conjugation_fixes(const QMatrix& q, int i, const IndexSet& w);

std::string subset_label(const IndexSet& w);
std::string to_dot(const SpectrumReport& report);

} // namespace qseries
