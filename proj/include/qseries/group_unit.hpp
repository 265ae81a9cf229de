#pragma once

// Elements zeta^a * t_1^{e_1} ... t_r^{e_r} of the multiplicative group
// mu_m x Z^r that houses every commutation scalar.

#include <cstdint>
#include <string>

#include "qseries/numeric.hpp"

namespace qseries {

struct ScalarSignature {
  int torsion_order = 1; // m
  int free_rank = 0;     // r

  friend bool operator==(const ScalarSignature&, const ScalarSignature&) = default;
};

void validate(const ScalarSignature& sig);

class GroupUnit {
public:
  // The identity of mu_1 x Z^0.
  GroupUnit() : GroupUnit(ScalarSignature{}) {}
  explicit GroupUnit(ScalarSignature sig);
  GroupUnit(ScalarSignature sig, std::int64_t torsion, Exponent free);

  static GroupUnit identity(ScalarSignature sig) { return GroupUnit(sig); }
  static GroupUnit zeta(ScalarSignature sig, std::int64_t k = 1);
  static GroupUnit free_generator(ScalarSignature sig, int index);

  const ScalarSignature& signature() const noexcept { return sig_; }
  std::int64_t torsion() const noexcept { return torsion_; }
  const Exponent& free() const noexcept { return free_; }

  bool is_identity() const;
  GroupUnit inverse() const;

  friend bool operator==(const GroupUnit& a, const GroupUnit& b);
  friend bool operator!=(const GroupUnit& a, const GroupUnit& b) { return !(a == b); }

  std::string to_string() const;

private:
  ScalarSignature sig_;
  std::int64_t torsion_ = 0;
  Exponent free_;
};

GroupUnit unit_mul(const GroupUnit& a, const GroupUnit& b);
GroupUnit unit_pow(const GroupUnit& a, std::int64_t e);

inline GroupUnit operator*(const GroupUnit& a, const GroupUnit& b) { return unit_mul(a, b); }

} // namespace qseries
