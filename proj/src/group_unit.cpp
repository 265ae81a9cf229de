#include "qseries/group_unit.hpp"

#include "qseries/errors.hpp"

namespace qseries {

void validate(const ScalarSignature& sig)
{
  if (sig.torsion_order < 1)
    throw ConfigurationError("torsion order m must be >= 1, got " + std::to_string(sig.torsion_order));
  if (sig.free_rank < 0)
    throw ConfigurationError("free rank r must be >= 0, got " + std::to_string(sig.free_rank));
}

GroupUnit::GroupUnit(ScalarSignature sig) : sig_(sig), free_(Exponent::Zero(sig.free_rank)) { validate(sig); }

GroupUnit::GroupUnit(ScalarSignature sig, std::int64_t torsion, Exponent free)
    : sig_(sig), torsion_(0), free_(std::move(free))
{
  validate(sig);
  if (free_.size() != sig.free_rank)
    throw ConfigurationError("unit has " + std::to_string(free_.size()) + " free exponents, signature expects " +
                             std::to_string(sig.free_rank));
  torsion_ = floor_mod(torsion, sig.torsion_order);
}

GroupUnit GroupUnit::zeta(ScalarSignature sig, std::int64_t k)
{
  return GroupUnit(sig, k, Exponent::Zero(sig.free_rank));
}

GroupUnit GroupUnit::free_generator(ScalarSignature sig, int index)
{
  if (index < 0 || index >= sig.free_rank)
    throw ConfigurationError("free generator index out of range");
  return GroupUnit(sig, 0, unit_exponent(sig.free_rank, index));
}

bool GroupUnit::is_identity() const { return torsion_ == 0 && free_.isZero(); }

GroupUnit GroupUnit::inverse() const { return GroupUnit(sig_, -torsion_, -free_); }

bool operator==(const GroupUnit& a, const GroupUnit& b)
{
  return a.sig_ == b.sig_ && a.torsion_ == b.torsion_ && a.free_ == b.free_;
}

std::string GroupUnit::to_string() const
{
  if (is_identity())
    return "1";
  std::string out;
  auto append = [&out](const std::string& factor) {
    if (!out.empty())
      out += "*";
    out += factor;
  };
  if (torsion_ != 0)
    append(torsion_ == 1 ? "zeta" : "zeta^" + std::to_string(torsion_));
  for (Eigen::Index k = 0; k < free_.size(); ++k) {
    if (free_(k) == 0)
      continue;
    std::string f = "t" + std::to_string(k + 1);
    if (free_(k) != 1)
      f += "^" + std::to_string(free_(k));
    append(f);
  }
  return out;
}

GroupUnit unit_mul(const GroupUnit& a, const GroupUnit& b)
{
  if (a.signature() != b.signature())
    throw ConfigurationError("group units from different scalar signatures");
  return GroupUnit(a.signature(), a.torsion() + b.torsion(), a.free() + b.free());
}

GroupUnit unit_pow(const GroupUnit& a, std::int64_t e)
{
  const auto m = a.signature().torsion_order;
  const auto torsion = floor_mod(floor_mod(a.torsion(), m) * floor_mod(e, m), m);
  return GroupUnit(a.signature(), torsion, a.free() * e);
}

} // namespace qseries
