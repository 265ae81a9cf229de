#include "qseries/field.hpp"

#include "qseries/errors.hpp"

namespace qseries {

namespace {

bool is_plain(const ScalarSignature& sig) { return sig == ScalarSignature{}; }

ScalarSignature common_signature(const ScalarSignature& a, const ScalarSignature& b)
{
  if (a == b)
    return a;
  if (is_plain(a))
    return b;
  if (is_plain(b))
    return a;
  throw ConfigurationError("field elements from different scalar signatures");
}

std::string monomial_string(const Exponent& e)
{
  std::string out;
  for (Eigen::Index k = 0; k < e.size(); ++k) {
    if (e(k) == 0)
      continue;
    if (!out.empty())
      out += "*";
    out += "t" + std::to_string(k + 1);
    if (e(k) != 1)
      out += "^" + std::to_string(e(k));
  }
  return out;
}

std::string term_string(const Exponent& e, const CycNumber& c)
{
  const std::string mono = monomial_string(e);
  if (mono.empty())
    return c.to_string();
  if (c.is_one())
    return mono;
  if (c == -CycNumber(c.order(), Rational(1)))
    return "-" + mono;
  if (c.weight() == 1)
    return c.to_string() + "*" + mono;
  return "(" + c.to_string() + ")*" + mono;
}

} // namespace

LaurentPoly::LaurentPoly(ScalarSignature sig, const CycNumber& c) : LaurentPoly(sig, c, Exponent::Zero(sig.free_rank)) {}

LaurentPoly::LaurentPoly(ScalarSignature sig, const CycNumber& c, const Exponent& e) : sig_(sig)
{
  if (e.size() != sig.free_rank)
    throw ConfigurationError("Laurent monomial exponent has the wrong length");
  add_term(e, c.promoted(sig.torsion_order));
}

bool LaurentPoly::is_one() const
{
  return terms_.size() == 1 && terms_.begin()->first.isZero() && terms_.begin()->second.is_one();
}

void LaurentPoly::add_term(const Exponent& e, const CycNumber& c)
{
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const
{
  LaurentPoly out(sig_);
  for (const auto& [e, c] : terms_)
    out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
  if (sig_ != o.sig_)
    throw ConfigurationError("Laurent polynomials from different scalar signatures");
  for (const auto& [e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
  if (a.sig_ != b.sig_)
    throw ConfigurationError("Laurent polynomials from different scalar signatures");
  LaurentPoly out(a.sig_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_)
      out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPoly LaurentPoly::scaled(const CycNumber& c) const
{
  LaurentPoly out(sig_);
  if (c.is_zero())
    return out;
  for (const auto& [e, v] : terms_)
    out.terms_.emplace(e, v * c);
  return out;
}

LaurentPoly LaurentPoly::scaled(const GroupUnit& u) const
{
  if (u.signature() != sig_)
    throw ConfigurationError("scaling by a unit from a different scalar signature");
  LaurentPoly out(sig_);
  for (const auto& [e, v] : terms_)
    out.terms_.emplace(e + u.free(), v.times_zeta_power(u.torsion()));
  return out;
}

LaurentPoly LaurentPoly::shifted(const Exponent& s) const
{
  LaurentPoly out(sig_);
  for (const auto& [e, v] : terms_)
    out.terms_.emplace(e + s, v);
  return out;
}

std::string LaurentPoly::to_string() const
{
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string t = term_string(e, c);
    if (out.empty())
      out = t;
    else if (t.front() == '-')
      out += " - " + t.substr(1);
    else
      out += " + " + t;
  }
  return out;
}

FieldElem::FieldElem(ScalarSignature sig)
    : num_(sig), den_(sig, CycNumber(sig.torsion_order, Rational(1)))
{
  validate(sig);
}

FieldElem::FieldElem(ScalarSignature sig, const Rational& value) : FieldElem(sig)
{
  num_ = LaurentPoly(sig, CycNumber(sig.torsion_order, value));
}

FieldElem::FieldElem(ScalarSignature sig, const CycNumber& value) : FieldElem(sig)
{
  num_ = LaurentPoly(sig, value.promoted(sig.torsion_order));
}

FieldElem::FieldElem(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den))
{
  if (num_.signature() != den_.signature())
    throw ConfigurationError("fraction parts from different scalar signatures");
  if (den_.is_zero())
    throw DivisionByZero("fraction with zero denominator");
  normalize();
}

FieldElem FieldElem::free_generator(ScalarSignature sig, int index)
{
  return field_embed(GroupUnit::free_generator(sig, index));
}

bool FieldElem::is_one() const { return den_.is_one() && num_.is_one(); }

bool FieldElem::is_rational() const
{
  if (!den_.is_one())
    return false;
  if (num_.is_zero())
    return true;
  return num_.is_monomial() && num_.terms().begin()->first.isZero() && num_.terms().begin()->second.is_rational();
}

void FieldElem::normalize()
{
  const auto sig = num_.signature();
  const CycNumber one(sig.torsion_order, Rational(1));
  if (num_.is_zero()) {
    den_ = LaurentPoly(sig, one);
    return;
  }
  if (den_.is_one())
    return;
  const auto lead = *den_.terms().begin();
  const CycNumber lead_inv = lead.second.inverse();
  const Exponent shift = -lead.first;
  if (den_.is_monomial()) {
    num_ = num_.scaled(lead_inv).shifted(shift);
    den_ = LaurentPoly(sig, one);
    return;
  }
  num_ = num_.scaled(lead_inv).shifted(shift);
  den_ = den_.scaled(lead_inv).shifted(shift);
  if (num_.terms().size() == den_.terms().size()) {
    const auto& [e1, c1] = *num_.terms().begin();
    if (den_.scaled(c1).shifted(e1) == num_) {
      num_ = LaurentPoly(sig, c1, e1);
      den_ = LaurentPoly(sig, one);
    }
  }
}

FieldElem FieldElem::promoted(ScalarSignature sig) const
{
  if (signature() == sig)
    return *this;
  if (!is_plain(signature()) || !is_rational())
    throw ConfigurationError("cannot move a field element between scalar signatures");
  return is_zero() ? FieldElem(sig) : FieldElem(sig, num_.terms().begin()->second.rational_part());
}

FieldElem FieldElem::operator-() const
{
  FieldElem out = *this;
  out.num_ = -num_;
  return out;
}

FieldElem& FieldElem::operator+=(const FieldElem& o)
{
  const auto sig = common_signature(signature(), o.signature());
  if (signature() != sig)
    *this = promoted(sig);
  if (o.signature() != sig)
    return *this += o.promoted(sig);
  if (o.is_zero())
    return *this;
  if (is_zero())
    return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o)
{
  const auto sig = common_signature(signature(), o.signature());
  if (signature() != sig)
    *this = promoted(sig);
  if (o.signature() != sig)
    return *this *= o.promoted(sig);
  if (is_zero())
    return *this;
  if (o.is_zero())
    return *this = FieldElem(sig);
  num_ = num_ * o.num_;
  if (!o.den_.is_one())
    den_ = den_.is_one() ? o.den_ : den_ * o.den_;
  normalize();
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inverse(); }

FieldElem FieldElem::inverse() const
{
  if (is_zero())
    throw DivisionByZero("inverse of the zero field element");
  return FieldElem(den_, num_);
}

FieldElem FieldElem::scaled(const GroupUnit& u) const
{
  if (signature() != u.signature()) {
    if (is_plain(signature()) && is_rational())
      return promoted(u.signature()).scaled(u);
    throw ConfigurationError("scaling by a unit from a different scalar signature");
  }
  FieldElem out = *this;
  out.num_ = num_.scaled(u);
  out.normalize();
  return out;
}

FieldElem FieldElem::pow(std::int64_t e) const
{
  if (e < 0)
    return inverse().pow(-e);
  FieldElem result = FieldElem::one(signature());
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1)
      result *= base;
    e >>= 1;
    if (e > 0)
      base *= base;
  }
  return result;
}

bool operator==(const FieldElem& a, const FieldElem& b)
{
  if (a.signature() != b.signature()) {
    const auto sig = common_signature(a.signature(), b.signature());
    if (!(a.signature() == sig ? b.is_rational() : a.is_rational()))
      return false;
    return a.promoted(sig) == b.promoted(sig);
  }
  if (a.den_ == b.den_)
    return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

bool FieldElem::prints_atomic() const
{
  return den_.is_one() && num_.terms().size() <= 1 &&
         (num_.is_zero() || num_.terms().begin()->second.weight() == 1);
}

std::string FieldElem::to_string() const
{
  if (den_.is_one())
    return num_.to_string();
  return "(" + num_.to_string() + ")*inv(" + den_.to_string() + ")";
}

FieldElem field_embed(const GroupUnit& u)
{
  const auto& sig = u.signature();
  return FieldElem(LaurentPoly(sig, CycNumber::zeta_power(sig.torsion_order, u.torsion()), u.free()),
                   LaurentPoly(sig, CycNumber(sig.torsion_order, Rational(1))));
}

FieldElem field_inv(const FieldElem& a) { return a.inverse(); }

} // namespace qseries
