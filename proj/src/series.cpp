#include "qseries/series.hpp"

#include <algorithm>

#include "qseries/errors.hpp"

namespace qseries {

namespace {

FieldElem coerce(const FieldElem& c, const ScalarSignature& sig)
{
  return c.signature() == sig ? c : c.promoted(sig);
}

void accumulate(TermMap& terms, const Exponent& e, const FieldElem& c)
{
  if (c.is_zero())
    return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms.erase(it);
  }
}

int degree_of(const Exponent& e) { return static_cast<int>(total_degree(e)); }

} // namespace

SkewSeries::SkewSeries(int n, ScalarSignature sig, int precision) : n_(n), sig_(sig), precision_(precision)
{
  validate(sig);
  if (n < 0)
    throw DimensionMismatch("number of variables must be non-negative");
  if (precision < 1)
    throw Error("series precision must be positive, got " + std::to_string(precision));
}

SkewSeries SkewSeries::constant(int n, ScalarSignature sig, int precision, const FieldElem& c)
{
  return monomial(n, sig, precision, Exponent::Zero(n), c);
}

SkewSeries SkewSeries::one(int n, ScalarSignature sig, int precision)
{
  return constant(n, sig, precision, FieldElem::one(sig));
}

SkewSeries SkewSeries::monomial(int n, ScalarSignature sig, int precision, const Exponent& s)
{
  return monomial(n, sig, precision, s, FieldElem::one(sig));
}

SkewSeries SkewSeries::monomial(int n, ScalarSignature sig, int precision, const Exponent& s, const FieldElem& c)
{
  SkewSeries f(n, sig, precision);
  f.add_term(s, c);
  return f;
}

SkewSeries SkewSeries::variable(int n, ScalarSignature sig, int precision, int i)
{
  if (i < 0 || i >= n)
    throw DimensionMismatch("variable index out of range");
  return monomial(n, sig, precision, unit_exponent(n, i));
}

FieldElem SkewSeries::coefficient(const Exponent& s) const
{
  if (auto it = terms_.find(s); it != terms_.end())
    return it->second;
  return FieldElem::zero(sig_);
}

int SkewSeries::order() const { return terms_.empty() ? precision_ : degree_of(terms_.begin()->first); }

void SkewSeries::add_term(const Exponent& s, const FieldElem& c)
{
  if (s.size() != n_)
    throw DimensionMismatch("monomial has " + std::to_string(s.size()) + " exponents, expected " +
                            std::to_string(n_));
  if ((s.array() < 0).any())
    throw Error("power series exponents must be non-negative");
  if (degree_of(s) >= precision_)
    return;
  accumulate(terms_, s, coerce(c, sig_));
}

SkewSeries SkewSeries::truncated(int precision) const
{
  SkewSeries out(n_, sig_, std::min(precision, precision_));
  for (const auto& [s, c] : terms_) {
    if (degree_of(s) >= out.precision_)
      break;
    out.terms_.emplace(s, c);
  }
  return out;
}

SkewSeries SkewSeries::homogeneous_part(int degree) const
{
  SkewSeries out(n_, sig_, precision_);
  for (const auto& [s, c] : terms_) {
    if (degree_of(s) == degree)
      out.terms_.emplace(s, c);
  }
  return out;
}

void SkewSeries::check_compatible(const SkewSeries& o) const
{
  if (n_ != o.n_)
    throw DimensionMismatch("series in different numbers of variables");
  if (sig_ != o.sig_)
    throw ConfigurationError("series over different scalar signatures");
}

SkewSeries SkewSeries::operator-() const
{
  SkewSeries out(n_, sig_, precision_);
  for (const auto& [s, c] : terms_)
    out.terms_.emplace(s, -c);
  return out;
}

SkewSeries& SkewSeries::operator+=(const SkewSeries& o)
{
  check_compatible(o);
  if (o.precision_ < precision_)
    *this = truncated(o.precision_);
  for (const auto& [s, c] : o.terms_) {
    if (degree_of(s) >= precision_)
      break;
    accumulate(terms_, s, c);
  }
  return *this;
}

SkewSeries& SkewSeries::operator-=(const SkewSeries& o) { return *this += -o; }

SkewSeries operator*(const FieldElem& c, const SkewSeries& f)
{
  SkewSeries out(f.n_, f.sig_, f.precision_);
  if (c.is_zero())
    return out;
  const FieldElem cc = coerce(c, f.sig_);
  for (const auto& [s, v] : f.terms_)
    out.terms_.emplace(s, cc * v);
  return out;
}

bool operator==(const SkewSeries& a, const SkewSeries& b)
{
  if (a.n_ != b.n_ || a.sig_ != b.sig_)
    return false;
  const int d = std::min(a.precision_, b.precision_);
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (;;) {
    const bool ea = ia == a.terms_.end() || degree_of(ia->first) >= d;
    const bool eb = ib == b.terms_.end() || degree_of(ib->first) >= d;
    if (ea || eb)
      return ea && eb;
    if (ia->first != ib->first || ia->second != ib->second)
      return false;
    ++ia;
    ++ib;
  }
}

std::pair<GroupUnit, Exponent> mono_mul(const QMatrix& q, const Exponent& s, const Exponent& t)
{
  return {normal_order_scalar(q, s, t), s + t};
}

namespace {

// Product with every term of total degree < degree kept; the caller
// guarantees those coefficients only involve known terms.
SkewSeries mul_to_degree(const QMatrix& q, const SkewSeries& f, const SkewSeries& g, int degree)
{
  SkewSeries out(f.variables(), f.signature(), std::max(1, degree));
  TermMap acc;
  for (const auto& [s, a] : f.terms()) {
    const int ds = degree_of(s);
    if (ds >= degree)
      break;
    for (const auto& [t, b] : g.terms()) {
      if (ds + degree_of(t) >= degree)
        break;
      accumulate(acc, s + t, (a * b).scaled(normal_order_scalar(q, s, t)));
    }
  }
  for (const auto& [e, c] : acc)
    out.add_term(e, c);
  return out;
}

} // namespace

SkewSeries mul(const QMatrix& q, const SkewSeries& f, const SkewSeries& g)
{
  if (f.variables() != g.variables() || f.variables() != q.size())
    throw DimensionMismatch("series and q-matrix sizes differ");
  if (f.signature() != g.signature() || f.signature() != q.signature())
    throw ConfigurationError("series and q-matrix use different scalar signatures");
  return mul_to_degree(q, f, g, std::min(f.precision(), g.precision()));
}

SkewSeries power(const QMatrix& q, const SkewSeries& f, int k)
{
  if (k < 0)
    throw Error("negative power of a power series; invert first");
  SkewSeries result = SkewSeries::one(f.variables(), f.signature(), f.precision());
  SkewSeries base = f;
  while (k > 0) {
    if (k & 1)
      result = mul(q, result, base);
    k >>= 1;
    if (k > 0)
      base = mul(q, base, base);
  }
  return result;
}

SkewSeries invert(const QMatrix& q, const SkewSeries& f)
{
  const FieldElem c0 = f.constant_term();
  if (c0.is_zero())
    throw NotAUnit("series has zero constant term and lies in the augmentation ideal");
  const FieldElem c0_inv = c0.inverse();
  const int d = f.precision();
  SkewSeries g = SkewSeries::constant(f.variables(), f.signature(), d, c0_inv);
  // Solve f g = 1 one total degree at a time: c0 g_D = -(f - c0) g_{<D} in degree D.
  for (int degree = 1; degree < d; ++degree) {
    TermMap acc;
    for (const auto& [s, a] : f.terms()) {
      const int ds = degree_of(s);
      if (ds == 0)
        continue;
      if (ds > degree)
        break;
      for (const auto& [t, b] : g.terms()) {
        const int dt = degree_of(t);
        if (ds + dt > degree)
          break;
        if (ds + dt == degree)
          accumulate(acc, s + t, (a * b).scaled(normal_order_scalar(q, s, t)));
      }
    }
    for (const auto& [e, c] : acc)
      g.add_term(e, -(c0_inv * c));
  }
  return g;
}

SkewSeries conjugate_by_monomial(const QMatrix& q, const Exponent& v, const SkewSeries& f)
{
  SkewSeries out(f.variables(), f.signature(), f.precision());
  for (const auto& [s, c] : f.terms())
    out.add_term(s, c.scaled(sigma(q, v, s)));
  return out;
}

SkewSeries conjugate_by_xi(const QMatrix& q, int i, const SkewSeries& f)
{
  if (i < 0 || i >= q.size())
    throw DimensionMismatch("generator index out of range");
  return conjugate_by_monomial(q, unit_exponent(q.size(), i), f);
}

TorusElement::TorusElement(std::vector<FieldElem> entries) : entries_(std::move(entries))
{
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].is_zero())
      throw InvalidTorusElement("torus entry h" + std::to_string(i + 1) + " is zero");
  }
}

TorusElement TorusElement::from_rationals(ScalarSignature sig, const std::vector<Rational>& values)
{
  std::vector<FieldElem> entries;
  for (const auto& v : values)
    entries.emplace_back(sig, v);
  return TorusElement(std::move(entries));
}

FieldElem TorusElement::character(const Exponent& s) const
{
  if (s.size() != size())
    throw DimensionMismatch("torus element and exponent sizes differ");
  FieldElem out = FieldElem::one(entries_.empty() ? ScalarSignature{} : entries_.front().signature());
  for (int i = 0; i < size(); ++i) {
    if (s(i) != 0)
      out *= entries_[static_cast<std::size_t>(i)].pow(s(i));
  }
  return out;
}

SkewSeries apply_torus(const TorusElement& h, const SkewSeries& f)
{
  if (h.size() != f.variables())
    throw DimensionMismatch("torus element has the wrong number of entries");
  SkewSeries out(f.variables(), f.signature(), f.precision());
  for (const auto& [s, c] : f.terms())
    out.add_term(s, h.character(s) * c);
  return out;
}

namespace {

// Exponents of total degree < bound, in grlex order.
std::vector<Exponent> monomials_below(int n, int bound)
{
  std::vector<Exponent> out;
  if (bound <= 0)
    return out;
  Exponent e = Exponent::Zero(n);
  // depth-first over compositions
  auto rec = [&](auto&& self, int index, int remaining) -> void {
    if (index == n - 1 || n == 0) {
      if (n > 0)
        e(index) = remaining;
      out.push_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e(index) = k;
      self(self, index + 1, remaining - k);
    }
    e(index) = 0;
  };
  for (int degree = 0; degree < bound; ++degree) {
    if (n == 0) {
      if (degree == 0)
        out.push_back(e);
      continue;
    }
    rec(rec, 0, degree);
  }
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

struct SparseRow {
  std::map<int, FieldElem> coeffs;
  FieldElem rhs;
};

// Incremental elimination; returns false on an inconsistent equation.
class EchelonSystem {
public:
  bool add(SparseRow row)
  {
    for (;;) {
      if (row.coeffs.empty())
        return row.rhs.is_zero();
      auto lead = row.coeffs.begin();
      const int var = lead->first;
      auto pivot = pivots_.find(var);
      if (pivot == pivots_.end()) {
        const FieldElem inv = lead->second.inverse();
        for (auto& [v, c] : row.coeffs)
          c *= inv;
        row.rhs *= inv;
        pivots_.emplace(var, std::move(row));
        return true;
      }
      const FieldElem factor = lead->second;
      for (const auto& [v, c] : pivot->second.coeffs) {
        auto [it, inserted] = row.coeffs.try_emplace(v, -(factor * c));
        if (!inserted) {
          it->second -= factor * c;
          if (it->second.is_zero())
            row.coeffs.erase(it);
        }
      }
      row.coeffs.erase(var);
      row.rhs -= factor * pivot->second.rhs;
    }
  }

private:
  std::map<int, SparseRow> pivots_;
};

} // namespace

NormalityReport normality_check(const QMatrix& q, const SkewSeries& f)
{
  if (f.is_zero())
    throw NoLeadingTerm("normality is only defined for nonzero series");
  const int n = f.variables();
  const int d = f.precision();
  NormalityReport report;
  report.precision = d;
  const int lowest = f.order();
  const auto unknowns = monomials_below(n, d - lowest);
  const auto equations = monomials_below(n, d);
  std::map<Exponent, int, GrlexLess> unknown_index;
  for (std::size_t k = 0; k < unknowns.size(); ++k)
    unknown_index.emplace(unknowns[k], static_cast<int>(k));

  for (int j = 0; j < n; ++j) {
    const SkewSeries target = mul(q, f, SkewSeries::variable(n, f.signature(), d, j));
    EchelonSystem system;
    for (const auto& e : equations) {
      SparseRow row{{}, target.coefficient(e)};
      // coefficient of x^e in g f collects g_u c_s mu(u, s) over u + s = e
      for (const auto& [s, c] : f.terms()) {
        const Exponent u = e - s;
        if ((u.array() < 0).any())
          continue;
        auto it = unknown_index.find(u);
        if (it == unknown_index.end())
          continue;
        row.coeffs.emplace(it->second, c.scaled(normal_order_scalar(q, u, s)));
      }
      if (!system.add(std::move(row))) {
        report.normal = false;
        report.failing_generator = j;
        report.failing_degree = degree_of(e);
        return report;
      }
    }
  }
  return report;
}

std::pair<Exponent, FieldElem> grlex_leading(const SkewSeries& f)
{
  if (f.is_zero())
    throw NoLeadingTerm("the zero series has no leading term");
  return *f.terms().begin();
}

LaurentElem::LaurentElem(SkewSeries body) : LaurentElem(Exponent::Zero(body.variables()), std::move(body)) {}

LaurentElem::LaurentElem(Exponent shift, SkewSeries body) : shift_(std::move(shift)), body_(std::move(body))
{
  if (shift_.size() != body_.variables())
    throw DimensionMismatch("Laurent shift has the wrong length");
}

LaurentElem LaurentElem::monomial(const QMatrix& q, const Exponent& v, int known_below)
{
  TermMap terms;
  terms.emplace(v, FieldElem::one(q.signature()));
  return from_terms(q, terms, known_below);
}

LaurentElem LaurentElem::from_terms(const QMatrix& q, const TermMap& terms, int known_below)
{
  const int n = q.size();
  Exponent u = Exponent::Zero(n);
  for (const auto& [e, c] : terms) {
    if (degree_of(e) < known_below)
      u = u.cwiseMax(-e);
  }
  // an empty element known only below degree <= 0 still needs a positive
  // body precision; widen the shift instead of overstating what is known
  if (known_below + degree_of(u) < 1 && n > 0)
    u(0) += 1 - known_below - degree_of(u);
  const int precision = std::max(1, known_below + degree_of(u));
  SkewSeries body(n, q.signature(), precision);
  for (const auto& [e, c] : terms) {
    if (degree_of(e) >= known_below)
      continue;
    // x^{-u} (b x^{e+u}) = b mu(-u, e+u) x^e
    const Exponent s = e + u;
    body.add_term(s, c.scaled(normal_order_scalar(q, -u, s).inverse()));
  }
  return LaurentElem(u, std::move(body));
}

TermMap expand(const QMatrix& q, const LaurentElem& a)
{
  TermMap out;
  const Exponent neg = -a.shift();
  for (const auto& [s, c] : a.body().terms())
    accumulate(out, s + neg, c.scaled(normal_order_scalar(q, neg, s)));
  return out;
}

LaurentElem laurent_add(const QMatrix& q, const LaurentElem& a, const LaurentElem& b)
{
  TermMap terms = expand(q, a);
  for (const auto& [e, c] : expand(q, b))
    accumulate(terms, e, c);
  return LaurentElem::from_terms(q, terms, std::min(a.known_below(), b.known_below()));
}

LaurentElem laurent_mul(const QMatrix& q, const LaurentElem& a, const LaurentElem& b)
{
  // x^{-u} f x^{-v} g = mu(-u,-v) x^{-(u+v)} (x^v f x^{-v}) g
  const Exponent& u = a.shift();
  const Exponent& v = b.shift();
  // an unknown tail of a (degree >= known_below) meets b no lower than b's order
  const int bound = std::min(a.known_below() + lowest_degree(b), b.known_below() + lowest_degree(a));
  const int body_degree = bound + degree_of(u) + degree_of(v);
  const SkewSeries product = mul_to_degree(q, conjugate_by_monomial(q, v, a.body()), b.body(), body_degree);
  const FieldElem twist = field_embed(normal_order_scalar(q, -u, -v));
  const LaurentElem raw(u + v, twist * product);
  return LaurentElem::from_terms(q, expand(q, raw), bound);
}

int lowest_degree(const LaurentElem& a)
{
  if (a.body().is_zero())
    return a.known_below();
  return std::min(a.known_below(), a.body().order() - degree_of(a.shift()));
}

LaurentElem laurent_inv(const QMatrix& q, const LaurentElem& a)
{
  const SkewSeries& body = a.body();
  if (body.is_zero())
    throw NotAUnit("zero is not invertible");
  const Exponent v = grlex_leading(body).first;
  for (const auto& [s, c] : body.terms()) {
    if (((s - v).array() < 0).any())
      throw NotAUnit("element is not a monomial times a unit of the power series ring");
  }
  // body = x^v w with w(0) != 0
  SkewSeries w(body.variables(), body.signature(), body.precision() - degree_of(v));
  for (const auto& [s, c] : body.terms()) {
    const Exponent rest = s - v;
    w.add_term(rest, c.scaled(normal_order_scalar(q, v, rest).inverse()));
  }
  // (x^{-u} x^v w)^{-1} = w^{-1} x^{u-v}
  const SkewSeries w_inv = invert(q, w);
  const Exponent shift = a.shift() - v;
  TermMap terms;
  for (const auto& [s, c] : w_inv.terms())
    accumulate(terms, s, c);
  return LaurentElem::from_terms(q, right_multiply_monomial(q, terms, shift),
                                 w_inv.precision() + static_cast<int>(total_degree(shift)));
}

bool laurent_congruent(const QMatrix& q, const LaurentElem& a, const LaurentElem& b)
{
  const int bound = std::min(a.known_below(), b.known_below());
  TermMap diff = expand(q, a);
  for (const auto& [e, c] : expand(q, b))
    accumulate(diff, e, -c);
  for (const auto& [e, c] : diff) {
    if (degree_of(e) < bound)
      return false;
  }
  return true;
}

TermMap left_multiply_monomial(const QMatrix& q, const Exponent& w, const TermMap& terms)
{
  TermMap out;
  for (const auto& [s, c] : terms)
    accumulate(out, w + s, c.scaled(normal_order_scalar(q, w, s)));
  return out;
}

TermMap right_multiply_monomial(const QMatrix& q, const TermMap& terms, const Exponent& w)
{
  TermMap out;
  for (const auto& [s, c] : terms)
    accumulate(out, s + w, c.scaled(normal_order_scalar(q, s, w)));
  return out;
}

std::string monomial_to_string(const Exponent& s)
{
  std::string out;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) == 0)
      continue;
    if (!out.empty())
      out += "*";
    out += "x" + std::to_string(i + 1);
    if (s(i) != 1)
      out += "^" + std::to_string(s(i));
  }
  return out.empty() ? "1" : out;
}

std::string terms_to_string(const TermMap& terms)
{
  if (terms.empty())
    return "0";
  std::string out;
  for (const auto& [s, c] : terms) {
    std::string term;
    const std::string coeff = c.to_string();
    if (s.isZero()) {
      term = c.prints_atomic() ? coeff : "(" + coeff + ")";
    } else {
      const std::string mono = monomial_to_string(s);
      if (c.is_one())
        term = mono;
      else if ((-c).is_one())
        term = "-" + mono;
      else if (c.prints_atomic())
        term = coeff + "*" + mono;
      else
        term = "(" + coeff + ")*" + mono;
    }
    if (out.empty())
      out = term;
    else if (term.front() == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

std::string to_string(const SkewSeries& f) { return terms_to_string(f.terms()); }

std::string to_string(const QMatrix& q, const LaurentElem& a) { return terms_to_string(expand(q, a)); }

} // namespace qseries
