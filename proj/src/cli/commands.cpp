#include "qseries/cli/commands.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "qseries/center.hpp"
#include "qseries/cli/expr.hpp"
#include "qseries/errors.hpp"

namespace qseries::cli {

using nlohmann::json;

namespace {

const char* const kGoldieNote =
    "sqrt of the index of the radical; follows the root-of-unity example pattern, "
    "not established for general n";

json integer_json(const Integer& v)
{
  if (mp::abs(v) < Integer(std::numeric_limits<std::int64_t>::max()))
    return to_int64(v);
  return v.str();
}

json exponent_json(const Exponent& e)
{
  json out = json::array();
  for (Eigen::Index i = 0; i < e.size(); ++i)
    out.push_back(e(i));
  return out;
}

json subset_json(const IndexSet& w)
{
  json out = json::array();
  for (int i : w)
    out.push_back(i + 1);
  return out;
}

json basis_json(const KernelLattice& S)
{
  json rows = json::array();
  for (const auto& b : S.basis_vectors())
    rows.push_back(exponent_json(b));
  return rows;
}

json index_json(const std::optional<Integer>& index) { return index ? integer_json(*index) : json(nullptr); }

json stratum_json(const Stratum& st)
{
  return {{"w", subset_json(st.w)},
          {"kernel_basis", basis_json(st.S_w)},
          {"center_rank", st.center_rank},
          {"simple", st.simple},
          {"index", index_json(st.index)}};
}

json hprime_json(const IndexSet& w)
{
  json gens = json::array();
  for (int i : w)
    gens.push_back("x" + std::to_string(i + 1));
  return {{"w", subset_json(w)}, {"generators", gens}};
}

json goldie_json(const SpectrumReport& report)
{
  if (report.goldie_bound)
    return {{"bound", integer_json(*report.goldie_bound)}, {"status", "bounded"}, {"note", kGoldieNote}};
  return {{"bound", nullptr}, {"status", "not applicable"}, {"note", "radical of the bicharacter has rank < n"}};
}

std::string ufd_name(UfdVerdict v) { return v == UfdVerdict::UFD ? "UFD" : "inconclusive"; }

std::string basis_text(const KernelLattice& S)
{
  std::string out = "{";
  bool first = true;
  for (const auto& b : S.basis_vectors()) {
    out += first ? "(" : ", (";
    first = false;
    for (Eigen::Index i = 0; i < b.size(); ++i)
      out += (i ? "," : "") + std::to_string(b(i));
    out += ")";
  }
  return out + "}";
}

std::string index_text(const std::optional<Integer>& index) { return index ? index->str() : "infinite"; }

void require_args(const std::vector<std::string>& args, std::size_t lo, std::size_t hi, const std::string& usage)
{
  if (args.size() < lo || args.size() > hi)
    throw Error("usage: " + usage);
}

LaurentElem series_arg(const RingConfig& cfg, const std::string& text) { return evaluate(*parse_series(text, cfg), cfg); }

SkewSeries power_series_arg(const RingConfig& cfg, const std::string& text)
{
  const LaurentElem a = series_arg(cfg, text);
  if (!a.is_power_series())
    throw Error("expected a power series; '" + text + "' has negative powers");
  return a.body();
}

std::vector<Rational> rational_list(const std::string& text)
{
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const ExprPtr e = parse_series(item);
    if (e->kind != SeriesExpr::Kind::Number)
      throw ParseError("expected a rational number in '" + text + "'", 0);
    out.push_back(e->value);
  }
  return out;
}

IndexSet index_list(const std::string& text, int n)
{
  IndexSet w;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty())
      continue;
    std::size_t used = 0;
    const int i = std::stoi(item, &used);
    if (used != item.size() || i < 1 || i > n)
      throw Error("generator index '" + item + "' out of range 1.." + std::to_string(n));
    w.push_back(i - 1);
  }
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

using Handler = std::function<CommandResult(const RingConfig&, const std::vector<std::string>&)>;

CommandResult cmd_center(const RingConfig& cfg, const std::vector<std::string>& args)
{
  require_args(args, 0, 0, "center");
  const KernelLattice S = kernel_lattice(cfg.q);
  const Transversal T(S);
  json divisors = json::array();
  for (const auto& d : T.elementary_divisors())
    divisors.push_back(integer_json(d));
  const auto index = subgroup_index(S);
  CommandResult r;
  r.document = {{"basis", basis_json(S)}, {"rank", S.rank()}, {"index", index_json(index)}, {"elementary_divisors", divisors}};
  r.summary = "radical basis " + basis_text(S) + "\nrank " + std::to_string(S.rank()) + "\nindex " + index_text(index) + "\n";
  return r;
}

std::string strata_text(const SpectrumReport& report)
{
  std::string out;
  for (const auto& st : report.strata) {
    out += "J" + subset_label(st.w) + ": rank " + std::to_string(st.center_rank) + ", " +
           (st.simple ? "simple" : "not simple") + ", basis " + basis_text(st.S_w) + "\n";
  }
  return out;
}

CommandResult cmd_spectrum(const RingConfig& cfg, const std::vector<std::string>& args)
{
  require_args(args, 0, 0, "spectrum");
  const SpectrumReport report = full_report(cfg.q);
  CommandResult r;
  r.document = report_to_json(report);
  std::ostringstream text;
  text << "n " << report.n << "\ngeneric " << (report.generic ? "yes" : "no") << "\n";
  text << "H-primes " << report.h_primes.size() << "\n" << strata_text(report);
  text << "UFD verdict " << ufd_name(report.ufd) << "\n";
  text << "Goldie bound " << (report.goldie_bound ? report.goldie_bound->str() : "not applicable") << "\n";
  r.summary = text.str();
  r.dot = to_dot(report);
  return r;
}

CommandResult cmd_strata(const RingConfig& cfg, const std::vector<std::string>& args)
{
  require_args(args, 0, 0, "strata");
  const SpectrumReport report = full_report(cfg.q);
  json strata = json::array();
  for (const auto& st : report.strata)
    strata.push_back(stratum_json(st));
  CommandResult r;
  r.document = {{"strata", strata}};
  r.summary = strata_text(report);
  r.dot = to_dot(report);
  return r;
}

CommandResult cmd_hprimes(const RingConfig& cfg, const std::vector<std::string>& args)
{
  require_args(args, 0, 0, "hprimes");
  json list = json::array();
  std::string text;
  for (const auto& w : h_primes(cfg.q)) {
    list.push_back(hprime_json(w));
    text += "J" + subset_label(w) + "\n";
  }
  CommandResult r;
  r.document = {{"count", list.size()}, {"h_primes", list}};
  r.summary = std::to_string(list.size()) + " H-primes\n" + text;
  r.dot = to_dot(full_report(cfg.q));
  return r;
}

CommandResult cmd_is_generic(const RingConfig& cfg, const std::vector<std::string>& args)
{
  require_args(args, 0, 0, "is-generic");
  const bool g = is_generic(cfg.q);
  CommandResult r;
  r.document = {{"generic", g}};
  r.summary = std::string(g ? "generic" : "not generic") + "\n";
  return r;
}

CommandResult cmd_is_ufd(const RingConfig& cfg, const std::vector<std::string>& args)
{
  require_args(args, 0, 0, "is-ufd");
  const bool g = is_generic(cfg.q);
  const std::string verdict = g ? "UFD" : "inconclusive";
  CommandResult r;
  r.document = {{"generic", g}, {"ufd_verdict", verdict}};
  r.summary = verdict + "\n";
  return r;
}

CommandResult cmd_goldie(const RingConfig& cfg, const std::vector<std::string>& args)
{
  require_args(args, 0, 0, "goldie");
  const SpectrumReport report = full_report(cfg.q);
  const Stratum& whole = report.strata.front();
  CommandResult r;
  r.document = {{"index", index_json(whole.index)}, {"goldie", goldie_json(report)}};
  r.summary = "Goldie bound " + (report.goldie_bound ? report.goldie_bound->str() : std::string("not applicable")) + "\n";
  return r;
}

CommandResult series_result(const RingConfig& cfg, const LaurentElem& a)
{
  CommandResult r;
  r.document = {{"result", series_to_json(cfg.q, a)}};
  r.summary = to_string(cfg.q, a) + "\n";
  return r;
}

CommandResult cmd_mul(const RingConfig& cfg, const std::vector<std::string>& args)
{
  require_args(args, 2, 2, "mul <f> <g>");
  return series_result(cfg, laurent_mul(cfg.q, series_arg(cfg, args[0]), series_arg(cfg, args[1])));
}

CommandResult cmd_pow(const RingConfig& cfg, const std::vector<std::string>& args)
{
  require_args(args, 2, 2, "pow <f> <k>");
  std::size_t used = 0;
  const long long k = std::stoll(args[1], &used);
  if (used != args[1].size())
    throw Error("exponent '" + args[1] + "' is not an integer");
  const ExprPtr e = SeriesExpr::pow(parse_series(args[0], cfg), k);
  return series_result(cfg, evaluate(*e, cfg));
}

CommandResult cmd_inv(const RingConfig& cfg, const std::vector<std::string>& args)
{
  require_args(args, 1, 1, "inv <f>");
  return series_result(cfg, laurent_inv(cfg.q, series_arg(cfg, args[0])));
}

CommandResult cmd_normal_check(const RingConfig& cfg, const std::vector<std::string>& args)
{
  require_args(args, 1, 1, "normal-check <f>");
  const SkewSeries f = power_series_arg(cfg, args[0]);
  const NormalityReport nr = normality_check(cfg.q, f);
  CommandResult r;
  r.document = {{"input", series_to_json(cfg.q, LaurentElem(f))},
                {"normal", nr.normal},
                {"precision", nr.precision},
                {"failing_generator", nr.normal ? json(nullptr) : json(nr.failing_generator + 1)},
                {"failing_degree", nr.normal ? json(nullptr) : json(nr.failing_degree)}};
  r.summary = nr.normal ? "normal to precision " + std::to_string(nr.precision) + "\n"
                        : "not normal: fails for x" + std::to_string(nr.failing_generator + 1) + " at degree " +
                              std::to_string(nr.failing_degree) + "\n";
  return r;
}

CommandResult cmd_decompose(const RingConfig& cfg, const std::vector<std::string>& args)
{
  require_args(args, 1, 1, "decompose <f>");
  const SkewSeries f = power_series_arg(cfg, args[0]);
  const KernelLattice S = kernel_lattice(cfg.q);
  const Transversal T(S);
  const CentralDecomposition dec = central_decompose(cfg.q, S, T, f);
  json comps = json::array();
  std::string text;
  for (const auto& [t, z] : dec.components) {
    comps.push_back({{"coset", exponent_json(t)}, {"z", series_to_json(cfg.q, z)}});
    text += monomial_to_string(t) + " * (" + to_string(cfg.q, z) + ")\n";
  }
  const bool ok = laurent_congruent(cfg.q, reassemble(cfg.q, dec), LaurentElem(f));
  CommandResult r;
  r.document = {{"precision", dec.precision}, {"components", comps}, {"reassembles", ok}};
  r.summary = text.empty() ? "0\n" : text;
  return r;
}

CommandResult cmd_monomialize(const RingConfig& cfg, const std::vector<std::string>& args)
{
  require_args(args, 1, 2, "monomialize <f> [h1,h2,...]");
  const SkewSeries f = power_series_arg(cfg, args[0]);
  TorusElement h = prime_probe(cfg.signature, cfg.n, 0);
  if (args.size() == 2) {
    const auto values = rational_list(args[1]);
    if (static_cast<int>(values.size()) != cfg.n)
      throw DimensionMismatch("torus element needs " + std::to_string(cfg.n) + " entries");
    h = TorusElement::from_rationals(cfg.signature, values);
  }
  const MonomializeResult m = monomialize(cfg.q, f, h);
  json monos = json::array();
  std::string text;
  for (const auto& e : m.monomials) {
    monos.push_back(exponent_json(e));
    text += monomial_to_string(e) + "\n";
  }
  json probe = json::array();
  for (const auto& c : h.entries())
    probe.push_back(c.to_string());
  CommandResult r;
  r.document = {{"monomials", monos}, {"probe", probe}, {"probe_retries", m.probe_retries}};
  r.summary = text + "probe retries " + std::to_string(m.probe_retries) + "\n";
  return r;
}

CommandResult cmd_chain_check(const RingConfig& cfg, const std::vector<std::string>& args)
{
  require_args(args, 0, 1, "chain-check [i,j,...]");
  IndexSet w;
  if (args.empty()) {
    for (int i = 0; i < cfg.n; ++i)
      w.push_back(i);
  }
  else {
    w = index_list(args[0], cfg.n);
  }
  const SpectrumReport report = full_report(cfg.q);
  int chains = 0;
  const int length = chain_check(report, w, &chains);
  CommandResult r;
  r.document = {{"w", subset_json(w)}, {"length", length}, {"chains", chains}};
  r.summary = std::to_string(chains) + " saturated chains to J" + subset_label(w) + ", all of length " +
              std::to_string(length) + "\n";
  return r;
}

CommandResult cmd_dot(const RingConfig& cfg, const std::vector<std::string>& args)
{
  require_args(args, 0, 0, "dot");
  CommandResult r;
  r.dot = to_dot(full_report(cfg.q));
  r.document = {{"dot", r.dot}};
  r.summary = r.dot;
  return r;
}

const std::map<std::string, Handler>& handlers()
{
  static const std::map<std::string, Handler> table = {
      {"center", cmd_center},
      {"spectrum", cmd_spectrum},
      {"strata", cmd_strata},
      {"hprimes", cmd_hprimes},
      {"is-generic", cmd_is_generic},
      {"is-ufd", cmd_is_ufd},
      {"goldie", cmd_goldie},
      {"mul", cmd_mul},
      {"pow", cmd_pow},
      {"inv", cmd_inv},
      {"normal-check", cmd_normal_check},
      {"decompose", cmd_decompose},
      {"monomialize", cmd_monomialize},
      {"chain-check", cmd_chain_check},
      {"dot", cmd_dot},
  };
  return table;
}

} // namespace

OutputFormat parse_output_format(const std::string& name)
{
  if (name == "json")
    return OutputFormat::Json;
  if (name == "text")
    return OutputFormat::Text;
  if (name == "dot")
    return OutputFormat::Dot;
  throw ConfigurationError("unknown output format '" + name + "'");
}

const std::vector<std::string>& command_names()
{
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers())
      out.push_back(name);
    return out;
  }();
  return names;
}

CommandResult run_command(const std::string& command, const RingConfig& cfg, const std::vector<std::string>& args)
{
  const auto it = handlers().find(command);
  if (it == handlers().end())
    throw CommandError(command, "unknown subcommand");
  try {
    CommandResult r = it->second(cfg, args);
    json doc = {{"command", command}};
    doc.update(r.document);
    r.document = std::move(doc);
    return r;
  }
  catch (const CommandError&) {
    throw;
  }
  catch (const std::exception& e) {
    throw CommandError(command, e.what());
  }
}

std::string render(const CommandResult& result, OutputFormat format, const std::string& command)
{
  switch (format) {
  case OutputFormat::Json:
    return result.document.dump(2) + "\n";
  case OutputFormat::Text:
    return result.summary;
  case OutputFormat::Dot:
    if (result.dot.empty())
      throw CommandError(command, "no graph view; dot output is available for spectrum, strata, hprimes and dot");
    return result.dot;
  }
  return {};
}

json report_to_json(const SpectrumReport& report)
{
  json primes = json::array();
  for (const auto& w : report.h_primes)
    primes.push_back(hprime_json(w));
  json strata = json::array();
  for (const auto& st : report.strata)
    strata.push_back(stratum_json(st));
  json height_one = json::array();
  for (int i : report.height_one)
    height_one.push_back(json::array({i + 1}));
  return {{"n", report.n},
          {"generic", report.generic},
          {"infinite_field", report.infinite_field},
          {"h_primes", primes},
          {"strata", strata},
          {"ufd_verdict", ufd_name(report.ufd)},
          {"height_one", height_one},
          {"goldie", goldie_json(report)}};
}

json series_to_json(const QMatrix& q, const LaurentElem& a)
{
  json terms = json::array();
  for (const auto& [e, c] : expand(q, a))
    terms.push_back({{"exponent", exponent_json(e)}, {"coefficient", c.to_string()}});
  return {{"text", to_string(q, a)}, {"known_below", a.known_below()}, {"terms", terms}};
}

} // namespace qseries::cli
