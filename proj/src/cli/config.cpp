#include "qseries/cli/config.hpp"

#include "qseries/errors.hpp"

namespace qseries::cli {

using nlohmann::json;

namespace {

ConfigurationError config_error(const std::string& path, const std::string& what)
{
  return ConfigurationError("config " + path + ": " + what);
}

std::int64_t read_int(const json& doc, const std::string& key, const std::string& path)
{
  if (!doc.contains(key))
    throw config_error(path, "missing field \"" + key + "\"");
  const json& v = doc.at(key);
  if (!v.is_number_integer())
    throw config_error(path + "/" + key, "expected an integer");
  return v.get<std::int64_t>();
}

std::string pair_name(int i, int j) { return "q(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

GroupUnit read_unit(const json& doc, ScalarSignature sig, const std::string& path, int i, int j)
{
  const std::string pair = pair_name(i, j) + ": ";
  if (!doc.is_object())
    throw config_error(path, pair + "expected {\"torsion\": int, \"free\": [int]}");
  if (!doc.contains("torsion") || !doc.at("torsion").is_number_integer())
    throw config_error(path + "/torsion", pair + "expected an integer");
  const std::int64_t torsion = doc.at("torsion").get<std::int64_t>();
  Exponent free = Exponent::Zero(sig.free_rank);
  if (doc.contains("free")) {
    const json& f = doc.at("free");
    if (!f.is_array() || static_cast<int>(f.size()) != sig.free_rank)
      throw config_error(path + "/free", pair + "expected " + std::to_string(sig.free_rank) + " integers");
    for (int k = 0; k < sig.free_rank; ++k) {
      if (!f[static_cast<std::size_t>(k)].is_number_integer())
        throw config_error(path + "/free/" + std::to_string(k), pair + "expected an integer");
      free(k) = f[static_cast<std::size_t>(k)].get<std::int64_t>();
    }
  }
  else if (sig.free_rank > 0) {
    throw config_error(path, pair + "missing field \"free\"");
  }
  return GroupUnit(sig, torsion, free);
}

} // namespace

RingConfig parse_config(const json& doc)
{
  if (!doc.is_object())
    throw config_error("/", "expected an object");
  RingConfig cfg;
  const std::int64_t n = read_int(doc, "n", "/");
  if (n < 0 || n > 16)
    throw config_error("/n", "n must lie in [0, 16]");
  const std::int64_t m = doc.contains("m") ? read_int(doc, "m", "/") : 1;
  if (m < 1)
    throw config_error("/m", "torsion order m must be at least 1");
  const std::int64_t r = doc.contains("r") ? read_int(doc, "r", "/") : 0;
  if (r < 0)
    throw config_error("/r", "free rank r must be non-negative");
  cfg.n = static_cast<int>(n);
  cfg.signature = ScalarSignature{static_cast<int>(m), static_cast<int>(r)};
  if (doc.contains("precision")) {
    const std::int64_t d = read_int(doc, "precision", "/");
    if (d < 1)
      throw config_error("/precision", "precision must be at least 1");
    cfg.precision = static_cast<int>(d);
  }

  std::vector<GroupUnit> upper;
  const json empty = json::array();
  const json& rows = doc.contains("q") ? doc.at("q") : empty;
  if (!rows.is_array())
    throw config_error("/q", "expected an array of rows");
  if (cfg.n > 1 && static_cast<int>(rows.size()) < cfg.n - 1)
    throw config_error("/q", "missing entry " + pair_name(static_cast<int>(rows.size()), static_cast<int>(rows.size()) + 1));
  if (static_cast<int>(rows.size()) > std::max(cfg.n - 1, 0))
    throw config_error("/q", "expected " + std::to_string(std::max(cfg.n - 1, 0)) + " rows");
  for (int i = 0; i + 1 < cfg.n; ++i) {
    const std::string row_path = "/q/" + std::to_string(i);
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array())
      throw config_error(row_path, "expected an array");
    const int expected = cfg.n - 1 - i;
    if (static_cast<int>(row.size()) < expected)
      throw config_error(row_path, "missing entry " + pair_name(i, i + 1 + static_cast<int>(row.size())));
    if (static_cast<int>(row.size()) > expected)
      throw config_error(row_path, "too many entries; row " + std::to_string(i + 1) + " holds " +
                                       std::to_string(expected));
    for (int k = 0; k < expected; ++k)
      upper.push_back(read_unit(row[static_cast<std::size_t>(k)], cfg.signature,
                                row_path + "/" + std::to_string(k), i, i + 1 + k));
  }
  cfg.q = QMatrix::from_upper(cfg.signature, cfg.n, upper);
  return cfg;
}

RingConfig parse_config(const std::string& text)
{
  json doc;
  try {
    doc = json::parse(text);
  }
  catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed config document: ") + e.what(), e.byte);
  }
  return parse_config(doc);
}

json unit_to_json(const GroupUnit& u)
{
  json free = json::array();
  for (Eigen::Index k = 0; k < u.free().size(); ++k)
    free.push_back(u.free()(k));
  return {{"torsion", u.torsion()}, {"free", free}};
}

json config_to_json(const RingConfig& cfg)
{
  json rows = json::array();
  for (int i = 0; i + 1 < cfg.n; ++i) {
    json row = json::array();
    for (int j = i + 1; j < cfg.n; ++j)
      row.push_back(unit_to_json(cfg.q(i, j)));
    rows.push_back(row);
  }
  return {{"n", cfg.n},
          {"m", cfg.signature.torsion_order},
          {"r", cfg.signature.free_rank},
          {"precision", cfg.precision},
          {"q", rows}};
}

} // namespace qseries::cli
