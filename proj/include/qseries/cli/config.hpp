#pragma once

#include <string>

#include <json.hpp>

#include "qseries/qmatrix.hpp"
#include "qseries/series.hpp"

namespace qseries::cli {

struct RingConfig {
  int n = 0;
  ScalarSignature signature;
  QMatrix q{ScalarSignature{}, 0};
  int precision = kDefaultPrecision;
};

// Document layout:
//   {"n": 3, "m": 1, "r": 1, "precision": 8,
//    "q": [[{"torsion": 0, "free": [0]}, {"torsion": 0, "free": [1]}],
//          [{"torsion": 0, "free": [1]}]]}
// Row i of "q" lists q_{i,j} for j > i. "free" may be omitted when r = 0.
RingConfig parse_config(const nlohmann::json& doc);
RingConfig parse_config(const std::string& text);

nlohmann::json unit_to_json(const GroupUnit& u);
nlohmann::json config_to_json(const RingConfig& cfg);

} // namespace qseries::cli
