#pragma once

#include <string>
#include <string_view>

#include "sphanti/sphdatum.hpp"
#include "json.hpp"

namespace sphanti {

inline constexpr std::string_view kDatumVersion = "sphdatum/1";

/// Parses a JSON datum document ("sphdatum/1"). Errors are ParseError with
/// the JSON line/column or the offending field path.
SphericalDatum parse_datum(std::string_view text);
SphericalDatum datum_from_json(const nlohmann::json& doc);

nlohmann::json datum_to_json(const SphericalDatum& datum);
std::string serialize_datum(const SphericalDatum& datum);

nlohmann::json weight_to_json(const Weight& w);
nlohmann::json coweight_to_json(const Coweight& cw);
nlohmann::json rational_to_json(const Rational& q);
nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json report_to_json(const Report& report);

Weight weight_from_json(const nlohmann::json& j, const RootSystem& rs, const std::string& path);
Coweight coweight_from_json(const nlohmann::json& j, const RootSystem& rs, const std::string& path);
Rational rational_from_json(const nlohmann::json& j, const std::string& path);
Matrix matrix_from_json(const nlohmann::json& j, const std::string& path);

}  // namespace sphanti
