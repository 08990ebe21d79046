#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sphanti/sphdatum.hpp"

namespace sphanti {

/// Where an expected value comes from: stated in the literature for this
/// space, immediate from the definitions, or computed by hand.
enum class Provenance { published, trivial, derived };

std::string_view to_string(Provenance p);

struct CatalogExpectation {
  std::vector<ColorType> types;
  Provenance types_source = Provenance::published;
  std::vector<std::int64_t> coefficients;
  Provenance coefficients_source = Provenance::published;
  std::vector<std::int64_t> kappa_fund;
  Provenance kappa_source = Provenance::trivial;
  /// How chi and the spherical roots were obtained, when stored.
  std::string note;
};

struct CatalogEntry {
  std::string key;
  std::optional<int> param;
  SphericalDatum datum;
  CatalogExpectation expected;
};

struct CatalogKey {
  std::string key;
  std::string description;
  bool parametric = false;
  int min_param = 0;
  int max_param = 0;
  int default_param = 0;
};

const std::vector<CatalogKey>& catalog_keys();

/// Keys: toric, sl2_mod_T, sl2_mod_N, sl2_mod_U, brion_5_1, brion_5_2,
/// brion_5_3, brion_5_4. Parametric keys fall back to their default when
/// param is absent. Throws std::invalid_argument for unknown keys and
/// parameters out of range.
CatalogEntry builtin(std::string_view key, std::optional<int> param = std::nullopt);

}  // namespace sphanti
