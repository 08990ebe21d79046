#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sphanti/lie.hpp"
#include "sphanti/report.hpp"
#include "sphanti/rootsys.hpp"

namespace sphanti {

enum class ColorType { a, two_a, b };

std::string_view to_string(ColorType t);
/// Accepts "a", "2a", "b".
std::optional<ColorType> parse_color_type(std::string_view text);

/// A color D together with the simple roots alpha whose minimal parabolic
/// moves it (D in Delta(alpha)).
struct ColorRecord {
  std::string name;
  RootSet moved_by;
  std::optional<ColorType> declared_type;
  /// Left B-weight of an equation of D on G.
  std::optional<Weight> chi;
  /// rho(D) in N.
  std::optional<Coweight> rho;
};

/// Combinatorial record of a spherical homogeneous space G/H, together with
/// the number of G-invariant prime divisors of the embedding considered.
struct SphericalDatum {
  RootSystem rs;
  RootSet sp;
  std::vector<ColorRecord> colors;
  std::optional<std::vector<Weight>> lattice_m;
  std::optional<std::vector<Weight>> spherical_roots;
  int boundary_count = 0;
  std::optional<LiePresentation> presentation;

  /// Throws std::invalid_argument for unknown names.
  std::size_t color_index(std::string_view name) const;
  /// Delta(alpha) as indices into colors.
  std::vector<std::size_t> delta(std::size_t alpha) const;
};

/// Complement in S of the union of the moved_by sets.
RootSet compute_sp(const SphericalDatum& datum);

/// Checks performed at construction time: Sigma independent, no alpha with
/// both alpha and 2 alpha in Sigma, |Sigma| <= rank M, dimensions match.
/// Throws ParseError with a field path.
void check_structure(const SphericalDatum& datum);

/// Every finding is data: Sp consistency, |Delta(alpha)| <= 2, declared
/// types against Delta(alpha), Sigma in span(M), Luna types against declared
/// types, and the chi-pairing table when chi is present. Findings are
/// sorted, so the report does not depend on color order.
Report validate_datum(const SphericalDatum& datum);

}  // namespace sphanti
