#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sphanti/sphdatum.hpp"

namespace sphanti {

/// Div s = sum m_i D_i + sum X_j.
struct AnticanonicalDivisor {
  /// In datum color order.
  std::vector<std::pair<std::string, std::int64_t>> color_coeffs;
  std::int64_t boundary_coeff = 1;
  int boundary_count = 0;

  std::vector<std::int64_t> coefficients() const;
  std::string to_string() const;
};

/// {v : <v, sigma> <= 0 for all sigma}.
struct ValuationCone {
  std::vector<Weight> halfspaces;
};

/// Weight of the distinguished anticanonical section: 2 rho_S - 2 rho_Sp.
Weight kappa(const RootSystem& rs, const RootSet& sp);

/// 1 for types a and 2a, <alpha^vee, kappa_P> for type b (all moving roots
/// must agree).
std::int64_t color_coefficient(const SphericalDatum& datum, const ColorRecord& color);

AnticanonicalDivisor anticanonical_divisor(const SphericalDatum& datum);

/// sum m_i chi_i == kappa_P on the semisimple coordinates. Throws
/// InsufficientData when a color lacks chi.
bool verify_decomposition(const SphericalDatum& datum);

inline constexpr std::size_t kMaxEnumerationColors = 10;
inline constexpr std::int64_t kMaxEnumerationBound = 12;

/// Every m in [1, bound]^k with sum m_i chi_i = kappa on the semisimple
/// coordinates, in lexicographic order. Exhaustive; branches are cut only
/// when the remaining coordinates provably cannot reach kappa.
std::vector<std::vector<std::int64_t>> enumerate_positive_solutions(const Weight& kappa,
                                                                    const std::vector<Weight>& chis,
                                                                    std::int64_t bound);

ValuationCone valuation_cone(const SphericalDatum& datum);
bool cone_contains(const ValuationCone& cone, const Coweight& v);

/// Directions generating the valuation cone inside N_Q, as coweights that
/// restrict correctly to M: one ray per spherical root (pairing -1 with it,
/// 0 with the others) and both signs of a basis of the lineality space.
/// Needs Sigma and M.
std::vector<Coweight> cone_generators(const SphericalDatum& datum);

/// Vanishing order along the boundary divisor with valuation nu of the
/// generator s * f_mu: 1 + <nu, mu>.
Rational generator_order_shift(const SphericalDatum& datum, const Weight& mu, const Coweight& nu);

struct UniquenessCertificate {
  bool holds = false;
  /// Interior point of the cone: pairs to -1 with every spherical root.
  Coweight witness;
};

/// The cone is full-dimensional in N_Q, so a weight in M_Q orthogonal to
/// the whole cone is zero. Needs Sigma and M.
UniquenessCertificate uniqueness_certificate(const SphericalDatum& datum);

}  // namespace sphanti
