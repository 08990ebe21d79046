#pragma once

#include <optional>

#include "sphanti/report.hpp"
#include "sphanti/sphdatum.hpp"

namespace sphanti {

/// Type of a color from the spherical roots: alpha in Sigma gives a,
/// 2 alpha in Sigma gives 2a, otherwise b, for alpha moving the color.
/// Throws InsufficientData without Sigma and DatumInconsistency when two
/// moving roots disagree.
ColorType classify_luna(const SphericalDatum& datum, const ColorRecord& color);

/// <alpha^vee, chi_i> for a color of type t; member says whether the color
/// lies in Delta(alpha).
int expected_chi_pairing(ColorType t, bool member);

/// Declared type, else the Luna type when Sigma is present, else nullopt.
/// Throws DatumInconsistency when declared and Luna types differ.
std::optional<ColorType> resolved_type(const SphericalDatum& datum, const ColorRecord& color);

/// The chi pairing table for every color carrying chi and every alpha
/// outside Sp. Types come from resolved_type; unresolved or conflicting
/// colors produce a failing "type_resolved" finding instead of throwing.
Report chi_pairing_findings(const SphericalDatum& datum);

/// chi pairing table, <alpha^vee, kappa_P> = 2 for a/2a colors, and
/// <alpha^vee, M> = 0 for alpha in Sp.
Report audit_pairings(const SphericalDatum& datum);

}  // namespace sphanti
