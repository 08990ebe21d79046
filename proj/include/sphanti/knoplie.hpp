#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sphanti/lie.hpp"
#include "sphanti/report.hpp"
#include "sphanti/sphdatum.hpp"

namespace sphanti {

/// Structural checks: block layout, h and b inside g, h closed under the
/// bracket, sl2 relations for each triple, e and h in b, f outside b.
Report check_presentation(const LiePresentation& pres, const RootSystem& rs);

/// b + h = g, i.e. the base point lies in the open B-orbit (infinitesimally).
bool open_orbit_check(const LiePresentation& pres);

/// p_alpha = b + C f_alpha.
std::vector<Matrix> parabolic_basis(const LiePresentation& pres, std::size_t alpha);

/// Kernel of the differential of p_alpha -> pgl(2): the largest ideal of
/// p_alpha contained in b.
std::vector<Matrix> projection_kernel(const LiePresentation& pres, std::size_t alpha);

/// Basis of h ∩ p_alpha.
std::vector<Matrix> stabilizer_in_parabolic(const LiePresentation& pres, std::size_t alpha);

/// Image of x in sl(2) = span{E, H, F}: the (e, h, f) coordinates of x modulo
/// the kernel. Throws std::invalid_argument if x is not in p_alpha.
Matrix dphi_project(const LiePresentation& pres, std::size_t alpha, const Matrix& x);

/// Standard basis of sl(2).
Matrix sl2_E();
Matrix sl2_H();
Matrix sl2_F();

enum class ImageClass { torus_like, contains_nilpotent, full };

std::string_view to_string(ImageClass c);

struct Sl2Image {
  std::vector<Matrix> basis;
  ImageClass cls = ImageClass::full;
};

/// dim 3 -> full, dim 2 -> contains_nilpotent, dim 1 -> torus_like iff the
/// generator has det != 0. A zero image throws DatumInconsistency.
Sl2Image classify_image(std::span<const Matrix> vectors);

/// Separates a from 2a for a torus image: a witness inverting the torus
/// gives 2a (a centralizing one is ignored), then chi_pairing 1 -> a,
/// 2 -> 2a. nullopt when neither decides. Throws std::invalid_argument
/// for a witness that does not normalize the torus.
std::optional<ColorType> resolve_torus_like(const Sl2Image& image, const std::optional<Matrix>& witness,
                                            const std::optional<int>& chi_pairing);

struct KnopVerdict {
  std::size_t alpha = 0;
  Sl2Image image;
  std::optional<ColorType> type;
  /// "image", "witness", "chi", "sigma" or "unresolved".
  std::string resolved_by;
};

/// Type of a color read off from the image of h ∩ p_alpha in pgl(2), for one
/// moving root alpha. Requires a presentation passing open_orbit_check.
KnopVerdict classify_knop(const SphericalDatum& datum, const ColorRecord& color, std::size_t alpha);

/// All moving roots; they must agree. Throws InsufficientData when the
/// type stays unresolved, DatumInconsistency on disagreement.
ColorType classify_knop(const SphericalDatum& datum, const ColorRecord& color);

/// Per simple root: the image is full exactly for alpha in Sp, and a full
/// image forces <alpha^vee, M> = 0.
Report audit_images(const SphericalDatum& datum);

}  // namespace sphanti
