#include "sphanti/lunatypes.hpp"

#include <algorithm>
#include <stdexcept>

#include "sphanti/anticanon.hpp"
#include "sphanti/error.hpp"

namespace sphanti {

ColorType classify_luna(const SphericalDatum& datum, const ColorRecord& color) {
  if (!datum.spherical_roots) throw InsufficientData("Luna types need spherical roots; datum has none");
  if (color.moved_by.empty()) throw std::invalid_argument("color '" + color.name + "' is moved by no simple root");
  const auto& sigma = *datum.spherical_roots;
  const auto contains = [&](const Weight& w) { return std::find(sigma.begin(), sigma.end(), w) != sigma.end(); };
  std::optional<ColorType> verdict;
  std::size_t first_root = 0;
  for (auto a : color.moved_by) {
    const Weight root = datum.rs.simple_root(a);
    ColorType t = ColorType::b;
    if (contains(root))
      t = ColorType::a;
    else if (contains(Rational(2) * root))
      t = ColorType::two_a;
    if (!verdict) {
      verdict = t;
      first_root = a;
    } else if (*verdict != t) {
      throw DatumInconsistency("color '" + color.name + "' is of type " + std::string(to_string(*verdict)) +
                               " via " + datum.rs.root_name(first_root) + " but of type " +
                               std::string(to_string(t)) + " via " + datum.rs.root_name(a));
    }
  }
  return *verdict;
}

int expected_chi_pairing(ColorType t, bool member) {
  if (!member) return 0;
  return t == ColorType::two_a ? 2 : 1;
}

std::optional<ColorType> resolved_type(const SphericalDatum& datum, const ColorRecord& color) {
  std::optional<ColorType> luna;
  if (datum.spherical_roots) luna = classify_luna(datum, color);
  if (color.declared_type && luna && *color.declared_type != *luna)
    throw DatumInconsistency("color '" + color.name + "' is declared of type " +
                             std::string(to_string(*color.declared_type)) + " but spherical roots give " +
                             std::string(to_string(*luna)));
  return color.declared_type ? color.declared_type : luna;
}

namespace {

// nullopt with a reason when the type cannot be used for audits
std::optional<ColorType> try_type(const SphericalDatum& datum, const ColorRecord& color, std::string& why) {
  try {
    auto t = resolved_type(datum, color);
    if (!t) why = "unresolved";
    return t;
  } catch (const DatumInconsistency& e) {
    why = "conflict";
    return std::nullopt;
  }
}

}  // namespace

Report chi_pairing_findings(const SphericalDatum& datum) {
  const auto& rs = datum.rs;
  Report report;
  for (const auto& c : datum.colors) {
    if (!c.chi) continue;
    std::string why;
    const auto t = try_type(datum, c, why);
    if (!t) {
      report.push_back({"type_resolved", "color " + c.name, "a|2a|b", why, false});
      continue;
    }
    for (std::size_t a = 0; a < rs.rank(); ++a) {
      if (datum.sp.contains(a)) continue;
      const int want = expected_chi_pairing(*t, c.moved_by.contains(a));
      const Rational got = rs.pair_coroot(a, *c.chi);
      report.push_back({"chi_pairing", "color " + c.name + " / " + rs.root_name(a), std::to_string(want),
                        to_string(got), got == want});
    }
  }
  return report;
}

Report audit_pairings(const SphericalDatum& datum) {
  const auto& rs = datum.rs;
  Report report = chi_pairing_findings(datum);
  const Weight k = kappa(rs, datum.sp);
  for (const auto& c : datum.colors) {
    std::string why;
    const auto t = try_type(datum, c, why);
    if (!t) {
      if (!c.chi) report.push_back({"type_resolved", "color " + c.name, "a|2a|b", why, false});
      continue;
    }
    if (*t == ColorType::b) continue;
    for (auto a : c.moved_by) {
      const Rational got = rs.pair_coroot(a, k);
      report.push_back({"kappa_pairing", "color " + c.name + " / " + rs.root_name(a), "2", to_string(got), got == 2});
    }
  }
  if (datum.lattice_m) {
    for (auto a : datum.sp) {
      for (std::size_t j = 0; j < datum.lattice_m->size(); ++j) {
        const Rational got = rs.pair_coroot(a, (*datum.lattice_m)[j]);
        report.push_back({"sp_orthogonal_M", rs.root_name(a) + " / M[" + std::to_string(j) + "]", "0",
                          to_string(got), sgn(got) == 0});
      }
    }
  }
  return report;
}

}  // namespace sphanti
