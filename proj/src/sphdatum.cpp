#include "sphanti/sphdatum.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sphanti/error.hpp"
#include "sphanti/lunatypes.hpp"

namespace sphanti {

std::string_view to_string(ColorType t) {
  switch (t) {
    case ColorType::a: return "a";
    case ColorType::two_a: return "2a";
    case ColorType::b: return "b";
  }
  return "?";
}

std::optional<ColorType> parse_color_type(std::string_view text) {
  if (text == "a") return ColorType::a;
  if (text == "2a") return ColorType::two_a;
  if (text == "b") return ColorType::b;
  return std::nullopt;
}

std::size_t SphericalDatum::color_index(std::string_view name) const {
  for (std::size_t i = 0; i < colors.size(); ++i)
    if (colors[i].name == name) return i;
  throw std::invalid_argument("unknown color '" + std::string(name) + "'");
}

std::vector<std::size_t> SphericalDatum::delta(std::size_t alpha) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < colors.size(); ++i)
    if (colors[i].moved_by.contains(alpha)) out.push_back(i);
  return out;
}

RootSet compute_sp(const SphericalDatum& datum) {
  RootSet sp = datum.rs.all_simple();
  for (const auto& c : datum.colors)
    for (auto a : c.moved_by) sp.erase(a);
  return sp;
}

namespace {

std::string names(const RootSystem& rs, const RootSet& set) {
  std::string out = "{";
  for (auto i : set) {
    if (out.size() > 1) out += ",";
    out += rs.root_name(i);
  }
  return out + "}";
}

}  // namespace

void check_structure(const SphericalDatum& datum) {
  const auto& rs = datum.rs;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < datum.colors.size(); ++i) {
    const auto& c = datum.colors[i];
    const std::string path = "colors[" + std::to_string(i) + "]";
    if (c.name.empty()) throw ParseError(path + ".name: empty color name");
    if (!seen.insert(c.name).second) throw ParseError(path + ".name: duplicate color name '" + c.name + "'");
    if (c.moved_by.empty()) throw ParseError(path + ".moved_by: a color must be moved by some simple root");
    if (*c.moved_by.rbegin() >= rs.rank()) throw ParseError(path + ".moved_by: simple root index out of range");
    try {
      if (c.chi) rs.check_weight(*c.chi);
      if (c.rho) rs.check_coweight(*c.rho);
    } catch (const std::invalid_argument& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  if (!datum.sp.empty() && *datum.sp.rbegin() >= rs.rank()) throw ParseError("Sp: simple root index out of range");
  if (datum.boundary_count < 0) throw ParseError("boundary_count: must be nonnegative");

  std::size_t rank_m = rs.rank() + rs.central_rank();
  if (datum.lattice_m) {
    for (const auto& w : *datum.lattice_m) rs.check_weight(w);
    std::vector<Vector> flat;
    for (const auto& w : *datum.lattice_m) flat.push_back(flatten(w));
    rank_m = rank(std::span<const Vector>(flat));
    if (rank_m != flat.size()) throw ParseError("M: basis vectors are linearly dependent");
  }
  if (datum.spherical_roots) {
    const auto& sigma = *datum.spherical_roots;
    for (const auto& w : sigma) rs.check_weight(w);
    if (sigma.size() > rank_m)
      throw ParseError("spherical_roots: " + std::to_string(sigma.size()) + " spherical roots exceed rank " +
                       std::to_string(rank_m) + " of M");
    std::vector<Vector> flat;
    for (const auto& w : sigma) flat.push_back(flatten(w));
    if (rank(std::span<const Vector>(flat)) != flat.size())
      throw ParseError("spherical_roots: not linearly independent");
    for (std::size_t a = 0; a < rs.rank(); ++a) {
      const Weight root = rs.simple_root(a);
      const bool has_single = std::find(sigma.begin(), sigma.end(), root) != sigma.end();
      const bool has_double = std::find(sigma.begin(), sigma.end(), Rational(2) * root) != sigma.end();
      if (has_single && has_double)
        throw ParseError("spherical_roots: both " + rs.root_name(a) + " and twice it are present");
    }
  }
}

Report validate_datum(const SphericalDatum& datum) {
  const auto& rs = datum.rs;
  Report report;
  const RootSet sp = compute_sp(datum);
  report.push_back({"sp_consistency", "Sp", names(rs, sp), names(rs, datum.sp), sp == datum.sp});

  for (const auto& c : datum.colors) {
    RootSet overlap;
    std::set_intersection(c.moved_by.begin(), c.moved_by.end(), datum.sp.begin(), datum.sp.end(),
                          std::inserter(overlap, overlap.begin()));
    report.push_back({"moved_by_outside_sp", "color " + c.name, "{}", names(rs, overlap), overlap.empty()});
  }

  for (std::size_t a = 0; a < rs.rank(); ++a) {
    const auto d = datum.delta(a);
    report.push_back({"delta_bound", rs.root_name(a), "<= 2", std::to_string(d.size()), d.size() <= 2});
  }

  // |Delta(alpha)| = 2 exactly for colors of type a.
  for (const auto& c : datum.colors) {
    if (!c.declared_type) continue;
    for (auto a : c.moved_by) {
      const auto n = datum.delta(a).size();
      const std::size_t want = *c.declared_type == ColorType::a ? 2 : 1;
      report.push_back({"delta_shape", "color " + c.name + " / " + rs.root_name(a),
                        "|Delta| = " + std::to_string(want), "|Delta| = " + std::to_string(n), n == want});
    }
  }

  if (datum.spherical_roots && datum.lattice_m) {
    std::vector<Vector> basis;
    for (const auto& w : *datum.lattice_m) basis.push_back(flatten(w));
    for (std::size_t i = 0; i < datum.spherical_roots->size(); ++i) {
      const bool inside = in_span(std::span<const Vector>(basis), flatten((*datum.spherical_roots)[i]));
      report.push_back({"sigma_in_M", "sigma[" + std::to_string(i) + "]", "in span(M)",
                        inside ? "in span(M)" : "outside span(M)", inside});
    }
  }

  if (datum.spherical_roots) {
    for (const auto& c : datum.colors) {
      std::string luna;
      bool consistent = true;
      try {
        luna = std::string(to_string(classify_luna(datum, c)));
      } catch (const DatumInconsistency& e) {
        luna = "conflict";
        consistent = false;
      }
      if (c.declared_type) {
        const std::string declared(to_string(*c.declared_type));
        report.push_back({"luna_agreement", "color " + c.name, declared, luna, consistent && luna == declared});
      } else if (!consistent) {
        report.push_back({"luna_agreement", "color " + c.name, "one type", luna, false});
      }
    }
  }

  for (auto& f : chi_pairing_findings(datum)) report.push_back(std::move(f));

  std::sort(report.begin(), report.end());
  return report;
}

}  // namespace sphanti
