#include "sphanti/anticanon.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "sphanti/error.hpp"
#include "sphanti/lunatypes.hpp"

namespace sphanti {

std::vector<std::int64_t> AnticanonicalDivisor::coefficients() const {
  std::vector<std::int64_t> out;
  for (const auto& [name, m] : color_coeffs) out.push_back(m);
  return out;
}

std::string AnticanonicalDivisor::to_string() const {
  std::string out;
  for (const auto& [name, m] : color_coeffs) {
    if (!out.empty()) out += " + ";
    out += (m == 1 ? "" : std::to_string(m) + "*") + name;
  }
  for (int j = 1; j <= boundary_count; ++j) {
    if (!out.empty()) out += " + ";
    out += (boundary_coeff == 1 ? "" : std::to_string(boundary_coeff) + "*") + "X" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

Weight kappa(const RootSystem& rs, const RootSet& sp) {
  const auto full = rs.two_rho(rs.all_simple());
  const auto levi = rs.two_rho(sp);
  Weight w = rs.zero_weight();
  for (std::size_t i = 0; i < rs.rank(); ++i) w.fund[i] = Rational(static_cast<long>(full[i] - levi[i]));
  return w;
}

std::int64_t color_coefficient(const SphericalDatum& datum, const ColorRecord& color) {
  const auto t = resolved_type(datum, color);
  if (!t) throw InsufficientData("type of color '" + color.name + "' is unresolved (no declared type, no spherical roots)");
  if (*t != ColorType::b) return 1;
  const Weight k = kappa(datum.rs, datum.sp);
  std::optional<Rational> value;
  for (auto a : color.moved_by) {
    const Rational p = datum.rs.pair_coroot(a, k);
    if (value && *value != p)
      throw DatumInconsistency("type-b color '" + color.name + "' has unequal pairings <alpha^vee, kappa_P> = " +
                               sphanti::to_string(*value) + " and " + sphanti::to_string(p) + " over its moving roots");
    value = p;
  }
  if (!is_integer(*value) || sgn(*value) <= 0)
    throw DatumInconsistency("color '" + color.name + "' gets nonpositive coefficient " + sphanti::to_string(*value));
  return to_int64(*value);
}

AnticanonicalDivisor anticanonical_divisor(const SphericalDatum& datum) {
  AnticanonicalDivisor div;
  for (const auto& c : datum.colors) div.color_coeffs.emplace_back(c.name, color_coefficient(datum, c));
  div.boundary_count = datum.boundary_count;
  return div;
}

bool verify_decomposition(const SphericalDatum& datum) {
  Vector sum(datum.rs.rank());
  for (const auto& c : datum.colors) {
    if (!c.chi) throw InsufficientData("color '" + c.name + "' has no chi");
    const auto m = color_coefficient(datum, c);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += Rational(static_cast<long>(m)) * c.chi->fund[i];
  }
  return sum == kappa(datum.rs, datum.sp).fund;
}

std::vector<std::vector<std::int64_t>> enumerate_positive_solutions(const Weight& kappa_weight,
                                                                    const std::vector<Weight>& chis,
                                                                    std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  if (chis.size() > kMaxEnumerationColors || bound > kMaxEnumerationBound)
    throw std::invalid_argument("enumeration too large: at most " + std::to_string(kMaxEnumerationColors) +
                                " colors and bound " + std::to_string(kMaxEnumerationBound));
  const std::size_t k = chis.size();
  const std::size_t dim = kappa_weight.fund.size();
  for (const auto& c : chis)
    if (c.fund.size() != dim) throw std::invalid_argument("chi and kappa have different ranks");

  // reach_lo/hi[j][c]: range of sum_{i >= j} m_i chi_i[c] over m_i in [1, bound]
  const Rational b(static_cast<long>(bound));
  std::vector<Vector> reach_lo(k + 1, Vector(dim)), reach_hi(k + 1, Vector(dim));
  for (std::size_t j = k; j-- > 0;)
    for (std::size_t c = 0; c < dim; ++c) {
      const Rational lo = std::min<Rational>(chis[j].fund[c], b * chis[j].fund[c]);
      const Rational hi = std::max<Rational>(chis[j].fund[c], b * chis[j].fund[c]);
      reach_lo[j][c] = reach_lo[j + 1][c] + lo;
      reach_hi[j][c] = reach_hi[j + 1][c] + hi;
    }

  std::vector<std::vector<std::int64_t>> found;
  std::vector<std::int64_t> m(k, 0);
  Vector partial(dim);
  const std::function<void(std::size_t)> descend = [&](std::size_t j) {
    for (std::size_t c = 0; c < dim; ++c) {
      const Rational need = kappa_weight.fund[c] - partial[c];
      if (need < reach_lo[j][c] || need > reach_hi[j][c]) return;
    }
    if (j == k) {
      found.push_back(m);
      return;
    }
    for (std::int64_t v = 1; v <= bound; ++v) {
      m[j] = v;
      for (std::size_t c = 0; c < dim; ++c) partial[c] += chis[j].fund[c];
      descend(j + 1);
    }
    for (std::size_t c = 0; c < dim; ++c) partial[c] -= b * chis[j].fund[c];
  };
  descend(0);
  return found;
}

ValuationCone valuation_cone(const SphericalDatum& datum) {
  if (!datum.spherical_roots) throw InsufficientData("valuation cone needs spherical roots; datum has none");
  return ValuationCone{*datum.spherical_roots};
}

bool cone_contains(const ValuationCone& cone, const Coweight& v) {
  return std::all_of(cone.halfspaces.begin(), cone.halfspaces.end(),
                     [&](const Weight& sigma) { return sgn(pair(v, sigma)) <= 0; });
}

namespace {

struct ConeCoordinates {
  std::vector<Vector> m_basis;   // flattened weights
  Matrix sigma_in_m;             // |Sigma| x rank M
};

ConeCoordinates cone_coordinates(const SphericalDatum& datum) {
  if (!datum.spherical_roots || !datum.lattice_m)
    throw InsufficientData("this computation needs both spherical roots and the lattice M");
  ConeCoordinates cc;
  for (const auto& w : *datum.lattice_m) cc.m_basis.push_back(flatten(w));
  const auto& sigma = *datum.spherical_roots;
  cc.sigma_in_m = Matrix(sigma.size(), cc.m_basis.size());
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    const auto coords = coordinates(std::span<const Vector>(cc.m_basis), flatten(sigma[j]));
    if (!coords) throw DatumInconsistency("spherical root " + std::to_string(j) + " is not in span(M)");
    for (std::size_t i = 0; i < coords->size(); ++i) cc.sigma_in_m(j, i) = (*coords)[i];
  }
  if (rank(cc.sigma_in_m) != sigma.size()) throw DatumInconsistency("spherical roots are linearly dependent");
  return cc;
}

// A coweight whose pairings with the M basis are the given values.
Coweight lift(const SphericalDatum& datum, const ConeCoordinates& cc, const Vector& values) {
  const auto x = solve(Matrix::from_rows(std::span<const Vector>(cc.m_basis)), values);
  if (!x) throw DatumInconsistency("M basis is linearly dependent");
  Coweight cw = datum.rs.zero_coweight();
  for (std::size_t i = 0; i < cw.fund.size(); ++i) cw.fund[i] = (*x)[i];
  for (std::size_t i = 0; i < cw.central.size(); ++i) cw.central[i] = (*x)[cw.fund.size() + i];
  return cw;
}

// Generators of {v in Q^r : S v <= 0} in the coordinates dual to the M basis.
std::vector<Vector> generators_in_n(const ConeCoordinates& cc) {
  const Matrix& s = cc.sigma_in_m;
  const std::size_t r = cc.m_basis.size();
  std::vector<Vector> gens;
  if (s.rows() > 0) {
    // ray_j = S^T (S S^T)^{-1} (-e_j)
    const Matrix st = s.transpose();
    const auto gram_inv = inverse(s * st);
    for (std::size_t j = 0; j < s.rows(); ++j) {
      Vector e(s.rows());
      e[j] = -1;
      gens.push_back(st * (*gram_inv * e));
    }
  }
  const Matrix constraints = s.rows() > 0 ? s : Matrix(0, r);
  std::vector<Vector> lineality = s.rows() > 0 ? nullspace(constraints) : nullspace(Matrix(1, r));
  for (auto& n : lineality) {
    gens.push_back(n);
    for (auto& x : n) x = -x;
    gens.push_back(n);
  }
  return gens;
}

}  // namespace

std::vector<Coweight> cone_generators(const SphericalDatum& datum) {
  const auto cc = cone_coordinates(datum);
  std::vector<Coweight> out;
  for (const auto& g : generators_in_n(cc)) out.push_back(lift(datum, cc, g));
  return out;
}

Rational generator_order_shift(const SphericalDatum& datum, const Weight& mu, const Coweight& nu) {
  datum.rs.check_weight(mu);
  datum.rs.check_coweight(nu);
  if (datum.lattice_m) {
    std::vector<Vector> basis;
    for (const auto& w : *datum.lattice_m) basis.push_back(flatten(w));
    if (!in_span(std::span<const Vector>(basis), flatten(mu)))
      throw std::invalid_argument("weight is not in the span of M");
  }
  return 1 + pair(nu, mu);
}

UniquenessCertificate uniqueness_certificate(const SphericalDatum& datum) {
  const auto cc = cone_coordinates(datum);
  const auto gens = generators_in_n(cc);
  const std::size_t r = cc.m_basis.size();
  Vector interior(r);
  for (std::size_t j = 0; j < cc.sigma_in_m.rows(); ++j)
    for (std::size_t i = 0; i < r; ++i) interior[i] += gens[j][i];

  UniquenessCertificate cert;
  cert.witness = lift(datum, cc, interior);
  bool strictly_inside = true;
  for (const auto& sigma : *datum.spherical_roots) strictly_inside = strictly_inside && pair(cert.witness, sigma) == -1;
  // generators spanning N_Q leave only mu = 0 orthogonal to the cone
  const bool spanning = r == 0 || rank(std::span<const Vector>(gens)) == r;
  cert.holds = strictly_inside && spanning;
  return cert;
}

}  // namespace sphanti
