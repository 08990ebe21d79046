#include "sphanti/catalog.hpp"

#include <stdexcept>

#include "sphanti/anticanon.hpp"
#include "sphanti/error.hpp"
#include "sphanti/knoplie.hpp"

namespace sphanti {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::published: return "published";
    case Provenance::trivial: return "trivial";
    case Provenance::derived: return "derived";
  }
  return "?";
}

namespace {

RootSystem system(std::string_view spec) { return RootSystem(parse_root_system_spec(spec)); }

SphericalDatum empty_datum(RootSystem rs) {
  return SphericalDatum{std::move(rs), {}, {}, std::nullopt, std::nullopt, 0, std::nullopt};
}

// sum of fundamental weights, 0-based indices, with multiplicity
Weight fund(const RootSystem& rs, std::initializer_list<std::pair<std::size_t, int>> terms) {
  Weight w = rs.zero_weight();
  for (auto [i, c] : terms) w.fund.at(i) += c;
  return w;
}

Matrix unit(std::size_t n, std::size_t r, std::size_t c) {
  Matrix m(n, n);
  m(r, c) = 1;
  return m;
}

Matrix diag_step(std::size_t n, std::size_t i) {
  Matrix m(n, n);
  m(i, i) = 1;
  m(i + 1, i + 1) = -1;
  return m;
}

// Borel of an sl block at the given offset: lower or upper triangular.
void add_borel_block(LiePresentation& pres, std::size_t offset, std::size_t size, bool lower) {
  const std::size_t n = pres.matrix_size();
  for (std::size_t i = 0; i + 1 < size; ++i) pres.b_basis.push_back(diag_step(n, offset + i));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      pres.b_basis.push_back(lower ? unit(n, offset + j, offset + i) : unit(n, offset + i, offset + j));
}

// Simple-root triples of one sl block; with the lower Borel the positive
// root vector of alpha_i is E_{i+1,i}.
void add_triples(LiePresentation& pres, std::size_t first_root, std::size_t offset, std::size_t size, bool lower) {
  const std::size_t n = pres.matrix_size();
  for (std::size_t i = 0; i + 1 < size; ++i) {
    const std::size_t r = offset + i;
    Matrix up = unit(n, r, r + 1);
    Matrix down = unit(n, r + 1, r);
    Sl2Triple t = lower ? Sl2Triple{down, bracket(down, up), up} : Sl2Triple{up, bracket(up, down), down};
    pres.triples.emplace(first_root + i, std::move(t));
  }
}

// (x, g_1 x g_1^{-1}, ...) for x in a basis of sl(size); conjugators are
// size x size matrices, one per block.
std::vector<Matrix> twisted_diagonal(std::size_t n, std::size_t size, const std::vector<Matrix>& conjugators) {
  LiePresentation single{{static_cast<int>(size)}, 0, {}, {}, {}, {}};
  std::vector<Matrix> out;
  for (const auto& x : single.algebra_basis()) {
    Matrix m(n, n);
    for (std::size_t blk = 0; blk < conjugators.size(); ++blk) {
      const auto& g = conjugators[blk];
      const Matrix y = g * x * *inverse(g);
      for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) m(blk * size + r, blk * size + c) = y(r, c);
    }
    out.push_back(std::move(m));
  }
  return out;
}

Matrix small(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> vs;
  for (const auto& r : rows) {
    Vector v;
    for (long x : r) v.emplace_back(x);
    vs.push_back(std::move(v));
  }
  return Matrix::from_rows(std::span<const Vector>(vs));
}

LiePresentation sl2_presentation(const Matrix& h_generator) {
  LiePresentation pres{{2}, 0, {}, {}, {}, {}};
  add_borel_block(pres, 0, 2, true);
  add_triples(pres, 0, 0, 2, true);
  pres.h_basis = {h_generator};
  return pres;
}

void require_generic(const CatalogEntry& entry) {
  if (entry.datum.presentation && !open_orbit_check(*entry.datum.presentation))
    throw std::logic_error("catalog entry " + entry.key + ": base point not in the open B-orbit");
}

CatalogEntry toric(int r) {
  CatalogEntry e{"toric", r, empty_datum(system("T" + std::to_string(r))), {}};
  auto& d = e.datum;
  d.boundary_count = r;
  d.lattice_m = std::vector<Weight>{};
  for (int j = 0; j < r; ++j) {
    Weight w = d.rs.zero_weight();
    w.central[static_cast<std::size_t>(j)] = 1;
    d.lattice_m->push_back(w);
  }
  d.spherical_roots = std::vector<Weight>{};
  LiePresentation pres{{}, r, {}, {}, {}, {}};
  pres.b_basis = pres.algebra_basis();
  d.presentation = pres;
  e.expected = {{}, Provenance::trivial, {}, Provenance::trivial, {}, Provenance::trivial,
                "torus acting on itself; every boundary divisor has coefficient 1"};
  return e;
}

CatalogEntry sl2_quotient(std::string_view key) {
  CatalogEntry e{std::string(key), std::nullopt, empty_datum(system("A1")), {}};
  auto& d = e.datum;
  const Matrix swap = small({{0, 1}, {1, 0}});
  if (key == "sl2_mod_T") {
    for (const char* name : {"D1", "D2"}) d.colors.push_back({name, {0}, ColorType::a, fund(d.rs, {{0, 1}}), std::nullopt});
    d.spherical_roots = std::vector<Weight>{d.rs.simple_root(0)};
    d.lattice_m = std::vector<Weight>{d.rs.simple_root(0)};
    d.presentation = sl2_presentation(swap);
    e.expected = {{ColorType::a, ColorType::a}, Provenance::published, {1, 1}, Provenance::derived, {2},
                  Provenance::trivial, "chi = omega for both colors (pairing 1 for type a); Sigma = {alpha}"};
  } else if (key == "sl2_mod_N") {
    d.colors.push_back({"D1", {0}, ColorType::two_a, fund(d.rs, {{0, 2}}), std::nullopt});
    d.spherical_roots = std::vector<Weight>{Rational(2) * d.rs.simple_root(0)};
    d.lattice_m = std::vector<Weight>{Rational(2) * d.rs.simple_root(0)};
    d.presentation = sl2_presentation(swap);
    d.presentation->witnesses.push_back({"D1", 0, small({{0, 1}, {-1, 0}})});
    e.expected = {{ColorType::two_a}, Provenance::published, {1}, Provenance::derived, {2}, Provenance::trivial,
                  "chi = 2 omega (pairing 2 for type 2a); Sigma = {2 alpha}; Weyl element as torus witness"};
  } else {
    d.colors.push_back({"D1", {0}, ColorType::b, fund(d.rs, {{0, 1}}), std::nullopt});
    d.spherical_roots = std::vector<Weight>{};
    d.lattice_m = std::vector<Weight>{fund(d.rs, {{0, 1}})};
    d.presentation = sl2_presentation(small({{0, 1}, {0, 0}}));
    e.expected = {{ColorType::b}, Provenance::published, {2}, Provenance::derived, {2}, Provenance::trivial,
                  "horospherical: Sigma empty, M = Z omega, chi = omega"};
  }
  return e;
}

// SL(n) x SL(n) / diagonal SL(n) with B = lower x upper, so the identity
// coset already lies in the open B-orbit.
CatalogEntry brion_5_1(int n) {
  const auto size = static_cast<std::size_t>(n);
  const std::string a = "A" + std::to_string(n - 1);
  CatalogEntry e{"brion_5_1", n, empty_datum(system(a + "x" + a)), {}};
  auto& d = e.datum;
  const std::size_t r = size - 1;
  for (std::size_t i = 0; i < r; ++i)
    d.colors.push_back({"D" + std::to_string(i + 1), {i, r + i}, ColorType::b, fund(d.rs, {{i, 1}, {r + i, 1}}),
                        std::nullopt});
  LiePresentation pres{{n, n}, 0, {}, {}, {}, {}};
  add_borel_block(pres, 0, size, true);
  add_borel_block(pres, size, size, false);
  add_triples(pres, 0, 0, size, true);
  add_triples(pres, r, size, size, false);
  pres.h_basis = twisted_diagonal(2 * size, size, {Matrix::identity(size), Matrix::identity(size)});
  d.presentation = std::move(pres);
  e.expected.types.assign(r, ColorType::b);
  e.expected.coefficients.assign(r, 2);
  e.expected.kappa_fund.assign(2 * r, 2);
  e.expected.note = "chi_i = omega_i + omega'_i: weight of the i-th leading principal minor";
  return e;
}

// SL(2)^3 / diagonal SL(2), base point (1, g2, g3) with pairwise independent
// first rows (1,0), (1,1), (0,1).
CatalogEntry brion_5_2() {
  CatalogEntry e{"brion_5_2", std::nullopt, empty_datum(system("A1xA1xA1")), {}};
  auto& d = e.datum;
  const std::pair<std::size_t, std::size_t> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto [i, j] : pairs)
    d.colors.push_back({"D" + std::to_string(i + 1) + std::to_string(j + 1), {i, j}, ColorType::a,
                        fund(d.rs, {{i, 1}, {j, 1}}), std::nullopt});
  d.spherical_roots = std::vector<Weight>{d.rs.simple_root(0), d.rs.simple_root(1), d.rs.simple_root(2)};
  d.lattice_m = std::vector<Weight>{fund(d.rs, {{0, 1}, {1, 1}}), fund(d.rs, {{0, 1}, {2, 1}}), fund(d.rs, {{1, 1}, {2, 1}})};
  LiePresentation pres{{2, 2, 2}, 0, {}, {}, {}, {}};
  for (std::size_t f = 0; f < 3; ++f) {
    add_borel_block(pres, 2 * f, 2, true);
    add_triples(pres, f, 2 * f, 2, true);
  }
  pres.h_basis = twisted_diagonal(6, 2, {Matrix::identity(2), small({{1, 1}, {0, 1}}), small({{0, 1}, {-1, 0}})});
  d.presentation = std::move(pres);
  e.expected = {{ColorType::a, ColorType::a, ColorType::a}, Provenance::published, {1, 1, 1}, Provenance::published,
                {2, 2, 2}, Provenance::trivial,
                "chi_ij = omega_i + omega_j: weight of det A_ij; M spanned by these weights"};
  return e;
}

CatalogEntry brion_5_3(int n) {
  CatalogEntry e{"brion_5_3", n, empty_datum(system("A" + std::to_string(n - 1))), {}};
  auto& d = e.datum;
  const auto r = static_cast<std::size_t>(n - 1);
  d.spherical_roots = std::vector<Weight>{};
  d.lattice_m = std::vector<Weight>{};
  for (std::size_t i = 0; i < r; ++i) {
    d.colors.push_back({"D" + std::to_string(i + 1), {i}, ColorType::two_a, fund(d.rs, {{i, 2}}), std::nullopt});
    d.spherical_roots->push_back(Rational(2) * d.rs.simple_root(i));
    d.lattice_m->push_back(fund(d.rs, {{i, 2}}));
  }
  e.expected.types.assign(r, ColorType::two_a);
  e.expected.coefficients.assign(r, 1);
  e.expected.kappa_fund.assign(r, 2);
  e.expected.note = "chi_i = 2 omega_i: principal minor of A M A^T doubles the weight; M = 2 * weight lattice";
  return e;
}

CatalogEntry brion_5_4(int n) {
  CatalogEntry e{"brion_5_4", n, empty_datum(system("A" + std::to_string(n - 1))), {}};
  auto& d = e.datum;
  const auto last = static_cast<std::size_t>(n - 2);
  for (std::size_t i = 1; i < last; ++i) d.sp.insert(i);
  d.colors.push_back({"D1", {last}, ColorType::b, fund(d.rs, {{last, 1}}), std::nullopt});
  d.colors.push_back({"D2", {0}, ColorType::b, fund(d.rs, {{0, 1}}), std::nullopt});
  d.lattice_m = std::vector<Weight>{fund(d.rs, {{0, 1}}), fund(d.rs, {{last, 1}})};
  e.expected.types = {ColorType::b, ColorType::b};
  e.expected.coefficients = {n - 1, n - 1};
  e.expected.kappa_fund.assign(last + 1, 0);
  e.expected.kappa_fund.front() = e.expected.kappa_fund.back() = n - 1;
  e.expected.kappa_source = Provenance::derived;
  e.expected.note = "chi = omega_{n-1} for V(X_n), omega_1 for V(Y_1); M = span{omega_1, omega_{n-1}}";
  return e;
}

}  // namespace

const std::vector<CatalogKey>& catalog_keys() {
  static const std::vector<CatalogKey> keys = {
      {"toric", "torus T of rank r acting on itself; r boundary divisors", true, 1, 10, 2},
      {"sl2_mod_T", "SL(2)/T: two colors of type a", false, 0, 0, 0},
      {"sl2_mod_N", "SL(2)/N(T): one color of type 2a", false, 0, 0, 0},
      {"sl2_mod_U", "SL(2)/U: one color of type b", false, 0, 0, 0},
      {"brion_5_1", "SL(n)xSL(n)/SL(n): n-1 colors of type b", true, 2, 10, 3},
      {"brion_5_2", "SL(2)^3/SL(2): three colors of type a", false, 0, 0, 0},
      {"brion_5_3", "SL(n)/SO(n): n-1 colors of type 2a", true, 3, 10, 3},
      {"brion_5_4", "SL(n)/SL(n-1): two colors of type b, Sp nonempty for n > 3", true, 3, 10, 5},
  };
  return keys;
}

CatalogEntry builtin(std::string_view key, std::optional<int> param) {
  const CatalogKey* info = nullptr;
  for (const auto& k : catalog_keys())
    if (k.key == key) info = &k;
  if (!info) throw std::invalid_argument("unknown catalog key '" + std::string(key) + "'");
  if (!info->parametric && param) throw std::invalid_argument("catalog key '" + info->key + "' takes no parameter");
  const int n = param.value_or(info->default_param);
  if (info->parametric && (n < info->min_param || n > info->max_param))
    throw std::invalid_argument("parameter for '" + info->key + "' must lie in [" + std::to_string(info->min_param) +
                                ", " + std::to_string(info->max_param) + "]");
  CatalogEntry e = [&] {
    if (key == "toric") return toric(n);
    if (key == "brion_5_1") return brion_5_1(n);
    if (key == "brion_5_2") return brion_5_2();
    if (key == "brion_5_3") return brion_5_3(n);
    if (key == "brion_5_4") return brion_5_4(n);
    return sl2_quotient(key);
  }();
  check_structure(e.datum);
  require_generic(e);
  return e;
}

}  // namespace sphanti
