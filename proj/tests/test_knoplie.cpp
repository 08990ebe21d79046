#include <algorithm>

#include "doctest.h"
#include "sphanti/catalog.hpp"
#include "sphanti/error.hpp"
#include "sphanti/knoplie.hpp"
#include "support.hpp"

using namespace sphanti;

namespace {

Matrix small(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Vector> vs;
  for (const auto& r : rows) {
    Vector v;
    for (int x : r) v.push_back(x);
    vs.push_back(v);
  }
  return Matrix::from_rows(vs);
}

Matrix combination(const std::vector<Matrix>& basis, testing::Gen& gen) {
  Matrix out = 0 * basis.front();
  for (const auto& b : basis) out = out + gen.rational(3, 2) * b;
  return out;
}

// Random invertible block-diagonal matrix respecting the layout, identity on
// the central block.
Matrix block_conjugator(const LiePresentation& p, testing::Gen& gen) {
  const std::size_t n = p.matrix_size();
  for (;;) {
    Matrix g = Matrix::identity(n);
    std::size_t offset = 0;
    for (int size : p.blocks) {
      for (int r = 0; r < size; ++r)
        for (int c = 0; c < size; ++c) g(offset + r, offset + c) = gen.uniform(-2, 2);
      offset += static_cast<std::size_t>(size);
    }
    if (determinant(g) != 0) return g;
  }
}

LiePresentation conjugate(const LiePresentation& p, const Matrix& g) {
  const Matrix gi = *inverse(g);
  const auto ad = [&](const Matrix& x) { return g * x * gi; };
  LiePresentation out = p;
  for (auto& x : out.b_basis) x = ad(x);
  for (auto& x : out.h_basis) x = ad(x);
  for (auto& [alpha, t] : out.triples) t = {ad(t.e), ad(t.h), ad(t.f)};
  return out;
}

std::vector<const char*> presented_keys() { return {"sl2_mod_T", "sl2_mod_N", "sl2_mod_U", "brion_5_1", "brion_5_2", "toric"}; }

}  // namespace

TEST_SUITE("knoplie") {

TEST_CASE("sl2 basis relations") {
  CHECK(bracket(sl2_H(), sl2_E()) == 2 * sl2_E());
  CHECK(bracket(sl2_H(), sl2_F()) == -2 * sl2_F());
  CHECK(bracket(sl2_E(), sl2_F()) == sl2_H());
}

TEST_CASE("image classes") {
  CHECK_THROWS_AS(classify_image({}), DatumInconsistency);
  const std::vector<Matrix> zero = {0 * sl2_E()};
  CHECK_THROWS_AS(classify_image(zero), DatumInconsistency);
  const std::vector<Matrix> h = {sl2_H()}, e = {sl2_E()}, split = {sl2_E() + sl2_F()}, eh = {sl2_E(), sl2_H()},
                            all = {sl2_E(), sl2_H(), sl2_F(), sl2_E() + sl2_H()};
  CHECK(classify_image(h).cls == ImageClass::torus_like);
  CHECK(classify_image(split).cls == ImageClass::torus_like);
  CHECK(classify_image(e).cls == ImageClass::contains_nilpotent);
  CHECK(classify_image(eh).cls == ImageClass::contains_nilpotent);
  CHECK(classify_image(all).cls == ImageClass::full);
  CHECK(classify_image(all).basis.size() == 3);
}

TEST_CASE("torus resolution") {
  const std::vector<Matrix> h = {sl2_H()};
  const auto image = classify_image(h);
  const Matrix flip = small({{0, 1}, {-1, 0}});
  const Matrix diag = small({{2, 0}, {0, 1}});
  CHECK(resolve_torus_like(image, flip, std::nullopt) == ColorType::two_a);
  CHECK(resolve_torus_like(image, diag, 1) == ColorType::a);
  CHECK(resolve_torus_like(image, std::nullopt, 2) == ColorType::two_a);
  CHECK_FALSE(resolve_torus_like(image, diag, std::nullopt).has_value());
  CHECK_THROWS_AS(resolve_torus_like(image, small({{1, 1}, {0, 1}}), std::nullopt), std::invalid_argument);
}

TEST_CASE("open orbit") {
  auto d = builtin("sl2_mod_T").datum;
  CHECK(open_orbit_check(*d.presentation));
  d.presentation->h_basis.clear();
  CHECK_FALSE(open_orbit_check(*d.presentation));
}

TEST_CASE("check_presentation rejects a triple outside b") {
  auto d = builtin("sl2_mod_U").datum;
  CHECK(all_pass(check_presentation(*d.presentation, d.rs)));
  auto& t = d.presentation->triples.at(0);
  std::swap(t.e, t.f);
  t.h = -1 * t.h;
  CHECK_FALSE(all_pass(check_presentation(*d.presentation, d.rs)));
}

TEST_CASE("catalog presentations are consistent") {
  for (const char* key : presented_keys()) {
    CAPTURE(key);
    const auto d = builtin(key).datum;
    REQUIRE(d.presentation.has_value());
    CHECK(all_pass(check_presentation(*d.presentation, d.rs)));
    CHECK(open_orbit_check(*d.presentation));
    for (const auto& f : audit_images(d)) {
      CAPTURE(f.subject);
      CHECK(f.pass);
    }
  }
}

TEST_CASE("property: dphi is a Lie homomorphism killing the kernel") {
  testing::Gen gen(51);
  for (const char* key : presented_keys()) {
    const auto d = builtin(key).datum;
    for (const auto& [alpha, t] : d.presentation->triples) {
      CAPTURE(key);
      CAPTURE(alpha);
      CHECK(dphi_project(*d.presentation, alpha, t.e) == sl2_E());
      CHECK(dphi_project(*d.presentation, alpha, t.h) == sl2_H());
      CHECK(dphi_project(*d.presentation, alpha, t.f) == sl2_F());
      for (const auto& k : projection_kernel(*d.presentation, alpha))
        CHECK(dphi_project(*d.presentation, alpha, k) == 0 * sl2_E());
      const auto p = parabolic_basis(*d.presentation, alpha);
      for (int trial = 0; trial < 10; ++trial) {
        const Matrix x = combination(p, gen), y = combination(p, gen);
        const Matrix lhs = dphi_project(*d.presentation, alpha, bracket(x, y));
        const Matrix rhs = bracket(dphi_project(*d.presentation, alpha, x), dphi_project(*d.presentation, alpha, y));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("dphi rejects elements outside the parabolic") {
  const auto d = builtin("brion_5_2").datum;
  const auto& t = d.presentation->triples.at(0);
  CHECK_THROWS_AS(dphi_project(*d.presentation, 1, t.f), std::invalid_argument);
}

TEST_CASE("kernel is an ideal of the parabolic inside b") {
  const auto d = builtin("brion_5_1", 3).datum;
  const auto& pres = *d.presentation;
  for (const auto& [alpha, t] : pres.triples) {
    const auto kernel = projection_kernel(pres, alpha);
    const auto p = parabolic_basis(pres, alpha);
    CHECK(kernel.size() + 3 == p.size());
    const auto kflat = flatten_all(kernel), bflat = flatten_all(pres.b_basis);
    for (const auto& k : kernel) {
      CHECK(in_span(bflat, k.flat()));
      for (const auto& x : p) CHECK(in_span(kflat, bracket(x, k).flat()));
    }
  }
}

TEST_CASE("types from the Lie algebra") {
  const auto t = builtin("sl2_mod_T").datum;
  CHECK(classify_knop(t, t.colors[0]) == ColorType::a);
  const auto verdict = classify_knop(t, t.colors[0], 0);
  CHECK(verdict.image.cls == ImageClass::torus_like);

  const auto n = builtin("sl2_mod_N").datum;
  const auto vn = classify_knop(n, n.colors[0], 0);
  CHECK(vn.type == ColorType::two_a);
  CHECK(vn.resolved_by == "witness");

  const auto u = builtin("sl2_mod_U").datum;
  const auto vu = classify_knop(u, u.colors[0], 0);
  CHECK(vu.image.cls == ImageClass::contains_nilpotent);
  CHECK(vu.type == ColorType::b);
  CHECK(vu.resolved_by == "image");
}

TEST_CASE("torus image falls back to chi, then Sigma") {
  auto n = builtin("sl2_mod_N").datum;
  n.presentation->witnesses.clear();
  CHECK(classify_knop(n, n.colors[0], 0).resolved_by == "chi");
  CHECK(classify_knop(n, n.colors[0]) == ColorType::two_a);
  n.colors[0].chi.reset();
  CHECK(classify_knop(n, n.colors[0], 0).resolved_by == "sigma");
  n.spherical_roots.reset();
  CHECK(classify_knop(n, n.colors[0], 0).resolved_by == "unresolved");
  CHECK_THROWS_AS(classify_knop(n, n.colors[0]), InsufficientData);
}

TEST_CASE("property: types survive conjugation of the presentation") {
  testing::Gen gen(52);
  for (const char* key : {"sl2_mod_T", "sl2_mod_N", "sl2_mod_U", "brion_5_2", "brion_5_1"}) {
    const auto base = builtin(key).datum;
    std::vector<ColorType> expected;
    for (const auto& c : base.colors) expected.push_back(classify_knop(base, c));
    for (int trial = 0; trial < 4; ++trial) {
      auto d = base;
      d.presentation = conjugate(*base.presentation, block_conjugator(*base.presentation, gen));
      REQUIRE(open_orbit_check(*d.presentation));
      for (std::size_t i = 0; i < d.colors.size(); ++i) {
        CAPTURE(key);
        CAPTURE(d.colors[i].name);
        CHECK(classify_knop(d, d.colors[i]) == expected[i]);
      }
    }
  }
}

}
