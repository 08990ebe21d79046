#include "doctest.h"
#include "sphanti/error.hpp"
#include "sphanti/linalg.hpp"
#include "support.hpp"

using namespace sphanti;

TEST_SUITE("linalg") {

TEST_CASE("parse_rational accepts canonical forms") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK(to_string(parse_rational("6/3")) == "2");
}

TEST_CASE("parse_rational rejects junk") {
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "--1", "1/-2", " 1"})
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
}

TEST_CASE("to_int64") {
  CHECK(to_int64(Rational(-12)) == -12);
  CHECK_THROWS_AS(to_int64(Rational(1, 2)), std::domain_error);
}

TEST_CASE("rank, nullspace and solve on a fixed matrix") {
  const std::vector<Vector> rows = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  const Matrix a = Matrix::from_rows(rows);
  CHECK(rank(a) == 2);
  const auto ns = nullspace(a);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(a * ns[0]));
  CHECK_FALSE(solve(a, Vector{1, 0, 0}).has_value());
  const auto x = solve(a, Vector{6, 12, 2});
  REQUIRE(x.has_value());
  CHECK(a * *x == Vector{6, 12, 2});
  CHECK(determinant(a) == 0);
  CHECK_FALSE(inverse(a).has_value());
}

TEST_CASE("independent_subset keeps the first spanning vectors") {
  const std::vector<Vector> vs = {{1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 5}};
  const auto ind = independent_subset(vs);
  REQUIRE(ind.size() == 3);
  CHECK(ind[0] == vs[0]);
  CHECK(ind[1] == vs[2]);
  CHECK(ind[2] == vs[4]);
}

TEST_CASE("intersect_spans of two planes in Q^3 is a line") {
  const std::vector<Vector> a = {{1, 0, 0}, {0, 1, 0}};
  const std::vector<Vector> b = {{1, 1, 1}, {1, 1, -1}};
  const auto cap = intersect_spans(a, b);
  REQUIRE(cap.size() == 1);
  CHECK(cap[0][2] == 0);
  CHECK(cap[0][0] == cap[0][1]);
}

TEST_CASE("property: random square matrices") {
  testing::Gen gen(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(gen.uniform(1, 5));
    Matrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r, c) = gen.uniform(-3, 3);
    const auto inv = inverse(a);
    CHECK(inv.has_value() == (determinant(a) != 0));
    CHECK(inv.has_value() == (rank(a) == n));
    if (inv) {
      CHECK(a * *inv == Matrix::identity(n));
      const Vector b = gen.vector(n);
      const auto x = solve(a, b);
      REQUIRE(x.has_value());
      CHECK(a * *x == b);
    }
    CHECK(rank(a) + nullspace(a).size() == n);
    for (const auto& v : nullspace(a)) CHECK(is_zero(a * v));
  }
}

TEST_CASE("property: determinant is multiplicative and bracket is antisymmetric") {
  testing::Gen gen(12);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(gen.uniform(1, 4));
    Matrix a(n, n), b(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) = gen.rational(4, 3);
        b(r, c) = gen.rational(4, 3);
      }
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
    CHECK(bracket(a, b) == -bracket(b, a));
    CHECK(bracket(a, b).trace() == 0);
  }
}

TEST_CASE("property: intersect_spans agrees with membership") {
  testing::Gen gen(13);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = 4;
    std::vector<Vector> a, b;
    for (int i = gen.uniform(0, 3); i > 0; --i) a.push_back(gen.vector(dim, 3, 1));
    for (int i = gen.uniform(0, 3); i > 0; --i) b.push_back(gen.vector(dim, 3, 1));
    if (gen.coin() && !a.empty()) b.push_back(a.front());
    const auto cap = intersect_spans(a, b);
    for (const auto& v : cap) {
      CHECK(in_span(a, v));
      CHECK(in_span(b, v));
    }
    // dim(A ∩ B) = dim A + dim B - dim(A + B)
    std::vector<Vector> both = a;
    both.insert(both.end(), b.begin(), b.end());
    CHECK(cap.size() + rank(both) == rank(a) + rank(b));
  }
}

}
