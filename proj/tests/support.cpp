#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sphanti/linalg.hpp"

namespace sphanti::testing {

namespace {

Vector unit(std::size_t dim, std::size_t i, int sign = 1) {
  Vector v(dim);
  v[i] = sign;
  return v;
}

Vector add(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector scale(const Rational& s, const Vector& a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

void add_pm_pairs(std::vector<Vector>& roots, std::size_t dim, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) roots.push_back(add(unit(dim, i, si), unit(dim, j, sj)));
}

}  // namespace

EuclideanRoots euclidean_roots(Family f, int n) {
  EuclideanRoots er;
  const auto dim = static_cast<std::size_t>(n);
  switch (f) {
    case Family::A: {
      const std::size_t d = dim + 1;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          if (i != j) er.roots.push_back(add(unit(d, i), unit(d, j, -1)));
      for (std::size_t i = 0; i < dim; ++i) er.simple.push_back(add(unit(d, i), unit(d, i + 1, -1)));
      break;
    }
    case Family::B:
    case Family::C:
    case Family::D: {
      add_pm_pairs(er.roots, dim, dim);
      if (f != Family::D)
        for (std::size_t i = 0; i < dim; ++i)
          for (int s : {1, -1}) er.roots.push_back(scale(f == Family::B ? 1 : 2, unit(dim, i, s)));
      for (std::size_t i = 0; i + 1 < dim; ++i) er.simple.push_back(add(unit(dim, i), unit(dim, i + 1, -1)));
      if (f == Family::B) er.simple.push_back(unit(dim, dim - 1));
      if (f == Family::C) er.simple.push_back(scale(2, unit(dim, dim - 1)));
      if (f == Family::D) er.simple.push_back(add(unit(dim, dim - 2), unit(dim, dim - 1)));
      break;
    }
    case Family::F: {
      add_pm_pairs(er.roots, 4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (int s : {1, -1}) er.roots.push_back(unit(4, i, s));
      for (int mask = 0; mask < 16; ++mask) {
        Vector v(4);
        for (int i = 0; i < 4; ++i) v[i] = Rational((mask >> i) & 1 ? -1 : 1, 2);
        er.roots.push_back(v);
      }
      const Rational h(1, 2);
      er.simple = {add(unit(4, 1), unit(4, 2, -1)), add(unit(4, 2), unit(4, 3, -1)), unit(4, 3),
                   Vector{h, -h, -h, -h}};
      break;
    }
    case Family::G: {
      // Plane x + y + z = 0 in Q^3.
      const std::vector<Vector> positive = {{1, -1, 0}, {-2, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {1, -2, 1}, {-1, -1, 2}};
      for (const auto& r : positive) {
        er.roots.push_back(r);
        er.roots.push_back(scale(-1, r));
      }
      er.simple = {positive[0], positive[1]};
      break;
    }
    case Family::E:
      throw std::invalid_argument("no Euclidean realization for E in the test oracle");
  }
  return er;
}

std::vector<std::vector<int>> euclidean_cartan(const EuclideanRoots& er) {
  const std::size_t n = er.simple.size();
  std::vector<std::vector<int>> c(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational q = 2 * dot(er.simple[i], er.simple[j]) / dot(er.simple[i], er.simple[i]);
      c[i][j] = static_cast<int>(q.get_num().get_si());
    }
  return c;
}

std::vector<std::vector<std::int64_t>> euclidean_positive_coeffs(const EuclideanRoots& er) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& r : er.roots) {
    const auto coeffs = coordinates(er.simple, r);
    if (!coeffs) throw std::logic_error("root outside the span of the base");
    if (std::any_of(coeffs->begin(), coeffs->end(), [](const Rational& q) { return q < 0; })) continue;
    std::vector<std::int64_t> c;
    for (const auto& q : *coeffs) c.push_back(q.get_num().get_si());
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace sphanti::testing
