#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sphanti/rootsys.hpp"

namespace sphanti::testing {

/// Deterministic generators for the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Rational rational(int span = 9, int max_den = 5) {
    Rational q(uniform(-span, span), uniform(1, max_den));
    q.canonicalize();
    return q;
  }

  Vector vector(std::size_t n, int span = 9, int max_den = 5) {
    Vector v(n);
    for (auto& x : v) x = rational(span, max_den);
    return v;
  }

  /// A simple type of legal rank, at most max_rank.
  Factor factor(int max_rank) {
    for (;;) {
      switch (uniform(0, 6)) {
        case 0: return {Family::A, uniform(1, max_rank)};
        case 1: if (max_rank >= 2) return {Family::B, uniform(2, max_rank)}; break;
        case 2: if (max_rank >= 2) return {Family::C, uniform(2, max_rank)}; break;
        case 3: if (max_rank >= 3) return {Family::D, uniform(3, max_rank)}; break;
        case 4: if (max_rank >= 6) return {Family::E, uniform(6, std::min(8, max_rank))}; break;
        case 5: if (max_rank >= 4) return {Family::F, 4}; break;
        case 6: if (max_rank >= 2) return {Family::G, 2}; break;
      }
    }
  }

  RootSystemSpec spec(int max_factors = 3, int max_rank = 8, int max_central = 1) {
    RootSystemSpec s;
    const int k = uniform(1, max_factors);
    for (int i = 0; i < k; ++i) s.factors.push_back(factor(max_rank));
    s.central_rank = uniform(0, max_central);
    return s;
  }

  RootSet subset(std::size_t n) {
    RootSet out;
    for (std::size_t i = 0; i < n; ++i)
      if (coin()) out.insert(i);
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Closed-form number of positive roots of a simple type.
inline int positive_root_count(Family f, int n) {
  switch (f) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return -1;
}

/// Root system realized in Euclidean space: all roots and a base, in
/// Bourbaki numbering.
struct EuclideanRoots {
  std::vector<Vector> roots;
  std::vector<Vector> simple;
};

EuclideanRoots euclidean_roots(Family f, int n);

/// Cartan entries 2(a_i, a_j)/(a_i, a_i) from a Euclidean base.
std::vector<std::vector<int>> euclidean_cartan(const EuclideanRoots& er);

/// Positive roots of a Euclidean realization as simple-root coefficients,
/// sorted.
std::vector<std::vector<std::int64_t>> euclidean_positive_coeffs(const EuclideanRoots& er);

std::string read_file(const std::string& path);

}  // namespace sphanti::testing
