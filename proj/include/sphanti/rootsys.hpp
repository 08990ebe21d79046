#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sphanti/linalg.hpp"
#include "sphanti/rational.hpp"

namespace sphanti {

enum class Family { A, B, C, D, E, F, G };

struct Factor {
  Family family;
  int rank;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Product of simple types plus a central torus, e.g. "A2xA2+T1".
struct RootSystemSpec {
  std::vector<Factor> factors;
  int central_rank = 0;

  int semisimple_rank() const;
  std::string to_string() const;
  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

/// Grammar: factors joined by 'x' ("A4", "A1xA1xA1"), optional "+T{k}"
/// suffix; a bare "T{k}" is a torus of rank k.
RootSystemSpec parse_root_system_spec(std::string_view text);

/// Throws std::invalid_argument naming the offending factor.
void check_spec(const RootSystemSpec& spec);

/// Indices into the simple roots S, concatenated over factors.
using RootSet = std::set<std::size_t>;

/// Character of B in fundamental-weight coordinates: fund[i] is the pairing
/// with the i-th simple coroot. The central part lives in the character
/// lattice of the central torus.
struct Weight {
  Vector fund;
  Vector central;

  friend bool operator==(const Weight&, const Weight&) = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(const Rational& s, const Weight& w);

/// Element of the dual space; coordinates dual to the fundamental weights
/// (and to the central basis).
struct Coweight {
  Vector fund;
  Vector central;

  friend bool operator==(const Coweight&, const Coweight&) = default;
};

/// <cw, w> as the dot product of coordinate vectors.
Rational pair(const Coweight& cw, const Weight& w);

/// Concatenated (fund, central) coordinates.
Vector flatten(const Weight& w);
Vector flatten(const Coweight& cw);

struct Root {
  std::vector<std::int64_t> simple_coeffs;
  Weight as_weight;

  std::int64_t height() const;
  friend bool operator==(const Root&, const Root&) = default;
};

class RootSystem {
 public:
  explicit RootSystem(RootSystemSpec spec);

  const RootSystemSpec& spec() const { return spec_; }
  std::size_t rank() const { return cartan_.size(); }
  std::size_t central_rank() const { return static_cast<std::size_t>(spec_.central_rank); }

  /// c_ij = <alpha_i^vee, alpha_j>, Bourbaki numbering per factor.
  int cartan(std::size_t i, std::size_t j) const { return cartan_.at(i).at(j); }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  /// Index of the factor containing simple root i.
  std::size_t factor_of(std::size_t i) const { return factor_of_.at(i); }

  /// "a1", "a2", ... (1-based over the concatenated factors).
  std::string root_name(std::size_t i) const;
  /// Throws std::invalid_argument for unknown names.
  std::size_t root_index(std::string_view name) const;
  RootSet all_simple() const;

  Weight zero_weight() const;
  Coweight zero_coweight() const;
  Weight fundamental_weight(std::size_t i) const;
  Weight simple_root(std::size_t i) const;
  Weight root_weight(const std::vector<std::int64_t>& simple_coeffs) const;

  /// <alpha_i^vee, w>. Throws on dimension mismatch.
  Rational pair_coroot(std::size_t i, const Weight& w) const;

  /// Positive roots of the subsystem generated by I, ordered by height and
  /// then lexicographically by simple coefficients.
  std::vector<Root> positive_roots(const RootSet& subset) const;

  /// 2 rho_I (sum of the positive roots of <I>) in fundamental coordinates.
  std::vector<std::int64_t> two_rho(const RootSet& subset) const;
  Weight rho(const RootSet& subset) const;

  void check_weight(const Weight& w) const;
  void check_coweight(const Coweight& cw) const;
  void check_subset(const RootSet& subset) const;

 private:
  RootSystemSpec spec_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::size_t> factor_of_;
};

RootSystem build_root_system(const RootSystemSpec& spec);

/// Cartan block of a single simple type, c_ij = <alpha_i^vee, alpha_j>.
std::vector<std::vector<int>> cartan_block(Family family, int rank);

char family_letter(Family f);

}  // namespace sphanti
