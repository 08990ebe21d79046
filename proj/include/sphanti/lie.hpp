#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sphanti/linalg.hpp"

namespace sphanti {

/// (e, h, f) with [e, f] = h, [h, e] = 2e, [h, f] = -2f; e spans the root
/// space of a simple root inside the Borel subalgebra.
struct Sl2Triple {
  Matrix e;
  Matrix h;
  Matrix f;
};

/// Group element of PGL(2) attached to (color, simple root), written in the
/// standard basis E, H, F of the image of the parabolic. Used to tell a
/// torus from its normalizer.
struct TorusWitness {
  std::string color;
  std::size_t root = 0;
  Matrix matrix;
};

/// Matrix realization of g = sl(n_1) + ... + sl(n_k) + (abelian of dim c).
/// Every element is a block-diagonal square matrix of size n_1 + ... + n_k + c;
/// the abelian block is diagonal.
struct LiePresentation {
  std::vector<int> blocks;
  int central_dim = 0;
  std::vector<Matrix> b_basis;
  std::vector<Matrix> h_basis;
  std::map<std::size_t, Sl2Triple> triples;
  std::vector<TorusWitness> witnesses;

  std::size_t matrix_size() const;
  /// dim g
  std::size_t dimension() const;
  /// Basis of g in the same block layout.
  std::vector<Matrix> algebra_basis() const;
  /// True iff m is block-diagonal, traceless per sl block, diagonal on the
  /// abelian block.
  bool in_algebra(const Matrix& m) const;
};

std::vector<Vector> flatten_all(const std::vector<Matrix>& ms);

}  // namespace sphanti
