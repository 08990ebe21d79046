#include "sphanti/lie.hpp"

namespace sphanti {

std::size_t LiePresentation::matrix_size() const {
  std::size_t n = static_cast<std::size_t>(central_dim);
  for (int b : blocks) n += static_cast<std::size_t>(b);
  return n;
}

std::size_t LiePresentation::dimension() const {
  std::size_t d = static_cast<std::size_t>(central_dim);
  for (int b : blocks) d += static_cast<std::size_t>(b * b - 1);
  return d;
}

std::vector<Matrix> LiePresentation::algebra_basis() const {
  const std::size_t n = matrix_size();
  std::vector<Matrix> basis;
  std::size_t offset = 0;
  for (int b : blocks) {
    const auto size = static_cast<std::size_t>(b);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        if (i == j) continue;
        Matrix m(n, n);
        m(offset + i, offset + j) = 1;
        basis.push_back(std::move(m));
      }
    for (std::size_t i = 0; i + 1 < size; ++i) {
      Matrix m(n, n);
      m(offset + i, offset + i) = 1;
      m(offset + i + 1, offset + i + 1) = -1;
      basis.push_back(std::move(m));
    }
    offset += size;
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(central_dim); ++i) {
    Matrix m(n, n);
    m(offset + i, offset + i) = 1;
    basis.push_back(std::move(m));
  }
  return basis;
}

bool LiePresentation::in_algebra(const Matrix& m) const {
  const std::size_t n = matrix_size();
  if (m.rows() != n || m.cols() != n) return false;
  std::vector<std::size_t> block_of(n);
  std::size_t offset = 0;
  std::size_t index = 0;
  for (int b : blocks) {
    for (int i = 0; i < b; ++i) block_of[offset + static_cast<std::size_t>(i)] = index;
    offset += static_cast<std::size_t>(b);
    ++index;
  }
  const std::size_t first_central = offset;
  for (std::size_t i = first_central; i < n; ++i) block_of[i] = index++;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (sgn(m(r, c)) != 0 && block_of[r] != block_of[c]) return false;
  offset = 0;
  for (int b : blocks) {
    Rational tr = 0;
    for (int i = 0; i < b; ++i) tr += m(offset + static_cast<std::size_t>(i), offset + static_cast<std::size_t>(i));
    if (sgn(tr) != 0) return false;
    offset += static_cast<std::size_t>(b);
  }
  return true;
}

std::vector<Vector> flatten_all(const std::vector<Matrix>& ms) {
  std::vector<Vector> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(m.flat());
  return out;
}

}  // namespace sphanti
