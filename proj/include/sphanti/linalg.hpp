#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sphanti/rational.hpp"

namespace sphanti {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// Rows must share one length; an empty list gives a 0x0 matrix.
  static Matrix from_rows(std::span<const Vector> rows);
  static Matrix from_columns(std::span<const Vector> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  /// Row-major flattening; used to treat matrices as vectors of a Lie algebra.
  const Vector& flat() const { return data_; }
  static Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

  Matrix transpose() const;
  Rational trace() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& v);

/// Commutator ab - ba.
Matrix bracket(const Matrix& a, const Matrix& b);

/// Determinant by fraction-free elimination over Q.
Rational determinant(Matrix a);
std::optional<Matrix> inverse(const Matrix& a);

Rational dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& a);
std::size_t rank(Matrix a);
std::size_t rank(std::span<const Vector> vectors);

/// Basis of {x : a x = 0}.
std::vector<Vector> nullspace(const Matrix& a);

/// Some x with a x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Linearly independent subset spanning the same space (greedy, order kept).
std::vector<Vector> independent_subset(std::span<const Vector> vectors);

/// Coordinates of v in the given (independent) vectors, or nullopt.
std::optional<Vector> coordinates(std::span<const Vector> basis, const Vector& v);

bool in_span(std::span<const Vector> vectors, const Vector& v);

/// Basis of span(a) ∩ span(b). Both inputs may be dependent.
std::vector<Vector> intersect_spans(std::span<const Vector> a, std::span<const Vector> b);

}  // namespace sphanti
