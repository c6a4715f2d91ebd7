// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "brauer/rings.hpp"

namespace brauer {

using Vector = std::vector<Element>;

/// Dense row-major matrix of canonical ring elements. The ring travels
/// separately; every operation takes it as its first argument.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Element& fill)
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

  static Matrix zeros(const Ring& ring, std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols, ring.zero());
  }
  static Matrix identity(const Ring& ring, std::size_t n);
  static Matrix from_columns(const Ring& ring, std::size_t rows, const std::vector<Vector>& columns);
  /// Column vector as an rows x 1 matrix.
  static Matrix column_matrix(const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);
  const std::vector<Element>& entries() const { return entries_; }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> entries_;
};

Matrix mat_mul(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix mat_add(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix mat_sub(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix scalar_mul(const Ring& ring, const Element& s, const Matrix& m);
Matrix transpose(const Matrix& m);
Matrix kron(const Ring& ring, const Matrix& a, const Matrix& b);
Vector mat_vec(const Ring& ring, const Matrix& m, const Vector& v);

Vector vec_add(const Ring& ring, const Vector& x, const Vector& y);
Vector vec_scale(const Ring& ring, const Element& s, const Vector& x);
bool is_zero_vector(const Ring& ring, const Vector& v);

/// Row-major flattening of a square matrix, and its inverse.
Vector flatten(const Matrix& m);
Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

struct Echelon {
  Matrix form;                      // reduced column echelon form E
  Matrix transform;                 // invertible T with E = M * T
  std::vector<std::size_t> pivots;  // pivot row of column j, ascending
};

/// Reduced column echelon form using unit pivots only.
///
/// Rows are scanned top to bottom; in each row the first remaining column
/// holding a unit (minimal valuation over Z/p^k) becomes the next pivot
/// column, is scaled to 1, and the row is cleared in every other column.
/// Over a field the non-pivot columns end up zero and the form is the
/// canonical representative of the column span. Over Z/p^k rows without a
/// unit entry are skipped and their residue stays in the trailing columns.
Echelon reduced_echelon(const Ring& ring, const Matrix& m);

/// Number of unit pivots; the usual rank over a field.
std::size_t rank(const Ring& ring, const Matrix& m);

bool is_invertible(const Ring& ring, const Matrix& m);

/// Gauss-Jordan inverse; throws NotInvertible when some column has no unit
/// pivot, which over a local ring means the determinant is not a unit.
Matrix invert_matrix(const Ring& ring, const Matrix& m);

Element determinant(const Ring& ring, const Matrix& m);

/// Solves m x = b with free variables set to zero.
std::optional<Vector> solve_linear(const Ring& ring, const Matrix& m, const Vector& b);

/// Basis of the image of an idempotent, read off from the echelon form.
std::vector<Vector> idempotent_image_basis(const Ring& ring, const Matrix& e);

/// Returns lambda when m = lambda * I.
std::optional<Element> scalar_of(const Ring& ring, const Matrix& m);

/// Scales m so that its first unit entry (row-major) equals 1.
Matrix normalize_projective(const Ring& ring, const Matrix& m);

Element random_element(const Ring& ring, std::mt19937_64& rng);
Matrix random_matrix(const Ring& ring, std::size_t rows, std::size_t cols, std::mt19937_64& rng);
Matrix random_invertible(const Ring& ring, std::size_t n, std::mt19937_64& rng);

}  // namespace brauer
