// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include "brauer/linalg.hpp"

#include <string>
#include <utility>

#include "brauer/error.hpp"

namespace brauer {

namespace {

std::string dims(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void swap_columns(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// col[target] -= f * col[source]
void column_axpy(const Ring& ring, Matrix& m, std::size_t target, std::size_t source, Element f) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (ring.is_zero(m(r, source))) continue;
    m(r, target) = ring.sub(m(r, target), ring.mul(f, m(r, source)));
  }
}

void row_axpy(const Ring& ring, Matrix& m, std::size_t target, std::size_t source, Element f) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (ring.is_zero(m(source, c))) continue;
    m(target, c) = ring.sub(m(target, c), ring.mul(f, m(source, c)));
  }
}

Element cofactor_det(const Ring& ring, const Matrix& m) {
  std::size_t n = m.rows();
  if (n == 0) return ring.one();
  if (n == 1) return m(0, 0);
  Element acc = ring.zero();
  for (std::size_t c = 0; c < n; ++c) {
    if (ring.is_zero(m(0, c))) continue;
    Matrix minor = Matrix::zeros(ring, n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t cc = 0, k = 0; cc < n; ++cc) {
        if (cc != c) minor(r - 1, k++) = m(r, cc);
      }
    }
    Element term = ring.mul(m(0, c), cofactor_det(ring, minor));
    acc = (c % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
  }
  return acc;
}

}  // namespace

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m = zeros(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

Matrix Matrix::from_columns(const Ring& ring, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m = zeros(ring, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Matrix Matrix::column_matrix(const Vector& v) {
  Matrix m(v.size(), 1, Element{});
  for (std::size_t r = 0; r < v.size(); ++r) m(r, 0) = v[r];
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) fail(ErrorCode::DimensionMismatch, "column length differs from row count");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix mat_mul(const Ring& ring, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    fail(ErrorCode::DimensionMismatch, "cannot multiply " + dims(a) + " by " + dims(b));
  }
  Matrix out = Matrix::zeros(ring, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Element& aik = a(i, k);
      if (ring.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (ring.is_zero(b(k, j))) continue;
        out(i, j) = ring.add(out(i, j), ring.mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

Matrix mat_add(const Ring& ring, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorCode::DimensionMismatch, "cannot add " + dims(a) + " and " + dims(b));
  }
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = ring.add(a(r, c), b(r, c));
  }
  return out;
}

Matrix mat_sub(const Ring& ring, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    fail(ErrorCode::DimensionMismatch, "cannot subtract " + dims(b) + " from " + dims(a));
  }
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = ring.sub(a(r, c), b(r, c));
  }
  return out;
}

Matrix scalar_mul(const Ring& ring, const Element& s, const Matrix& m) {
  Matrix out = m;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = ring.mul(s, m(r, c));
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.cols(), m.rows(), Element{});
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
  }
  return out;
}

Matrix kron(const Ring& ring, const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::zeros(ring, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (ring.is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = ring.mul(a(i, j), b(k, l));
        }
      }
    }
  }
  return out;
}

Vector mat_vec(const Ring& ring, const Matrix& m, const Vector& v) {
  if (m.cols() != v.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  Vector out(m.rows(), ring.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (ring.is_zero(v[c]) || ring.is_zero(m(r, c))) continue;
      out[r] = ring.add(out[r], ring.mul(m(r, c), v[c]));
    }
  }
  return out;
}

Vector vec_add(const Ring& ring, const Vector& x, const Vector& y) {
  if (x.size() != y.size()) fail(ErrorCode::DimensionMismatch, "vector length mismatch");
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = ring.add(x[i], y[i]);
  return out;
}

Vector vec_scale(const Ring& ring, const Element& s, const Vector& x) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = ring.mul(s, x[i]);
  return out;
}

bool is_zero_vector(const Ring& ring, const Vector& v) {
  for (const auto& e : v) {
    if (!ring.is_zero(e)) return false;
  }
  return true;
}

Vector flatten(const Matrix& m) { return m.entries(); }

Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) fail(ErrorCode::DimensionMismatch, "cannot reshape vector");
  Matrix m(rows, cols, Element{});
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  }
  return m;
}

Echelon reduced_echelon(const Ring& ring, const Matrix& m) {
  Echelon out{m, Matrix::identity(ring, m.cols()), {}};
  Matrix& e = out.form;
  Matrix& t = out.transform;
  std::size_t next = 0;
  for (std::size_t r = 0; r < e.rows() && next < e.cols(); ++r) {
    std::size_t pc = e.cols();
    for (std::size_t c = next; c < e.cols(); ++c) {
      if (ring.is_unit(e(r, c))) {
        pc = c;
        break;
      }
    }
    if (pc == e.cols()) continue;
    swap_columns(e, pc, next);
    swap_columns(t, pc, next);
    Element inv = ring.inverse(e(r, next));
    for (std::size_t i = 0; i < e.rows(); ++i) e(i, next) = ring.mul(e(i, next), inv);
    for (std::size_t i = 0; i < t.rows(); ++i) t(i, next) = ring.mul(t(i, next), inv);
    for (std::size_t c = 0; c < e.cols(); ++c) {
      if (c == next || ring.is_zero(e(r, c))) continue;
      Element f = e(r, c);
      column_axpy(ring, e, c, next, f);
      column_axpy(ring, t, c, next, f);
    }
    out.pivots.push_back(r);
    ++next;
  }
  return out;
}

std::size_t rank(const Ring& ring, const Matrix& m) { return reduced_echelon(ring, m).pivots.size(); }

bool is_invertible(const Ring& ring, const Matrix& m) {
  return m.is_square() && rank(ring, m) == m.rows();
}

Matrix invert_matrix(const Ring& ring, const Matrix& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "cannot invert " + dims(m));
  std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(ring, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = n;
    for (std::size_t r = c; r < n; ++r) {
      if (ring.is_unit(a(r, c))) {
        pr = r;
        break;
      }
    }
    if (pr == n) fail(ErrorCode::NotInvertible, "matrix is not invertible (no unit pivot in column " + std::to_string(c) + ")");
    swap_rows(a, pr, c);
    swap_rows(inv, pr, c);
    Element s = ring.inverse(a(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) = ring.mul(a(c, j), s);
      inv(c, j) = ring.mul(inv(c, j), s);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || ring.is_zero(a(r, c))) continue;
      Element f = a(r, c);
      row_axpy(ring, a, r, c, f);
      row_axpy(ring, inv, r, c, f);
    }
  }
  return inv;
}

Element determinant(const Ring& ring, const Matrix& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "determinant of " + dims(m));
  if (!ring.is_field()) {
    if (m.rows() > 5) fail(ErrorCode::TooLarge, "cofactor determinant limited to n <= 5 over Z/p^k");
    return cofactor_det(ring, m);
  }
  std::size_t n = m.rows();
  Matrix a = m;
  Element det = ring.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = n;
    for (std::size_t r = c; r < n; ++r) {
      if (!ring.is_zero(a(r, c))) {
        pr = r;
        break;
      }
    }
    if (pr == n) return ring.zero();
    if (pr != c) {
      swap_rows(a, pr, c);
      det = ring.neg(det);
    }
    det = ring.mul(det, a(c, c));
    Element inv = ring.inverse(a(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      if (ring.is_zero(a(r, c))) continue;
      row_axpy(ring, a, r, c, ring.mul(a(r, c), inv));
    }
  }
  return det;
}

std::optional<Vector> solve_linear(const Ring& ring, const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) fail(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  Matrix a = Matrix::zeros(ring, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a(r, c) = m(r, c);
    a(r, m.cols()) = b[r];
  }
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t prow = 0;
  for (std::size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
    std::size_t pr = m.rows();
    for (std::size_t r = prow; r < m.rows(); ++r) {
      if (ring.is_unit(a(r, c))) {
        pr = r;
        break;
      }
    }
    if (pr == m.rows()) continue;
    swap_rows(a, pr, prow);
    Element s = ring.inverse(a(prow, c));
    for (std::size_t j = 0; j < a.cols(); ++j) a(prow, j) = ring.mul(a(prow, j), s);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == prow || ring.is_zero(a(r, c))) continue;
      row_axpy(ring, a, r, prow, a(r, c));
    }
    pivots.emplace_back(prow, c);
    ++prow;
  }
  for (std::size_t r = prow; r < m.rows(); ++r) {
    if (!ring.is_zero(a(r, m.cols()))) return std::nullopt;
  }
  Vector x(m.cols(), ring.zero());
  for (auto [r, c] : pivots) x[c] = a(r, m.cols());
  return x;
}

std::vector<Vector> idempotent_image_basis(const Ring& ring, const Matrix& e) {
  if (!e.is_square()) fail(ErrorCode::DimensionMismatch, "idempotent must be square");
  if (!(mat_mul(ring, e, e) == e)) fail(ErrorCode::NotIdempotent, "matrix is not idempotent");
  Echelon ech = reduced_echelon(ring, e);
  std::vector<Vector> basis;
  for (std::size_t c = 0; c < e.cols(); ++c) {
    Vector col = ech.form.column(c);
    if (c < ech.pivots.size()) {
      basis.push_back(std::move(col));
    } else if (!is_zero_vector(ring, col)) {
      fail(ErrorCode::NotFreeOverLocalRing, "image has no unit-pivot basis");
    }
  }
  return basis;
}

std::optional<Element> scalar_of(const Ring& ring, const Matrix& m) {
  if (!m.is_square() || m.rows() == 0) return std::nullopt;
  Element lambda = m(0, 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (r == c ? !(m(r, c) == lambda) : !ring.is_zero(m(r, c))) return std::nullopt;
    }
  }
  return lambda;
}

Matrix normalize_projective(const Ring& ring, const Matrix& m) {
  for (const auto& e : m.entries()) {
    if (ring.is_unit(e)) return scalar_mul(ring, ring.inverse(e), m);
  }
  fail(ErrorCode::NoUnitCoordinate, "matrix has no unit entry");
}

Element random_element(const Ring& ring, std::mt19937_64& rng) {
  if (ring.is_finite()) {
    std::uniform_int_distribution<std::uint64_t> dist(0, ring.size() - 1);
    return ring.element_at(dist(rng));
  }
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return Element(q);
}

Matrix random_matrix(const Ring& ring, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m = Matrix::zeros(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_element(ring, rng);
  }
  return m;
}

Matrix random_invertible(const Ring& ring, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = random_matrix(ring, n, n, rng);
    if (is_invertible(ring, m)) return m;
  }
}

}  // namespace brauer
