// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "support.hpp"

using namespace bt;

namespace {

// Leibniz expansion, independent of the elimination code.
Element leibniz_det(const Ring& r, const Matrix& m) {
  std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Element total = r.zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Element term = r.one();
    for (std::size_t i = 0; i < n; ++i) term = r.mul(term, m(i, perm[i]));
    total = inversions % 2 ? r.sub(total, term) : r.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// All vectors of the column span, by brute force over a small field.
std::set<std::vector<std::int64_t>> span_set(const Ring& r, const Matrix& m) {
  auto elems = r.enumerate();
  std::set<std::vector<std::int64_t>> out;
  std::vector<std::size_t> idx(m.cols(), 0);
  for (;;) {
    Vector v(m.rows(), r.zero());
    for (std::size_t c = 0; c < m.cols(); ++c) v = vec_add(r, v, vec_scale(r, elems[idx[c]], m.column(c)));
    std::vector<std::int64_t> key;
    for (const auto& e : v) key.push_back(e.coeffs()[0]);
    out.insert(key);
    std::size_t c = 0;
    while (c < idx.size() && ++idx[c] == elems.size()) idx[c++] = 0;
    if (c == idx.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("matrix operations") {
  Ring f5 = ring("GF(5)");
  std::mt19937_64 rng(0);
  Matrix m = random_matrix(f5, 3, 3, rng);
  CHECK(mat_mul(f5, Matrix::identity(f5, 3), m) == m);
  CHECK(mat_mul(f5, m, Matrix::identity(f5, 3)) == m);
  CHECK(kron(f5, Matrix::identity(f5, 2), Matrix::identity(f5, 2)) == Matrix::identity(f5, 4));
  CHECK(transpose(transpose(m)) == m);
  CHECK(mat_sub(f5, mat_add(f5, m, m), m) == m);
  CHECK(scalar_mul(f5, f5.from_int(2), m) == mat_add(f5, m, m));
  CHECK(unflatten(flatten(m), 3, 3) == m);
  CHECK(code_of([&] { mat_mul(f5, m, Matrix::zeros(f5, 2, 2)); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([&] { mat_add(f5, m, Matrix::zeros(f5, 3, 2)); }) == ErrorCode::DimensionMismatch);

  Matrix a = mat(f5, {{1, 2}, {3, 4}});
  Matrix b = mat(f5, {{0, 1}, {1, 0}});
  Matrix k = kron(f5, a, b);
  CHECK(k == mat(f5, {{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 3, 0, 4}, {3, 0, 4, 0}}));
}

TEST_CASE("reduced echelon examples") {
  Ring f5 = ring("GF(5)");
  Echelon e = reduced_echelon(f5, mat(f5, {{2, 4}, {0, 0}}));
  CHECK(e.form == mat(f5, {{1, 0}, {0, 0}}));
  CHECK(e.pivots == std::vector<std::size_t>{0});

  Ring q = ring("QQ");
  Echelon id = reduced_echelon(q, Matrix::identity(q, 3));
  CHECK(id.form == Matrix::identity(q, 3));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

  Ring z9 = ring("Z/9");
  Echelon loc = reduced_echelon(z9, mat(z9, {{3}, {1}}));
  CHECK(loc.form == mat(z9, {{3}, {1}}));
  CHECK(loc.pivots == std::vector<std::size_t>{1});
}

TEST_CASE("echelon form is canonical and E = M T") {
  std::mt19937_64 rng(0);
  for (const char* s : {"GF(2)", "GF(3)", "GF(5)", "QQ"}) {
    Ring r = ring(s);
    for (int t = 0; t < 40; ++t) {
      std::size_t rows = 2 + t % 4, cols = 1 + t % 3;
      Matrix m = random_matrix(r, rows, cols, rng);
      Echelon e = reduced_echelon(r, m);
      CHECK(mat_mul(r, m, e.transform) == e.form);
      CHECK(is_invertible(r, e.transform));
      CHECK(reduced_echelon(r, e.form).form == e.form);
      Matrix g = random_invertible(r, cols, rng);
      CHECK(reduced_echelon(r, mat_mul(r, m, g)).form == e.form);
      for (std::size_t j = 0; j < e.pivots.size(); ++j) {
        CHECK(r.is_one(e.form(e.pivots[j], j)));
        for (std::size_t c = 0; c < cols; ++c) {
          if (c != j) CHECK(r.is_zero(e.form(e.pivots[j], c)));
        }
        if (j) CHECK(e.pivots[j - 1] < e.pivots[j]);
      }
    }
  }
}

TEST_CASE("rank examples and span-size oracle") {
  Ring f5 = ring("GF(5)");
  CHECK(rank(f5, Matrix::identity(f5, 4)) == 4);
  CHECK(rank(f5, Matrix::zeros(f5, 3, 3)) == 0);
  CHECK(rank(f5, mat(f5, {{1, 2}, {2, 4}})) == 1);

  std::mt19937_64 rng(1);
  for (const char* s : {"GF(2)", "GF(3)"}) {
    Ring r = ring(s);
    for (int t = 0; t < 30; ++t) {
      Matrix m = random_matrix(r, 3, 1 + t % 4, rng);
      std::size_t k = rank(r, m);
      CHECK(span_set(r, m).size() == static_cast<std::size_t>(std::pow(r.size(), k)));
      CHECK(rank(r, transpose(m)) == k);
    }
  }
}

TEST_CASE("inverse") {
  Ring f5 = ring("GF(5)");
  CHECK(invert_matrix(f5, mat(f5, {{1, 1}, {0, 1}})) == mat(f5, {{1, 4}, {0, 1}}));
  Ring z9 = ring("Z/9");
  CHECK(code_of([&] { invert_matrix(z9, mat(z9, {{3, 0}, {0, 3}})); }) == ErrorCode::NotInvertible);
  CHECK(code_of([&] { invert_matrix(f5, mat(f5, {{1, 2}, {2, 4}})); }) == ErrorCode::NotInvertible);

  std::mt19937_64 rng(2);
  for (const char* s : {"GF(7)", "QQ", "Z/9", "GF(3^2;1,0,1)"}) {
    Ring r = ring(s);
    for (std::size_t n = 1; n <= 4; ++n) {
      for (int t = 0; t < 5; ++t) {
        Matrix p = random_invertible(r, n, rng);
        Matrix pi = invert_matrix(r, p);
        CHECK(mat_mul(r, p, pi) == Matrix::identity(r, n));
        CHECK(mat_mul(r, pi, p) == Matrix::identity(r, n));
        CHECK(invert_matrix(r, pi) == p);
      }
    }
  }
}

TEST_CASE("determinant against the Leibniz formula") {
  std::mt19937_64 rng(3);
  for (const char* s : {"GF(7)", "QQ", "Z/9", "Z/8"}) {
    Ring r = ring(s);
    for (std::size_t n = 1; n <= 5; ++n) {
      for (int t = 0; t < 4; ++t) {
        Matrix m = random_matrix(r, n, n, rng);
        CAPTURE(s);
        CHECK(determinant(r, m) == leibniz_det(r, m));
        CHECK(is_invertible(r, m) == r.is_unit(leibniz_det(r, m)));
      }
    }
  }
  Ring z9 = ring("Z/9");
  CHECK(code_of([&] { determinant(z9, Matrix::identity(z9, 6)); }) == ErrorCode::TooLarge);
}

TEST_CASE("solve_linear") {
  Ring q = ring("QQ");
  CHECK(solve_linear(q, Matrix::identity(q, 2), vec(q, {3, 4})) == vec(q, {3, 4}));
  Ring f5 = ring("GF(5)");
  CHECK_FALSE(solve_linear(f5, mat(f5, {{1, 1}, {1, 1}}), vec(f5, {1, 2})).has_value());
  // Free variables are zero.
  CHECK(solve_linear(f5, mat(f5, {{1, 1}, {2, 2}}), vec(f5, {3, 1})) == vec(f5, {3, 0}));

  std::mt19937_64 rng(4);
  Ring f7 = ring("GF(7)");
  for (int t = 0; t < 30; ++t) {
    Matrix m = random_matrix(f7, 3, 1 + t % 4, rng);
    Vector x0(m.cols());
    for (auto& x : x0) x = random_element(f7, rng);
    Vector b = mat_vec(f7, m, x0);
    auto x = solve_linear(f7, m, b);
    REQUIRE(x.has_value());
    CHECK(mat_vec(f7, m, *x) == b);
  }
}

TEST_CASE("idempotent image basis") {
  Ring f5 = ring("GF(5)");
  auto b0 = idempotent_image_basis(f5, mat(f5, {{1, 0}, {0, 0}}));
  REQUIRE(b0.size() == 1);
  CHECK(b0[0] == vec(f5, {1, 0}));
  auto b1 = idempotent_image_basis(f5, mat(f5, {{3, 3}, {3, 3}}));
  REQUIRE(b1.size() == 1);
  CHECK(b1[0] == vec(f5, {1, 1}));
  Ring z9 = ring("Z/9");
  auto b2 = idempotent_image_basis(z9, Matrix::identity(z9, 3));
  REQUIRE(b2.size() == 3);
  CHECK(b2[1] == vec(z9, {0, 1, 0}));
  CHECK(code_of([&] { idempotent_image_basis(f5, mat(f5, {{2, 0}, {0, 0}})); }) == ErrorCode::NotIdempotent);

  // The basis spans exactly the fixed vectors {x : e x = x}, checked over GF(3).
  Ring f3 = ring("GF(3)");
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    Matrix p = random_invertible(f3, 3, rng);
    Matrix d = Matrix::zeros(f3, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) d(i, i) = f3.from_int((t >> i) & 1);
    Matrix e = mat_mul(f3, mat_mul(f3, p, d), invert_matrix(f3, p));
    auto basis = idempotent_image_basis(f3, e);
    Matrix bm = Matrix::from_columns(f3, 3, basis);
    auto span = span_set(f3, bm.cols() ? bm : Matrix::zeros(f3, 3, 1));
    std::set<std::vector<std::int64_t>> fixed;
    for (auto& x : enumerate_points(f3, 2)) {
      for (const auto& lam : f3.enumerate()) {
        Vector v = vec_scale(f3, lam, x.coords());
        if (mat_vec(f3, e, v) == v) {
          std::vector<std::int64_t> key;
          for (const auto& c : v) key.push_back(c.coeffs()[0]);
          fixed.insert(key);
        }
      }
    }
    fixed.insert({0, 0, 0});
    CHECK(span == fixed);
  }

  // Idempotent over Z/9 conjugate to diag(1,0): still free.
  Matrix p = mat(z9, {{1, 3}, {2, 1}});
  Matrix e = mat_mul(z9, mat_mul(z9, p, mat(z9, {{1, 0}, {0, 0}})), invert_matrix(z9, p));
  auto bz = idempotent_image_basis(z9, e);
  REQUIRE(bz.size() == 1);
  CHECK(mat_vec(z9, e, bz[0]) == bz[0]);
}

TEST_CASE("scalars and projective normalization") {
  Ring f7 = ring("GF(7)");
  CHECK(scalar_of(f7, scalar_mul(f7, f7.from_int(3), Matrix::identity(f7, 3))) == f7.from_int(3));
  CHECK_FALSE(scalar_of(f7, mat(f7, {{1, 1}, {0, 1}})).has_value());
  Matrix m = mat(f7, {{0, 3}, {2, 1}});
  Matrix n = normalize_projective(f7, m);
  CHECK(n == mat(f7, {{0, 1}, {3, 5}}));
  CHECK(normalize_projective(f7, scalar_mul(f7, f7.from_int(4), m)) == n);
  Ring z9 = ring("Z/9");
  CHECK(normalize_projective(z9, mat(z9, {{3, 2}, {1, 0}})) == mat(z9, {{6, 1}, {5, 0}}));
}
