// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace bt;

namespace {

// Product formula for the Gaussian binomial, exact for small arguments.
std::uint64_t gauss_product(std::uint64_t q, std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t qn = 1, qi = 1;
    for (std::size_t t = 0; t < n - i; ++t) qn *= q;
    for (std::size_t t = 0; t < i + 1; ++t) qi *= q;
    num *= qn - 1;
    den *= qi - 1;
  }
  return num / den;
}

std::vector<std::int64_t> key_of(const Matrix& m) {
  std::vector<std::int64_t> k;
  for (const auto& e : m.entries()) k.push_back(e.coeffs()[0]);
  return k;
}

// Every k-subspace, found by spanning all k-tuples of vectors of F_q^N.
std::set<std::vector<std::int64_t>> brute_subspaces(const Ring& r, std::size_t n, std::size_t k) {
  auto elems = r.enumerate();
  std::vector<Vector> all;
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = elems[idx[i]];
    all.push_back(v);
    std::size_t i = 0;
    while (i < n && ++idx[i] == elems.size()) idx[i++] = 0;
    if (i == n) break;
  }
  std::set<std::vector<std::int64_t>> out;
  std::vector<std::size_t> pick(k, 0);
  for (;;) {
    std::vector<Vector> vs;
    for (auto p : pick) vs.push_back(all[p]);
    Subspace s = subspace_from_span(r, n, vs);
    if (s.dim() == k) out.insert(key_of(s.basis));
    std::size_t i = 0;
    while (i < k && ++pick[i] == all.size()) pick[i++] = 0;
    if (i == k) break;
  }
  return out;
}

}  // namespace

TEST_CASE("make_point") {
  Ring f5 = ring("GF(5)");
  CHECK(pt(f5, {2, 4}).coords() == vec(f5, {1, 2}));
  CHECK(code_of([&] { pt(f5, {0, 0}); }) == ErrorCode::NoUnitCoordinate);
  Ring z9 = ring("Z/9");
  ProjPoint p = pt(z9, {3, 1});
  CHECK(p.coords() == vec(z9, {3, 1}));
  CHECK(p.pivot() == 1);
  CHECK(pt(z9, {3, 2}).coords() == vec(z9, {6, 1}));
  CHECK(code_of([&] { pt(z9, {3, 6}); }) == ErrorCode::NoUnitCoordinate);
}

TEST_CASE("normalization is scale invariant") {
  Ring f5 = ring("GF(5)");
  for (std::size_t n = 0; n <= 2; ++n) {
    for (const auto& p : enumerate_points(f5, n)) {
      for (long lam = 1; lam < 5; ++lam) {
        CHECK(make_point(f5, vec_scale(f5, el(f5, lam), p.coords())) == p);
      }
    }
  }
}

TEST_CASE("point enumeration") {
  CHECK(enumerate_points(ring("GF(5)"), 1).size() == 6);
  CHECK(enumerate_points(ring("GF(2)"), 2).size() == 7);
  CHECK(enumerate_points(ring("GF(3)"), 0).size() == 1);
  CHECK(enumerate_points(ring("GF(2^2;1,1,1)"), 2).size() == 21);
  CHECK(code_of([] { enumerate_points(ring("QQ"), 1); }) == ErrorCode::InfiniteRing);

  // |P^1(Z/9)| = 9 + 3: points [1:t] and [3s:1].
  Ring z9 = ring("Z/9");
  auto pts = enumerate_points(z9, 1);
  CHECK(pts.size() == 12);
  std::set<std::vector<std::int64_t>> seen;
  for (const auto& p : pts) seen.insert({p.coords()[0].coeffs()[0], p.coords()[1].coeffs()[0]});
  CHECK(seen.size() == 12);

  // Lexicographic and duplicate-free.
  Ring f3 = ring("GF(3)");
  auto p2 = enumerate_points(f3, 2);
  CHECK(p2.size() == 13);
  for (std::size_t i = 1; i < p2.size(); ++i) {
    const auto& a = p2[i - 1].coords();
    const auto& b = p2[i].coords();
    CHECK(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                       [&](const Element& x, const Element& y) { return f3.less(x, y); }));
  }
}

TEST_CASE("homographies") {
  Ring f5 = ring("GF(5)");
  ProjPoint x = pt(f5, {1, 3});
  CHECK(pgl_apply(f5, Matrix::identity(f5, 2), x) == x);
  CHECK(pgl_apply(f5, mat(f5, {{0, 1}, {1, 0}}), pt(f5, {1, 0})) == pt(f5, {0, 1}));
  for (long lam = 2; lam < 5; ++lam) {
    for (const auto& p : enumerate_points(f5, 1)) {
      CHECK(pgl_apply(f5, scalar_mul(f5, el(f5, lam), Matrix::identity(f5, 2)), p) == p);
    }
  }
  CHECK(code_of([&] { pgl_apply(f5, mat(f5, {{1, 1}, {1, 1}}), x); }) == ErrorCode::NotInvertible);

  Ring f3 = ring("GF(3)");
  std::mt19937_64 rng(0);
  for (int t = 0; t < 10; ++t) {
    Matrix p = random_invertible(f3, 2, rng), q = random_invertible(f3, 2, rng);
    for (const auto& y : enumerate_points(f3, 1)) {
      CHECK(pgl_apply(f3, p, pgl_apply(f3, q, y)) == pgl_apply(f3, mat_mul(f3, p, q), y));
    }
  }
}

TEST_CASE("subspaces from spans") {
  Ring f5 = ring("GF(5)");
  Subspace s = subspace_from_span(f5, 2, {vec(f5, {2, 0}), vec(f5, {4, 0})});
  CHECK(s.dim() == 1);
  CHECK(s.basis.column(0) == vec(f5, {1, 0}));
  CHECK(subspace_from_span(f5, 3, {}).dim() == 0);

  std::mt19937_64 rng(1);
  for (const char* spec : {"GF(2)", "GF(3)", "GF(5)"}) {
    Ring r = ring(spec);
    for (int t = 0; t < 20; ++t) {
      Matrix m = random_matrix(r, 4, 2, rng);
      Matrix g = random_invertible(r, 2, rng);
      CHECK(subspace_from_matrix(r, m) == subspace_from_matrix(r, mat_mul(r, m, g)));
    }
  }

  Ring z9 = ring("Z/9");
  CHECK(code_of([&] { subspace_from_span(z9, 2, {vec(z9, {3, 0})}); }) == ErrorCode::NotFreeOverLocalRing);
  CHECK(subspace_from_span(z9, 2, {vec(z9, {3, 1})}).dim() == 1);

  Subspace t = subspace_from_span(f5, 3, {vec(f5, {1, 2, 3}), vec(f5, {0, 1, 1})});
  CHECK(subspace_contains(f5, t, vec(f5, {1, 3, 4})));
  CHECK_FALSE(subspace_contains(f5, t, vec(f5, {0, 0, 1})));
  auto coords = subspace_coordinates(f5, t, vec(f5, {2, 0, 2}));
  REQUIRE(coords.has_value());
  CHECK(mat_vec(f5, t.basis, *coords) == vec(f5, {2, 0, 2}));
}

TEST_CASE("charts") {
  Ring f5 = ring("GF(5)");
  CHECK(chart_of(subspace_from_span(f5, 3, {vec(f5, {1, 0, 0}), vec(f5, {0, 1, 0})})) ==
        std::vector<std::size_t>{0, 1});
  CHECK(chart_of(subspace_from_span(f5, 3, {vec(f5, {0, 0, 1})})) == std::vector<std::size_t>{2});
  CHECK(chart_of(subspace_from_span(f5, 2, {vec(f5, {1, 1})})) == std::vector<std::size_t>{0});
}

TEST_CASE("Gaussian binomials") {
  CHECK(gaussian_binomial(2, 4, 2) == 35);
  CHECK(gaussian_binomial(3, 2, 1) == 4);
  CHECK(gaussian_binomial(5, 4, 0) == 1);
  CHECK(gaussian_binomial(5, 2, 3) == 0);
  for (std::uint64_t q : {2, 3, 4, 5, 7})
    for (std::size_t n = 0; n <= 6; ++n)
      for (std::size_t k = 0; k <= n; ++k) CHECK(gaussian_binomial(q, n, k) == gauss_product(q, n, k));
  CHECK(gaussian_binomial(1000003, 40, 20) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("subspace enumeration") {
  CHECK(enumerate_subspaces(ring("GF(3)"), 2, 1).size() == 4);
  CHECK(enumerate_subspaces(ring("GF(2)"), 4, 2).size() == 35);
  CHECK(enumerate_subspaces(ring("GF(5)"), 3, 0).size() == 1);
  CHECK(code_of([] { enumerate_subspaces(ring("GF(7)"), 9, 4); }) == ErrorCode::TooLarge);
  CHECK(code_of([] { enumerate_subspaces(ring("QQ"), 2, 1); }) == ErrorCode::InfiniteRing);
  CHECK(code_of([] { enumerate_subspaces(ring("Z/9"), 2, 1); }) == ErrorCode::NotAField);

  struct Case {
    const char* spec;
    std::size_t n, k;
  };
  for (const Case& c : {Case{"GF(2)", 4, 2}, Case{"GF(2)", 3, 1}, Case{"GF(2)", 4, 3}, Case{"GF(3)", 3, 2},
                        Case{"GF(3)", 4, 1}, Case{"GF(5)", 2, 1}, Case{"GF(2^2;1,1,1)", 3, 1}}) {
    Ring r = ring(c.spec);
    auto subs = enumerate_subspaces(r, c.n, c.k);
    CHECK(subs.size() == gaussian_binomial(r.size(), c.n, c.k));
    std::set<std::vector<std::int64_t>> keys;
    for (const auto& s : subs) {
      CHECK(s.dim() == c.k);
      CHECK(subspace_from_matrix(r, s.basis) == s);  // canonical
      std::vector<std::int64_t> key;
      for (const auto& e : s.basis.entries())
        for (auto x : e.coeffs()) key.push_back(x);
      keys.insert(key);
    }
    CHECK(keys.size() == subs.size());
    if (r.spec().kind == RingSpec::Kind::PrimeField && c.k <= 2) {
      std::set<std::vector<std::int64_t>> mine;
      for (const auto& s : subs) mine.insert(key_of(s.basis));
      CHECK(mine == brute_subspaces(r, c.n, c.k));
    }
  }
}

TEST_CASE("right ideal check") {
  Ring f5 = ring("GF(5)");
  AlgebraPtr m2 = share(matrix_algebra(f5, 2));
  auto sp = [&](std::vector<Vector> v) { return subspace_from_span(f5, 4, v); };

  RightIdealCheck row = right_ideal_check(m2, sp({unit_coords(f5, 2, 0, 0), unit_coords(f5, 2, 0, 1)}));
  CHECK(row.ok());
  CHECK(row.ideal->verified);

  RightIdealCheck col = right_ideal_check(m2, sp({unit_coords(f5, 2, 0, 0), unit_coords(f5, 2, 1, 0)}));
  REQUIRE_FALSE(col.ok());
  // First violation in scan order is E00 * E01 = E01; E10 * E01 = E11 fails too.
  CHECK(col.failure->ideal_basis_index == 0);
  CHECK(col.failure->algebra_basis_index == 1);
  CHECK(col.failure->product == unit_coords(f5, 2, 0, 1));
  CHECK(m2->mul(unit_coords(f5, 2, 1, 0), unit_coords(f5, 2, 0, 1)) == unit_coords(f5, 2, 1, 1));

  CHECK_FALSE(right_ideal_check(m2, sp({m2->unit()})).ok());
  CHECK(right_ideal_check(m2, sp({})).ok());
  CHECK(code_of([&] { right_ideal_check(m2, subspace_from_span(f5, 3, {})); }) == ErrorCode::DimensionMismatch);
}
