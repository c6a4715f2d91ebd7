// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "brauer/conics.hpp"
#include "support.hpp"

using namespace bt;

namespace {

PointedConic pointed(const Ring& r, long a, long b, long y0, long z0) {
  PointedConic pc;
  pc.a = pc.original_a = r.from_int(a);
  pc.b = pc.original_b = r.from_int(b);
  pc.y0 = r.from_int(y0);
  pc.z0 = r.from_int(z0);
  return pc;
}

// Raw coordinates satisfying x^2 = a y^2 + b z^2, counted up to scalars by
// a direct scan of F_q^3 \ 0 (each projective point has q-1 representatives).
std::size_t affine_count(const Ring& r, const Element& a, const Element& b) {
  auto e = r.enumerate();
  std::size_t n = 0;
  for (const auto& x : e)
    for (const auto& y : e)
      for (const auto& z : e) {
        if (r.is_zero(x) && r.is_zero(y) && r.is_zero(z)) continue;
        n += r.mul(x, x) == r.add(r.mul(a, r.mul(y, y)), r.mul(b, r.mul(z, z)));
      }
  return n / (r.size() - 1);
}

}  // namespace

TEST_CASE("on_conic") {
  Ring q = ring("QQ");
  CHECK(on_conic(q, q.one(), q.one(), pt(q, {1, 1, 0})));
  Ring f5 = ring("GF(5)");
  CHECK_FALSE(on_conic(f5, f5.one(), f5.one(), pt(f5, {1, 0, 0})));
  Ring f7 = ring("GF(7)");
  CHECK(conic_points(f7, f7.one(), el(f7, 2)).size() == 8);
}

TEST_CASE("point counts are q + 1") {
  for (const char* spec : {"GF(3)", "GF(5)", "GF(7)", "GF(3^2;1,0,1)"}) {
    Ring r = ring(spec);
    for (const auto& a : r.enumerate()) {
      if (r.is_zero(a)) continue;
      for (const auto& b : r.enumerate()) {
        if (r.is_zero(b)) continue;
        std::size_t n = conic_points(r, a, b).size();
        CAPTURE(spec);
        CHECK(n == r.size() + 1);
        if (r.size() <= 7) CHECK(n == affine_count(r, a, b));
      }
    }
  }
}

TEST_CASE("find_point") {
  Ring q = ring("QQ");
  auto p = find_point(q, q.one(), q.one(), 5);
  REQUIRE(p.has_value());
  CHECK(*p == pt(q, {1, 1, 0}));
  CHECK_FALSE(find_point(q, el(q, -1), el(q, -1), 20).has_value());
  auto p2 = find_point(q, el(q, 2), el(q, 7), 5);  // 3^2 = 2*1 + 7*1
  REQUIRE(p2.has_value());
  CHECK(on_conic(q, el(q, 2), el(q, 7), *p2));

  Ring f5 = ring("GF(5)");
  auto f = find_point(f5, el(f5, 2), el(f5, 3), 0);
  REQUIRE(f.has_value());
  CHECK(on_conic(f5, el(f5, 2), el(f5, 3), *f));
  CHECK(*f == conic_points(f5, el(f5, 2), el(f5, 3)).front());
  CHECK(code_of([&] { find_point(f5, f5.zero(), f5.one(), 0); }) == ErrorCode::NotUnit);

  Ring big = ring("GF(1000003)");
  auto g = find_point(big, el(big, 5), el(big, 7), 0);
  REQUIRE(g.has_value());
  CHECK(on_conic(big, el(big, 5), el(big, 7), *g));
}

TEST_CASE("normalize_base_point") {
  Ring q = ring("QQ");
  PointedConic pc = normalize_base_point(q, q.one(), q.one(), pt(q, {1, 1, 0}));
  CHECK(pc.transform == ConicTransform::Identity);
  CHECK(pc.a == q.one());
  CHECK(pc.y0 == q.one());
  CHECK(pc.z0 == q.zero());

  Ring f5 = ring("GF(5)");
  PointedConic sw = normalize_base_point(f5, f5.one(), f5.one(), pt(f5, {0, 1, 2}));
  CHECK(sw.transform == ConicTransform::SwapXY);
  CHECK(sw.a == f5.one());
  CHECK(sw.b == el(f5, -1));
  CHECK(f5.is_one(f5.add(f5.mul(sw.a, f5.mul(sw.y0, sw.y0)), f5.mul(sw.b, f5.mul(sw.z0, sw.z0)))));

  CHECK(code_of([&] { normalize_base_point(f5, f5.one(), f5.one(), pt(f5, {1, 0, 0})); }) == ErrorCode::NotOnConic);
  CHECK(code_of([] {
          Ring f2 = ring("GF(2)");
          normalize_base_point(f2, f2.one(), f2.one(), pt(f2, {1, 1, 0}));
        }) == ErrorCode::NotUnit);
}

TEST_CASE("transforms land on the transformed conic") {
  for (const char* spec : {"GF(5)", "GF(7)", "Z/9", "Z/25"}) {
    Ring r = ring(spec);
    for (const auto& a : r.enumerate()) {
      if (!r.is_unit(a)) continue;
      for (const auto& b : r.enumerate()) {
        if (!r.is_unit(b)) continue;
        for (const auto& x : conic_points(r, a, b)) {
          PointedConic pc = normalize_base_point(r, a, b, x);
          CHECK(r.is_one(r.add(r.mul(pc.a, r.mul(pc.y0, pc.y0)), r.mul(pc.b, r.mul(pc.z0, pc.z0)))));
          for (const auto& y : conic_points(r, a, b)) {
            ProjPoint moved = apply_transform(r, pc.transform, y);
            CHECK(on_conic(r, pc.a, pc.b, moved));
            CHECK(apply_transform(r, pc.transform, moved) == y);
          }
        }
      }
    }
  }
}

TEST_CASE("x and y are never both non-units on a conic") {
  // If x, y lie in the maximal ideal then so does b z^2 = x^2 - a y^2, so z
  // does too and the point has no unit coordinate. The x <-> z branch of the
  // normalization is therefore only a guard.
  for (const char* spec : {"GF(5)", "GF(7)", "Z/9", "Z/25", "Z/27"}) {
    Ring r = ring(spec);
    for (const auto& a : r.enumerate()) {
      if (!r.is_unit(a)) continue;
      for (const auto& b : r.enumerate()) {
        if (!r.is_unit(b)) continue;
        for (const auto& x : conic_points(r, a, b)) {
          CHECK((r.is_unit(x.coords()[0]) || r.is_unit(x.coords()[1])));
          CHECK(normalize_base_point(r, a, b, x).transform != ConicTransform::SwapXZ);
        }
      }
    }
  }
  // The permutation itself is an involution taking C(a,b) onto C(-a/b, 1/b).
  Ring f7 = ring("GF(7)");
  Element a = el(f7, 3), b = el(f7, 5);
  Element a2 = f7.neg(f7.div(a, b)), b2 = f7.inverse(b);
  for (const auto& x : conic_points(f7, a, b)) {
    ProjPoint y = apply_transform(f7, ConicTransform::SwapXZ, x);
    CHECK(on_conic(f7, a2, b2, y));
    CHECK(apply_transform(f7, ConicTransform::SwapXZ, y) == x);
  }
}

TEST_CASE("psi examples") {
  Ring q = ring("QQ");
  PointedConic pc = pointed(q, 1, 1, 1, 0);
  CHECK(psi(q, pc, pt(q, {1, 0})) == pt(q, {1, 1, 0}));
  CHECK(psi(q, pc, pt(q, {0, 1})) == pt(q, {1, -1, 0}));
  CHECK(psi(q, pc, pt(q, {1, 1})) == pt(q, {1, 0, -1}));
}

TEST_CASE("psi satisfies the conic equation") {
  // a u^2 + b v^2 squared equals a Y^2 + b Z^2 exactly when a y0^2 + b z0^2 = 1;
  // check the identity at random points where the invariant holds and fails.
  std::mt19937_64 rng(0);
  Ring q = ring("QQ");
  for (int t = 0; t < 100; ++t) {
    Element y0 = random_element(q, rng), z0 = random_element(q, rng);
    Element a = random_element(q, rng);
    if (q.is_zero(a) || q.is_zero(z0)) continue;
    // b chosen so that a y0^2 + b z0^2 = 1.
    Element b = q.div(q.sub(q.one(), q.mul(a, q.mul(y0, y0))), q.mul(z0, z0));
    if (q.is_zero(b)) continue;
    PointedConic pc;
    pc.a = pc.original_a = a;
    pc.b = pc.original_b = b;
    pc.y0 = y0;
    pc.z0 = z0;
    ProjPoint uv = random_line_point(q, rng);
    ProjPoint x = psi(q, pc, uv);
    CHECK(on_conic(q, a, b, x));
  }
  // Unsquared "a y0 + b z0 = 1" does not suffice: a = b = 1/2, y0 = 3/2, z0 = 1/2.
  PointedConic wrong;
  wrong.a = wrong.original_a = el(q, "1/2");
  wrong.b = wrong.original_b = el(q, "1/2");
  wrong.y0 = el(q, "3/2");
  wrong.z0 = el(q, "1/2");
  CHECK(code_of([&] { psi(q, wrong, pt(q, {1, 0})); }) == ErrorCode::Internal);

  for (const char* spec : {"GF(5)", "GF(7)"}) {
    Ring r = ring(spec);
    for (const auto& a : r.enumerate()) {
      if (r.is_zero(a)) continue;
      for (const auto& b : r.enumerate()) {
        if (r.is_zero(b)) continue;
        for (const auto& x : conic_points(r, a, b)) {
          PointedConic pc = normalize_base_point(r, a, b, x);
          for (const auto& uv : enumerate_points(r, 1)) CHECK(on_conic(r, pc.a, pc.b, psi(r, pc, uv)));
        }
      }
    }
  }
}

TEST_CASE("phi examples") {
  Ring q = ring("QQ");
  PointedConic pc = pointed(q, 1, 1, 1, 0);
  CHECK(phi(q, pc, pt(q, {1, 1, 0})) == pt(q, {1, 0}));
  CHECK(phi(q, pc, pt(q, {1, 0, -1})) == pt(q, {1, 1}));
  CHECK(phi(q, pc, pt(q, {1, -1, 0})) == pt(q, {0, 1}));
  CHECK(code_of([&] { phi(q, pc, pt(q, {1, 0, 0})); }) == ErrorCode::NotOnConic);
}

TEST_CASE("phi charts: dichotomy and agreement") {
  for (const char* spec : {"GF(5)", "GF(7)"}) {
    Ring r = ring(spec);
    for (const auto& a : r.enumerate()) {
      if (r.is_zero(a)) continue;
      for (const auto& b : r.enumerate()) {
        if (r.is_zero(b)) continue;
        auto pts = conic_points(r, a, b);
        for (const auto& base : pts) {
          PointedConic pc = normalize_base_point(r, a, b, base);
          for (const auto& p : pts) {
            ProjPoint x = apply_transform(r, pc.transform, p);
            const auto& c = x.coords();
            Element s = r.add(r.mul(pc.a, r.mul(pc.y0, c[1])), r.mul(pc.b, r.mul(pc.z0, c[2])));
            Element d1 = r.add(c[0], s), d2 = r.sub(c[0], s);
            CHECK((!r.is_zero(d1) || !r.is_zero(d2)));
            if (!r.is_zero(d1) && !r.is_zero(d2)) {
              Element n = r.sub(r.mul(pc.z0, c[1]), r.mul(pc.y0, c[2]));
              ProjPoint first = make_point(r, Vector{r.one(), r.div(r.mul(pc.a, n), d1)});
              ProjPoint second = make_point(r, Vector{r.div(r.mul(pc.b, n), d2), r.one()});
              CHECK(first == second);
            }
            CHECK_NOTHROW(phi(r, pc, x));
          }
        }
      }
    }
  }
}

TEST_CASE("parametrization over finite fields is a bijection") {
  Ring f5 = ring("GF(5)");
  ParamResult r = parametrize(f5, f5.one(), f5.one(), pt(f5, {1, 1, 0}));
  REQUIRE(r.verification.has_value());
  CHECK(r.verification->passed);
  CHECK(r.verification->exhaustive);
  CHECK(r.verification->line_points == 6);
  CHECK(r.verification->conic_points == 6);

  Ring f7 = ring("GF(7)");
  for (long b = 1; b < 7; ++b) {
    if (!on_conic(f7, f7.one(), el(f7, b), pt(f7, {1, 1, 0}))) continue;
    ParamResult p = parametrize(f7, f7.one(), el(f7, b), pt(f7, {1, 1, 0}));
    CHECK(p.verification->passed);
    CHECK(p.verification->conic_points == 8);
  }

  for (const char* spec : {"GF(3)", "GF(5)"}) {
    Ring r2 = ring(spec);
    for (const auto& a : r2.enumerate()) {
      if (r2.is_zero(a)) continue;
      for (const auto& b : r2.enumerate()) {
        if (r2.is_zero(b)) continue;
        for (const auto& x : conic_points(r2, a, b)) {
          ParamResult p = parametrize(r2, a, b, x);
          CHECK(p.verification->passed);
          // Independent bijection check: images of P^1 are distinct conic points.
          std::set<std::vector<std::int64_t>> images;
          for (const auto& uv : enumerate_points(r2, 1)) {
            ProjPoint c = p.map.to_conic(uv);
            images.insert({c.coords()[0].coeffs()[0], c.coords()[1].coeffs()[0], c.coords()[2].coeffs()[0]});
          }
          CHECK(images.size() == r2.size() + 1);
        }
      }
    }
  }

  ParamResult quiet = parametrize(f5, f5.one(), f5.one(), pt(f5, {1, 1, 0}), false);
  CHECK_FALSE(quiet.verification.has_value());
}

TEST_CASE("parametrization over the rationals") {
  Ring q = ring("QQ");
  ParamResult r = parametrize(q, q.one(), q.one(), pt(q, {1, 1, 0}), true, 0, 100);
  REQUIRE(r.verification.has_value());
  CHECK(r.verification->passed);
  CHECK_FALSE(r.verification->exhaustive);
  CHECK(r.verification->roundtrips == 100);

  // x^2 = 2 y^2 - z^2 through [1 : 1 : 1].
  ParamResult s = parametrize(q, el(q, 2), el(q, -1), pt(q, {1, 1, 1}), true, 7, 50);
  CHECK(s.verification->passed);
  // 3^2 = 2 * 1 + 7 * 1.
  ParamResult t = parametrize(q, el(q, 2), el(q, 7), pt(q, {3, 1, 1}), true, 1, 50);
  CHECK(t.verification->passed);
}

TEST_CASE("parametrization over Z/p^k") {
  // Smooth conics over Z/p^k (p odd) still have |P^1| points, and the charts
  // of phi keep covering them.
  Ring z9 = ring("Z/9");
  for (const auto& a : z9.enumerate()) {
    if (!z9.is_unit(a)) continue;
    for (const auto& b : z9.enumerate()) {
      if (!z9.is_unit(b)) continue;
      for (const auto& x : conic_points(z9, a, b)) {
        ParamResult r = parametrize(z9, a, b, x);
        CHECK(r.verification->passed);
        CHECK(r.verification->line_points == 12);
        CHECK(r.verification->conic_points == 12);
      }
    }
  }
  Ring z25 = ring("Z/25");
  ParamResult r = parametrize(z25, z25.from_int(2), z25.from_int(3), *find_point(z25, z25.from_int(2), z25.from_int(3), 0));
  CHECK(r.verification->passed);
  CHECK(r.verification->line_points == 30);
}

TEST_CASE("conic rescaling") {
  Ring f5 = ring("GF(5)");
  for (const auto& x : conic_points(f5, f5.one(), f5.one())) {
    CHECK(conic_rescale(f5, f5.one(), f5.one(), f5.one(), f5.one(), x) == x);
  }
  // C(4,1) -> C(1,1) with u = 2.
  Element two = el(f5, 2), half = f5.inverse(two);
  auto src = conic_points(f5, el(f5, 4), f5.one());
  REQUIRE_FALSE(src.empty());
  for (const auto& x : src) {
    ProjPoint y = conic_rescale(f5, f5.one(), f5.one(), two, f5.one(), x);
    CHECK(on_conic(f5, f5.one(), f5.one(), y));
    // Inverse rescale: C(1,1) = C(half^2 * 4, 1) -> C(4, 1).
    CHECK(conic_rescale(f5, el(f5, 4), f5.one(), half, f5.one(), y) == x);
  }
  CHECK(code_of([&] { conic_rescale(f5, f5.one(), f5.one(), two, f5.one(), pt(f5, {1, 1, 0})); }) ==
        ErrorCode::NotOnConic);
  CHECK(code_of([&] { conic_rescale(f5, f5.one(), f5.one(), f5.zero(), f5.one(), src[0]); }) == ErrorCode::NotUnit);
}
