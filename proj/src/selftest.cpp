// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include "brauer/selftest.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "brauer/algebras.hpp"
#include "brauer/conics.hpp"
#include "brauer/error.hpp"
#include "brauer/projective.hpp"
#include "brauer/severi_brauer.hpp"

namespace brauer {

namespace {

struct Tally {
  std::uint64_t checks = 0;
  std::string failure;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok && failure.empty()) failure = what();
  }
  bool ok() const { return failure.empty(); }
};

Ring ring_of(const char* spec) { return Ring(parse_ring_spec(spec)); }

std::string point_text(const Ring& ring, const ProjPoint& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.coords().size(); ++i) {
    if (i) s += ":";
    s += ring.format(p.coords()[i]);
  }
  return s + "]";
}

std::string key(const Ring& ring, const Vector& v) {
  std::string s;
  for (const auto& e : v) s += ring.format(e) + ";";
  return s;
}

std::vector<Matrix> unit_basis(const Ring& ring, std::size_t k) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Matrix e = Matrix::zeros(ring, k, k);
      e(i, j) = ring.one();
      out.push_back(std::move(e));
    }
  }
  return out;
}

// Runs `body` under a stopwatch; module errors become failures.
CriterionReport timed(int id, std::string name, double budget, const std::function<void(Tally&)>& body) {
  CriterionReport r;
  r.id = id;
  r.name = std::move(name);
  r.budget_seconds = budget;
  Tally t;
  auto start = std::chrono::steady_clock::now();
  try {
    body(t);
  } catch (const Error& e) {
    if (t.failure.empty()) t.failure = std::string(error_code_name(e.code())) + ": " + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.checks = t.checks;
  r.passed = t.ok() && r.seconds <= budget;
  if (!t.ok()) {
    r.detail = t.failure;
  } else if (r.seconds > budget) {
    r.detail = "over time budget";
  } else {
    r.detail = std::to_string(t.checks) + " checks";
  }
  return r;
}

void delta_bijection(Tally& t) {
  for (const char* spec : {"GF(2)", "GF(3)"}) {
    Ring ring = ring_of(spec);
    AlgebraPtr m2 = share(matrix_algebra(ring, 2));
    const std::uint64_t q = ring.size();
    auto subs = enumerate_subspaces(ring, 4, 2);
    t.expect(subs.size() == gaussian_binomial(q, 4, 2),
             [&] { return std::string(spec) + ": wrong number of 2-dimensional subspaces"; });
    std::set<std::string> ideals;
    for (const auto& s : subs) {
      if (right_ideal_check(m2, s).ok()) ideals.insert(key(ring, s.basis.entries()));
    }
    std::set<std::string> images;
    for (const auto& x : enumerate_points(ring, 1)) {
      RightIdealRep d = delta(m2, x);
      images.insert(key(ring, d.space.basis.entries()));
      t.expect(delta_inv(d) == x, [&] { return std::string(spec) + ": delta_inv(delta(X)) != X at " + point_text(ring, x); });
    }
    t.expect(images.size() == q + 1, [&] { return std::string(spec) + ": delta not injective"; });
    t.expect(ideals == images, [&] { return std::string(spec) + ": right ideals differ from the image of delta"; });
  }
}

void equivariance(Tally& t, std::uint64_t seed) {
  const std::pair<const char*, std::size_t> cases[] = {{"GF(3)", 1}, {"GF(5)", 1}, {"GF(3)", 2}};
  for (const auto& [spec, n] : cases) {
    Ring ring = ring_of(spec);
    AlgebraPtr alg = share(matrix_algebra(ring, n + 1));
    std::mt19937_64 rng(seed);
    auto points = enumerate_points(ring, n);
    for (int trial = 0; trial < 10; ++trial) {
      Matrix p = random_invertible(ring, n + 1, rng);
      for (const auto& x : points) {
        RightIdealRep lhs = delta(alg, pgl_apply(ring, p, x));
        RightIdealRep rhs = conjugate_ideal(p, delta(alg, x));
        t.expect(lhs.space == rhs.space, [&, x = x] {
          return std::string(spec) + ": delta(P X) != P delta(X) P^-1 at " + point_text(ring, x);
        });
      }
    }
  }
}

void conjugator_recovery(Tally& t, std::uint64_t seed) {
  Ring ring = ring_of("GF(5)");
  std::mt19937_64 rng(seed);
  for (std::size_t k : {2u, 3u}) {
    auto basis = unit_basis(ring, k);
    for (int trial = 0; trial < 50; ++trial) {
      Matrix p = random_invertible(ring, k, rng);
      Matrix pinv = invert_matrix(ring, p);
      std::vector<Matrix> units;
      for (const auto& e : basis) units.push_back(mat_mul(ring, mat_mul(ring, p, e), pinv));
      Matrix q = matrix_units_conjugator(ring, units);
      Matrix qinv = invert_matrix(ring, q);
      for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        t.expect(mat_mul(ring, mat_mul(ring, q, basis[idx]), qinv) == units[idx],
                 [&] { return "conjugation identity fails for e_" + std::to_string(idx); });
      }
      auto lambda = scalar_of(ring, mat_mul(ring, pinv, q));
      t.expect(lambda && ring.is_unit(*lambda), [] { return std::string("recovered P is not a scalar multiple of P"); });
    }
  }
}

void skolem_noether(Tally& t, std::uint64_t seed) {
  for (const char* spec : {"GF(5)", "GF(7)"}) {
    Ring ring = ring_of(spec);
    std::mt19937_64 rng(seed);
    for (std::size_t n : {1u, 2u}) {
      for (int trial = 0; trial < 20; ++trial) {
        Matrix p = random_invertible(ring, n + 1, rng);
        Matrix back = automorphism_to_pgl(ring, n, inner_automorphism(ring, n, p));
        t.expect(back == normalize_projective(ring, p),
                 [&] { return std::string(spec) + ": automorphism_to_pgl(alpha(P)) != P in PGL"; });
      }
      ErrorCode code = ErrorCode::Internal;
      try {
        automorphism_to_pgl(ring, n, transpose_map(ring, n));
      } catch (const Error& e) {
        code = e.code();
      }
      t.expect(code == ErrorCode::NotAutomorphism, [&] { return std::string(spec) + ": transpose map was not rejected"; });
    }
  }
}

void azumaya_suite(Tally& t) {
  Ring f5 = ring_of("GF(5)");
  for (std::size_t k = 1; k <= 3; ++k) {
    AzumayaReport r = azumaya_check(matrix_algebra(f5, k));
    t.expect(r.is_azumaya && r.n == k - 1, [&] { return "M_" + std::to_string(k) + "(GF(5)) not Azumaya: " + r.reason; });
  }
  for (std::int64_t a = 1; a < 5; ++a) {
    for (std::int64_t b = 1; b < 5; ++b) {
      AzumayaReport r = azumaya_check(quaternion_algebra(f5, f5.from_int(a), f5.from_int(b)));
      t.expect(r.is_azumaya && r.n == 1u, [&] {
        return "Q(" + std::to_string(a) + "," + std::to_string(b) + ")/GF(5) not Azumaya: " + r.reason;
      });
    }
  }
  Ring qq = ring_of("QQ");
  AzumayaReport rq = azumaya_check(quaternion_algebra(qq, qq.from_int(-1), qq.from_int(-1)));
  t.expect(rq.is_azumaya && rq.n == 1u, [&] { return "Q(-1,-1)/QQ not Azumaya: " + rq.reason; });

  AzumayaReport d4 = azumaya_check(diagonal_algebra(f5, 4));
  t.expect(!d4.is_azumaya && !d4.reason.empty(), [] { return std::string("diagonal rank-4 algebra accepted"); });
  AzumayaReport d3 = azumaya_check(diagonal_algebra(f5, 3));
  t.expect(!d3.is_azumaya && !d3.reason.empty(), [] { return std::string("rank-3 algebra accepted"); });

  // E_ij (x) E_kl acts as c -> E_ij c E_kl, which sends E_jk to E_il.
  Matrix env = enveloping_matrix(matrix_algebra(f5, 2));
  for (std::size_t p = 0; p < 4; ++p) {
    for (std::size_t q = 0; q < 4; ++q) {
      const std::size_t i = p / 2, j = p % 2, k = q / 2, l = q % 2;
      for (std::size_t out = 0; out < 4; ++out) {
        for (std::size_t in = 0; in < 4; ++in) {
          bool one = out == i * 2 + l && in == j * 2 + k;
          t.expect(env(out * 4 + in, p * 4 + q) == (one ? f5.one() : f5.zero()),
                   [&] { return "enveloping column " + std::to_string(p * 4 + q) + " disagrees with E_il"; });
        }
      }
    }
  }
}

void chatelet_case(Tally& t, const std::string& label, const AlgebraPtr& a) {
  const Ring& ring = a->ring();
  auto found = find_right_ideal(a, 0);
  t.expect(found.has_value(), [&] { return label + ": no right ideal found"; });
  if (!found) return;
  AlgebraMap phi = split_by_ideal(a, *found);
  t.expect(hom_check(phi) && is_invertible(ring, phi.matrix), [&] { return label + ": splitting map not an isomorphism"; });
  auto ideals = enumerate_right_ideals(a, 2);
  t.expect(ideals.size() == 6, [&] { return label + ": expected 6 right ideals, got " + std::to_string(ideals.size()); });
  std::set<std::string> seen;
  for (const auto& j : ideals) seen.insert(key(ring, chatelet_point_map(phi, j).coords()));
  t.expect(seen.size() == ideals.size() && seen.size() == enumerate_points(ring, 1).size(),
           [&] { return label + ": point map is not a bijection onto P^1"; });
}

void chatelet_pipeline(Tally& t, std::uint64_t seed) {
  Ring f5 = ring_of("GF(5)");
  StructureAlgebra m2 = matrix_algebra(f5, 2);
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix p = random_invertible(f5, 4, rng);
    chatelet_case(t, "M_2 twisted #" + std::to_string(trial), share(change_basis(m2, p)));
  }
  chatelet_case(t, "Q(1,1)/GF(5)", share(quaternion_algebra(f5, f5.from_int(1), f5.from_int(1))));
  chatelet_case(t, "Q(2,3)/GF(5)", share(quaternion_algebra(f5, f5.from_int(2), f5.from_int(3))));
}

void conic_suite(Tally& t, std::uint64_t seed) {
  for (const char* spec : {"GF(3)", "GF(5)", "GF(7)"}) {
    Ring ring = ring_of(spec);
    const std::uint64_t q = ring.size();
    for (std::uint64_t ia = 1; ia < q; ++ia) {
      for (std::uint64_t ib = 1; ib < q; ++ib) {
        Element a = ring.element_at(ia), b = ring.element_at(ib);
        auto pts = conic_points(ring, a, b);
        auto label = [&] { return std::string(spec) + " C(" + ring.format(a) + "," + ring.format(b) + ")"; };
        t.expect(pts.size() == q + 1, [&] { return label() + " has " + std::to_string(pts.size()) + " points"; });
        for (const auto& x : pts) {
          ParamResult r = parametrize(ring, a, b, x, true, seed);
          t.expect(r.verification && r.verification->passed && r.verification->exhaustive,
                   [&] { return label() + " base " + point_text(ring, x) + ": " + r.verification->detail; });
        }
      }
    }
  }
  Ring qq = ring_of("QQ");
  ProjPoint base = make_point(qq, {qq.one(), qq.one(), qq.zero()});
  ParamResult r = parametrize(qq, qq.one(), qq.one(), base, true, seed, 100);
  t.expect(r.verification && r.verification->passed && r.verification->roundtrips >= 100,
           [&] { return "QQ C(1,1): " + r.verification->detail; });
}

void quaternion_suite(Tally& t) {
  std::vector<std::pair<Ring, std::vector<Element>>> cases;
  for (const char* spec : {"GF(5)", "GF(7)"}) {
    Ring ring = ring_of(spec);
    std::vector<Element> bs;
    for (std::uint64_t i = 1; i < ring.size(); ++i) bs.push_back(ring.element_at(i));
    cases.emplace_back(ring, std::move(bs));
  }
  Ring qq = ring_of("QQ");
  cases.emplace_back(qq, std::vector<Element>{qq.parse_element("1"), qq.parse_element("2"), qq.parse_element("1/2"),
                                              qq.parse_element("-3")});
  for (const auto& [ring, bs] : cases) {
    const Element u = ring.from_int(2), v = ring.from_int(3);
    for (const auto& b : bs) {
      auto label = [&, b = b] { return format_ring_spec(ring.spec()) + " b=" + ring.format(b); };
      AlgebraMap split = quaternion_split_iso(ring, b);
      t.expect(hom_check(split) && is_invertible(ring, split.matrix), [&] { return label() + ": split map fails"; });
      AlgebraMap rescale = quaternion_rescale_iso(ring, ring.one(), b, u, v);
      t.expect(hom_check(rescale) && is_invertible(ring, rescale.matrix), [&] { return label() + ": rescale map fails"; });
      AlgebraMap swap = quaternion_swap_iso(ring, ring.one(), b);
      t.expect(hom_check(swap) && is_invertible(ring, swap.matrix), [&] { return label() + ": swap map fails"; });
    }
  }
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

void negative_controls(Tally& t) {
  Ring qq = ring_of("QQ");
  AlgebraPtr h = share(quaternion_algebra(qq, qq.from_int(-1), qq.from_int(-1)));
  t.expect(!find_right_ideal(h, 10).has_value(), [] { return std::string("Q(-1,-1)/QQ reported split"); });

  Ring f3 = ring_of("GF(3)");
  AlgebraPtr m2 = share(matrix_algebra(f3, 2));
  // span{E00, E11} is not a right ideal, so it cannot come from a point.
  RightIdealRep bogus{m2, subspace_from_span(f3, 4, {unit_basis(f3, 2)[0].entries(), unit_basis(f3, 2)[3].entries()}),
                      false};
  t.expect(code_of([&] { delta_inv(bogus); }) == ErrorCode::NotInDeltaImage,
           [] { return std::string("delta_inv accepted a malformed subspace"); });

  Ring z9 = ring_of("Z/9");
  AlgebraPtr m2z = share(matrix_algebra(z9, 2));
  auto pts = enumerate_points(z9, 1);
  t.expect(pts.size() == 12, [] { return std::string("P^1(Z/9) should have 12 points"); });
  for (const auto& x : pts) {
    RightIdealRep d = delta(m2z, x);
    t.expect(right_ideal_check(m2z, d.space).ok() && delta_inv(d) == x,
             [&, x = x] { return "Z/9 delta roundtrip fails at " + point_text(z9, x); });
  }
  t.expect(!z9.is_unit(z9.from_int(3)) && z9.is_unit(z9.from_int(4)) && z9.is_unit(z9.from_int(8)),
           [] { return std::string("Z/9 unit test broken"); });
  // Unit pivoting: the leading entry is a non-unit but the matrix is invertible.
  Matrix m = Matrix::zeros(z9, 2, 2);
  m(0, 0) = z9.from_int(3);
  m(0, 1) = z9.one();
  m(1, 0) = z9.one();
  Matrix inv = invert_matrix(z9, m);
  t.expect(mat_mul(z9, m, inv) == Matrix::identity(z9, 2), [] { return std::string("Z/9 inverse wrong"); });
  t.expect(code_of([&] { subspace_from_span(z9, 2, {{z9.from_int(3), z9.zero()}}); }) == ErrorCode::NotFreeOverLocalRing,
           [] { return std::string("span{(3,0)} over Z/9 accepted as free"); });
  t.expect(find_right_ideal(m2z, 0).has_value(), [] { return std::string("no right ideal found in M_2(Z/9)"); });
}

struct Suite {
  const char* name;
  double budget;
  bool quick;
  std::function<void(Tally&, std::uint64_t)> body;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"delta bijection over GF(2), GF(3)", 1.0, true, [](Tally& t, std::uint64_t) { delta_bijection(t); }},
      {"delta equivariance", 2.0, true, equivariance},
      {"conjugator recovery", 2.0, true, conjugator_recovery},
      {"Skolem-Noether roundtrip", 2.0, true, skolem_noether},
      {"Azumaya suite", 3.0, true, [](Tally& t, std::uint64_t) { azumaya_suite(t); }},
      {"Chatelet pipeline", 10.0, false, chatelet_pipeline},
      {"conic parametrization", 10.0, false, conic_suite},
      {"quaternion split", 1.0, true, [](Tally& t, std::uint64_t) { quaternion_suite(t); }},
      {"negative controls", 2.0, true, [](Tally& t, std::uint64_t) { negative_controls(t); }},
  };
  return all;
}

}  // namespace

CriterionReport run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > static_cast<int>(suites().size())) fail(ErrorCode::Usage, "no suite " + std::to_string(id));
  const Suite& s = suites()[static_cast<std::size_t>(id - 1)];
  return timed(id, s.name, s.budget, [&](Tally& t) { s.body(t, seed); });
}

std::vector<CriterionReport> run_selftest(SelftestLevel level, std::uint64_t seed) {
  std::vector<CriterionReport> out;
  for (std::size_t i = 0; i < suites().size(); ++i) {
    if (level == SelftestLevel::Quick && !suites()[i].quick) continue;
    out.push_back(run_criterion(static_cast<int>(i + 1), seed));
  }
  return out;
}

CriterionReport check_table(const Ring& ring, std::size_t rank, const std::vector<Element>& sc, const Vector& unit) {
  return timed(0, "structure-constant table laws", 60.0, [&](Tally& t) {
    auto v = StructureAlgebra::validate(ring, rank, sc, unit);
    t.expect(!v.has_value(), [&] {
      const char* law = "shape";
      switch (v->law) {
        case TableViolation::Law::Shape: law = "shape"; break;
        case TableViolation::Law::Associativity: law = "associativity"; break;
        case TableViolation::Law::LeftUnit: law = "left unit"; break;
        case TableViolation::Law::RightUnit: law = "right unit"; break;
      }
      return std::string(law) + " violated at (i,j,k) = (" + std::to_string(v->i) + "," + std::to_string(v->j) + "," +
             std::to_string(v->k) + "): " + v->detail;
    });
  });
}

}  // namespace brauer
