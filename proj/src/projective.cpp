// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include "brauer/projective.hpp"

#include <functional>
#include <limits>
#include <string>

#include "brauer/error.hpp"

namespace brauer {

namespace {

constexpr std::uint64_t kMaxSubspaces = 1'000'000;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

void require_finite_field(const Ring& ring, const char* what) {
  if (!ring.is_finite()) fail(ErrorCode::InfiniteRing, std::string(what) + " needs a finite ring");
  if (!ring.is_field()) fail(ErrorCode::NotAField, std::string(what) + " needs a finite field");
}

}  // namespace

ProjPoint make_point(const Ring& ring, Vector raw) {
  if (raw.empty()) fail(ErrorCode::DimensionMismatch, "a projective point needs at least one coordinate");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!ring.is_unit(raw[i])) continue;
    Element inv = ring.inverse(raw[i]);
    for (auto& c : raw) c = ring.mul(c, inv);
    return ProjPoint(std::move(raw), i);
  }
  fail(ErrorCode::NoUnitCoordinate, "no coordinate is a unit");
}

std::vector<ProjPoint> enumerate_points(const Ring& ring, std::size_t n) {
  if (!ring.is_finite()) fail(ErrorCode::InfiniteRing, "cannot enumerate P^n over QQ");
  std::vector<Element> elems = ring.enumerate();
  std::vector<Element> nonunits;
  for (const auto& e : elems) {
    if (!ring.is_unit(e)) nonunits.push_back(e);
  }
  std::vector<ProjPoint> out;
  Vector cur(n + 1);
  std::function<void(std::size_t, bool)> rec = [&](std::size_t pos, bool pivoted) {
    if (pos == n + 1) {
      if (pivoted) out.push_back(make_point(ring, cur));
      return;
    }
    if (pivoted) {
      for (const auto& e : elems) {
        cur[pos] = e;
        rec(pos + 1, true);
      }
      return;
    }
    // Before the pivot only non-units may appear; the pivot itself is 1.
    // Walk the canonical order so the output stays lexicographic.
    for (const auto& e : elems) {
      if (ring.is_unit(e) && !ring.is_one(e)) continue;
      cur[pos] = e;
      rec(pos + 1, ring.is_one(e));
    }
  };
  rec(0, false);
  return out;
}

ProjPoint pgl_apply(const Ring& ring, const Matrix& p, const ProjPoint& x) {
  if (p.rows() != x.coords().size() || !p.is_square()) {
    fail(ErrorCode::DimensionMismatch, "homography size does not match the point");
  }
  if (!is_invertible(ring, p)) fail(ErrorCode::NotInvertible, "homography is not invertible");
  return make_point(ring, mat_vec(ring, p, x.coords()));
}

Subspace subspace_from_matrix(const Ring& ring, const Matrix& columns) {
  Echelon ech = reduced_echelon(ring, columns);
  std::size_t k = ech.pivots.size();
  for (std::size_t c = k; c < columns.cols(); ++c) {
    if (!is_zero_vector(ring, ech.form.column(c))) {
      fail(ErrorCode::NotFreeOverLocalRing, "span has no unit-pivot basis");
    }
  }
  Subspace s;
  s.ambient = columns.rows();
  s.basis = Matrix::zeros(ring, columns.rows(), k);
  for (std::size_t c = 0; c < k; ++c) s.basis.set_column(c, ech.form.column(c));
  s.pivots = std::move(ech.pivots);
  return s;
}

Subspace subspace_from_span(const Ring& ring, std::size_t ambient, const std::vector<Vector>& vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient) fail(ErrorCode::DimensionMismatch, "vector length differs from ambient dimension");
  }
  return subspace_from_matrix(ring, Matrix::from_columns(ring, ambient, vectors));
}

std::optional<Vector> subspace_coordinates(const Ring& ring, const Subspace& s, const Vector& v) {
  if (v.size() != s.ambient) fail(ErrorCode::DimensionMismatch, "vector length differs from ambient dimension");
  Vector x(s.dim());
  Vector rest = v;
  for (std::size_t j = 0; j < s.dim(); ++j) {
    x[j] = v[s.pivots[j]];
    if (ring.is_zero(x[j])) continue;
    for (std::size_t r = 0; r < s.ambient; ++r) {
      rest[r] = ring.sub(rest[r], ring.mul(x[j], s.basis(r, j)));
    }
  }
  if (!is_zero_vector(ring, rest)) return std::nullopt;
  return x;
}

bool subspace_contains(const Ring& ring, const Subspace& s, const Vector& v) {
  return subspace_coordinates(ring, s, v).has_value();
}

std::vector<std::size_t> chart_of(const Subspace& s) { return s.pivots; }

std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t k) {
  if (k > n) return 0;
  // [n,k] = [n-1,k-1] + q^k [n-1,k]
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = std::min(i, k); j >= 1; --j) {
      std::uint64_t qj = 1;
      for (std::size_t t = 0; t < j; ++t) qj = sat_mul(qj, q);
      row[j] = sat_add(row[j - 1], sat_mul(qj, row[j]));
    }
  }
  return row[k];
}

std::vector<Subspace> enumerate_subspaces(const Ring& ring, std::size_t ambient, std::size_t k) {
  require_finite_field(ring, "subspace enumeration");
  if (k > ambient) return {};
  std::uint64_t total = gaussian_binomial(ring.size(), ambient, k);
  if (total > kMaxSubspaces) {
    fail(ErrorCode::TooLarge, "Grassmannian has " + std::to_string(total) + " points (limit 10^6)");
  }
  std::vector<Element> elems = ring.enumerate();
  std::vector<Subspace> out;
  out.reserve(total);

  std::vector<std::size_t> pivots(k);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t idx, std::size_t start) {
    if (idx == k) {
      std::vector<bool> is_pivot(ambient, false);
      for (auto r : pivots) is_pivot[r] = true;
      // Free cells: column j, rows below its pivot that are not pivot rows.
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t r = pivots[j] + 1; r < ambient; ++r) {
          if (!is_pivot[r]) free.emplace_back(r, j);
        }
      }
      Matrix basis = Matrix::zeros(ring, ambient, k);
      for (std::size_t j = 0; j < k; ++j) basis(pivots[j], j) = ring.one();
      std::vector<std::size_t> digits(free.size(), 0);
      for (;;) {
        for (std::size_t f = 0; f < free.size(); ++f) basis(free[f].first, free[f].second) = elems[digits[f]];
        out.push_back(Subspace{ambient, basis, pivots});
        std::size_t f = free.size();
        while (f > 0) {
          --f;
          if (++digits[f] < elems.size()) break;
          digits[f] = 0;
          if (f == 0) return;
        }
        if (free.empty()) return;
      }
    }
    for (std::size_t r = start; r + (k - idx) <= ambient; ++r) {
      pivots[idx] = r;
      choose(idx + 1, r + 1);
    }
  };
  choose(0, 0);
  return out;
}

RightIdealCheck right_ideal_check(const AlgebraPtr& algebra, const Subspace& s) {
  const StructureAlgebra& a = *algebra;
  if (s.ambient != a.rank()) fail(ErrorCode::DimensionMismatch, "subspace ambient differs from algebra rank");
  const Ring& ring = a.ring();
  RightIdealCheck out;
  for (std::size_t t = 0; t < s.dim(); ++t) {
    Vector iota = s.basis.column(t);
    for (std::size_t b = 0; b < a.rank(); ++b) {
      Vector prod = a.mul(iota, a.basis(b));
      if (!subspace_contains(ring, s, prod)) {
        out.failure = RightIdealFailure{t, b, std::move(prod)};
        return out;
      }
    }
  }
  out.ideal = RightIdealRep{algebra, s, true};
  return out;
}

}  // namespace brauer
