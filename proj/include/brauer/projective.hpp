// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "brauer/algebras.hpp"
#include "brauer/linalg.hpp"

namespace brauer {

/// Point of P^n, normalized so its first unit coordinate equals 1.
class ProjPoint {
 public:
  const Vector& coords() const { return coords_; }
  std::size_t dim() const { return coords_.size() - 1; }
  /// Index of the first unit coordinate (which equals 1).
  std::size_t pivot() const { return pivot_; }

  bool operator==(const ProjPoint& other) const { return coords_ == other.coords_; }

 private:
  friend ProjPoint make_point(const Ring& ring, Vector raw);
  ProjPoint(Vector coords, std::size_t pivot) : coords_(std::move(coords)), pivot_(pivot) {}

  Vector coords_;
  std::size_t pivot_ = 0;
};

ProjPoint make_point(const Ring& ring, Vector raw);

/// Every point of P^n over a finite ring: first unit coordinate 1, earlier
/// coordinates non-units. Lexicographic in the canonical element order.
std::vector<ProjPoint> enumerate_points(const Ring& ring, std::size_t n);

/// Normalized P * X.
ProjPoint pgl_apply(const Ring& ring, const Matrix& p, const ProjPoint& x);

/// Free direct summand of R^N stored by its canonical echelon basis.
struct Subspace {
  std::size_t ambient = 0;
  Matrix basis;  // ambient x dim, reduced column echelon form
  std::vector<std::size_t> pivots;

  std::size_t dim() const { return basis.cols(); }
  bool operator==(const Subspace& other) const {
    return ambient == other.ambient && basis == other.basis;
  }
};

Subspace subspace_from_span(const Ring& ring, std::size_t ambient, const std::vector<Vector>& vectors);
Subspace subspace_from_matrix(const Ring& ring, const Matrix& columns);

/// Coordinates of v in the echelon basis, or empty when v is not in S.
std::optional<Vector> subspace_coordinates(const Ring& ring, const Subspace& s, const Vector& v);
bool subspace_contains(const Ring& ring, const Subspace& s, const Vector& v);

/// Pivot-row set: the first k rows whose minor is a unit.
std::vector<std::size_t> chart_of(const Subspace& s);

/// Gaussian binomial [N choose k]_q.
std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t k);

/// Every k-dimensional subspace of F_q^N, chart by chart.
std::vector<Subspace> enumerate_subspaces(const Ring& ring, std::size_t ambient, std::size_t k);

/// Subspace of an algebra that has been checked to be a right ideal.
struct RightIdealRep {
  AlgebraPtr algebra;
  Subspace space;
  bool verified = false;
};

struct RightIdealFailure {
  std::size_t ideal_basis_index = 0;
  std::size_t algebra_basis_index = 0;
  Vector product;
};

struct RightIdealCheck {
  std::optional<RightIdealRep> ideal;
  std::optional<RightIdealFailure> failure;
  bool ok() const { return ideal.has_value(); }
};

/// Verified iff every basis column times every algebra basis element stays
/// in the subspace.
RightIdealCheck right_ideal_check(const AlgebraPtr& algebra, const Subspace& s);

}  // namespace brauer
