// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "brauer/algebras.hpp"
#include "brauer/projective.hpp"

namespace brauer {

/// Size k of a matrix algebra M_k, checked structurally against the
/// standard table. Throws DimensionMismatch for anything else.
std::size_t matrix_algebra_size(const StructureAlgebra& a);

/// delta(X) = { M : x_i M_j = x_j M_i }, spanned by the matrices whose
/// c-th column is X. `mat_alg` must be M_{n+1} over the point's ring.
RightIdealRep delta(const AlgebraPtr& mat_alg, const ProjPoint& x);
RightIdealRep delta(const Ring& ring, const ProjPoint& x);

/// Reads a point off the first basis matrix (its first column holding a
/// unit) and checks delta of that point reproduces the ideal.
ProjPoint delta_inv(const RightIdealRep& ideal);

/// { P M P^-1 : M in I } in canonical form, re-verified as a right ideal.
RightIdealRep conjugate_ideal(const Matrix& p, const RightIdealRep& ideal);

/// Given a fundamental system of matrix units e[i*(n+1)+j], returns P with
/// e_{i,j} = P E_{i,j} P^-1: v_0 generates im(e_{0,0}), v_i = e_{i,0} v_0,
/// and P has columns v_0..v_n.
Matrix matrix_units_conjugator(const Ring& ring, const std::vector<Matrix>& units);

/// alpha(P): M -> P M P^-1 on M_{n+1}.
AlgebraMap inner_automorphism(const Ring& ring, std::size_t n, const Matrix& p);

/// M -> M^T on M_{n+1}; an anti-automorphism, used as a negative control.
AlgebraMap transpose_map(const Ring& ring, std::size_t n);

/// Inverse of alpha: P (normalized in PGL) with sigma(M) = P M P^-1.
Matrix automorphism_to_pgl(const Ring& ring, std::size_t n, const AlgebraMap& sigma);

/// Phi: A -> M_{n+1}, a -> transpose of the matrix of (c -> c a) on I.
AlgebraMap split_by_ideal(const AlgebraPtr& algebra, const RightIdealRep& ideal);

/// delta_inv of Phi(J).
ProjPoint chatelet_point_map(const AlgebraMap& phi, const RightIdealRep& ideal);

/// Search for a rank-(n+1) right ideal of the form aA. Finite rings walk the
/// nonzero elements up to scalar in canonical order; `bound` caps the number
/// of candidates (0 = no cap). Over QQ `bound` is the coordinate height.
/// An empty result means "unknown within budget".
std::optional<RightIdealRep> find_right_ideal(const AlgebraPtr& algebra, std::uint64_t bound);

/// Every verified right ideal of dimension `dim` (finite fields only).
std::vector<RightIdealRep> enumerate_right_ideals(const AlgebraPtr& algebra, std::size_t dim);

}  // namespace brauer
