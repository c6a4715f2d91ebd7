// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brauer/linalg.hpp"
#include "brauer/rings.hpp"

namespace brauer {

/// First failing law of a structure-constant table.
struct TableViolation {
  enum class Law { Shape, Associativity, LeftUnit, RightUnit };
  Law law = Law::Shape;
  std::size_t i = 0, j = 0, k = 0;
  std::string detail;
};

/// Finite-rank unital associative algebra given by structure constants.
///
/// sc(i, j, k) is the coefficient of b_k in b_i * b_j. Instances built via
/// create() have had associativity and both unit laws checked on every
/// basis triple; nothing is assumed from the constructor that produced the
/// table.
class StructureAlgebra {
 public:
  static StructureAlgebra create(Ring ring, std::size_t rank, std::vector<Element> sc, Vector unit);

  /// Checks a table without building an algebra from it.
  static std::optional<TableViolation> validate(const Ring& ring, std::size_t rank,
                                                const std::vector<Element>& sc, const Vector& unit);

  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const Element& sc(std::size_t i, std::size_t j, std::size_t k) const {
    return sc_[(i * rank_ + j) * rank_ + k];
  }
  const std::vector<Element>& table() const { return sc_; }
  const Vector& unit() const { return unit_; }

  Vector basis(std::size_t i) const;
  Vector zero() const { return Vector(rank_, ring_.zero()); }
  Vector mul(const Vector& x, const Vector& y) const;
  Vector basis_product(std::size_t i, std::size_t j) const;

  bool operator==(const StructureAlgebra& other) const {
    return ring_ == other.ring_ && rank_ == other.rank_ && sc_ == other.sc_ && unit_ == other.unit_;
  }

 private:
  StructureAlgebra(Ring ring, std::size_t rank, std::vector<Element> sc, Vector unit);

  Ring ring_;
  std::size_t rank_;
  std::vector<Element> sc_;
  Vector unit_;
  // Nonzero entries of each basis product, for sparse multiplication.
  std::vector<std::vector<std::pair<std::uint32_t, Element>>> sparse_;
};

using AlgebraPtr = std::shared_ptr<const StructureAlgebra>;

inline AlgebraPtr share(StructureAlgebra a) {
  return std::make_shared<const StructureAlgebra>(std::move(a));
}

/// Linear map between algebras; matrix is target-rank x source-rank.
struct AlgebraMap {
  AlgebraPtr source;
  AlgebraPtr target;
  Matrix matrix;
  bool hom_verified = false;

  Vector apply(const Vector& x) const;
};

/// M_n(R) on the basis E_{i,j} in row-major order (index i*n + j).
StructureAlgebra matrix_algebra(const Ring& ring, std::size_t n);

/// Q(a,b) on the ordered basis (1, i, j, ij). Requires a, b and 2 to be units.
StructureAlgebra quaternion_algebra(const Ring& ring, const Element& a, const Element& b);

/// The commutative algebra R^m with orthogonal idempotent basis.
StructureAlgebra diagonal_algebra(const Ring& ring, std::size_t m);

StructureAlgebra opposite(const StructureAlgebra& a);

/// A (x) B on the basis b_i (x) c_j, index i * rank(B) + j.
StructureAlgebra tensor(const StructureAlgebra& a, const StructureAlgebra& b);

struct MultMatrices {
  Matrix left;   // y -> x*y
  Matrix right;  // y -> y*x
};

MultMatrices mult_matrices(const StructureAlgebra& a, const Vector& x);

/// Matrix of A (x) A^op -> End(A), a (x) b -> (c -> a c b). Column
/// i*m + j is the row-major flattening of L(b_i) * Rm(b_j).
Matrix enveloping_matrix(const StructureAlgebra& a);

struct AzumayaReport {
  bool is_azumaya = false;
  std::optional<std::size_t> n;
  std::size_t enveloping_rank = 0;
  std::string reason;
};

/// Free of rank (n+1)^2 and the enveloping map is invertible.
AzumayaReport azumaya_check(const StructureAlgebra& a);

/// Checks f(1) = 1 and f(b_i b_j) = f(b_i) f(b_j); records the outcome.
bool hom_check(AlgebraMap& f);

/// Q(1,b) -> M_2 sending i -> diag(1,-1), j -> [[0,b],[1,0]].
AlgebraMap quaternion_split_iso(const Ring& ring, const Element& b);

/// Q(u^2 a, v^2 b) -> Q(a,b) with i -> u i, j -> v j.
AlgebraMap quaternion_rescale_iso(const Ring& ring, const Element& a, const Element& b,
                                  const Element& u, const Element& v);

/// Q(a,b) -> Q(b,a) with i -> j, j -> i, ij -> -ij.
AlgebraMap quaternion_swap_iso(const Ring& ring, const Element& a, const Element& b);

/// Re-expresses the multiplication of A in the basis given by the columns
/// of p. The matrix p itself is then an isomorphism from the result to A.
StructureAlgebra change_basis(const StructureAlgebra& a, const Matrix& p);

/// Composition g o f; hom_verified is left unset.
AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f);

}  // namespace brauer
