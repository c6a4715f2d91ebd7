// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include "brauer/severi_brauer.hpp"

#include <cmath>
#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "brauer/error.hpp"

namespace brauer {

namespace {

Matrix unit_matrix(const Ring& ring, std::size_t n, std::size_t i, std::size_t j) {
  Matrix e = Matrix::zeros(ring, n, n);
  e(i, j) = ring.one();
  return e;
}

// Columns of the left-multiplication matrix of x span x*A.
Matrix left_mult(const StructureAlgebra& a, const Vector& x) {
  Matrix l = Matrix::zeros(a.ring(), a.rank(), a.rank());
  for (std::size_t j = 0; j < a.rank(); ++j) l.set_column(j, a.mul(x, a.basis(j)));
  return l;
}

std::size_t azumaya_degree(const StructureAlgebra& a) {
  AzumayaReport rep = azumaya_check(a);
  if (!rep.is_azumaya) fail(ErrorCode::NotAzumaya, rep.reason);
  return *rep.n + 1;
}

// Tries x*A as a candidate ideal.
std::optional<RightIdealRep> principal_candidate(const AlgebraPtr& algebra, const Vector& x, std::size_t dim) {
  Subspace s;
  try {
    s = subspace_from_matrix(algebra->ring(), left_mult(*algebra, x));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotFreeOverLocalRing) return std::nullopt;
    throw;
  }
  if (s.dim() != dim) return std::nullopt;
  auto check = right_ideal_check(algebra, s);
  return check.ideal;
}

constexpr std::int64_t kFilterPrime = 2147483647;

std::int64_t mulmod(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % kFilterPrime);
}

std::int64_t invmod(std::int64_t x) {
  std::int64_t r = 1, e = kFilterPrime - 2;
  while (e) {
    if (e & 1) r = mulmod(r, x);
    x = mulmod(x, x);
    e >>= 1;
  }
  return r;
}

// Structure constants reduced mod a large prime, used to discard units
// quickly in the rational search: if L(x) has full rank mod p it has full
// rank over QQ, so x is a unit and xA = A. Empty when some denominator is
// divisible by p.
std::vector<std::int64_t> table_mod_prime(const StructureAlgebra& a) {
  std::vector<std::int64_t> out;
  out.reserve(a.table().size());
  const mpz_class p(kFilterPrime);
  for (const auto& e : a.table()) {
    const mpq_class& q = e.rational();
    mpz_class den = q.get_den() % p;
    if (den == 0) return {};
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class v = (q.get_num() * inv) % p;
    if (v < 0) v += p;
    out.push_back(v.get_si());
  }
  return out;
}

bool left_mult_full_rank_mod_prime(const std::vector<std::int64_t>& sc, std::size_t m, const std::vector<long>& x) {
  std::vector<std::int64_t> l(m * m, 0);  // l[k*m + j] = sum_i x_i sc(i,j,k)
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i] == 0) continue;
    std::int64_t xi = x[i] < 0 ? x[i] + kFilterPrime : x[i];
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        std::int64_t c = sc[(i * m + j) * m + k];
        if (c) l[k * m + j] = (l[k * m + j] + mulmod(xi, c)) % kFilterPrime;
      }
    }
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t pr = m;
    for (std::size_t r = c; r < m; ++r) {
      if (l[r * m + c] != 0) {
        pr = r;
        break;
      }
    }
    if (pr == m) return false;
    for (std::size_t j = 0; j < m; ++j) std::swap(l[pr * m + j], l[c * m + j]);
    std::int64_t inv = invmod(l[c * m + c]);
    for (std::size_t r = c + 1; r < m; ++r) {
      if (l[r * m + c] == 0) continue;
      std::int64_t f = mulmod(l[r * m + c], inv);
      for (std::size_t j = c; j < m; ++j) {
        l[r * m + j] = (l[r * m + j] - mulmod(f, l[c * m + j])) % kFilterPrime;
        if (l[r * m + j] < 0) l[r * m + j] += kFilterPrime;
      }
    }
  }
  return true;
}

// Mixed-radix increment, last digit fastest; false after wrapping around.
bool advance_odometer(std::vector<std::size_t>& idx, std::size_t base) {
  for (std::size_t p = idx.size(); p > 0; --p) {
    if (++idx[p - 1] < base) return true;
    idx[p - 1] = 0;
  }
  return false;
}

}  // namespace

std::size_t matrix_algebra_size(const StructureAlgebra& a) {
  auto k = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(a.rank()))));
  if (k * k != a.rank() || !(matrix_algebra(a.ring(), k) == a)) {
    fail(ErrorCode::DimensionMismatch, "algebra is not a standard matrix algebra");
  }
  return k;
}

RightIdealRep delta(const AlgebraPtr& mat_alg, const ProjPoint& x) {
  std::size_t n1 = x.coords().size();
  if (mat_alg->rank() != n1 * n1) fail(ErrorCode::DimensionMismatch, "point dimension does not match M_{n+1}");
  const Ring& ring = mat_alg->ring();
  std::vector<Vector> gens;
  for (std::size_t c = 0; c < n1; ++c) {
    // theta(u_c): row i is x_i u_c^T, i.e. column c equals X.
    Vector v(n1 * n1, ring.zero());
    for (std::size_t i = 0; i < n1; ++i) v[i * n1 + c] = x.coords()[i];
    gens.push_back(std::move(v));
  }
  Subspace s = subspace_from_span(ring, n1 * n1, gens);
  auto check = right_ideal_check(mat_alg, s);
  if (!check.ok()) fail(ErrorCode::Internal, "delta produced a subspace that is not a right ideal");
  if (s.dim() != n1) fail(ErrorCode::Internal, "delta produced an ideal of the wrong dimension");
  return *check.ideal;
}

RightIdealRep delta(const Ring& ring, const ProjPoint& x) {
  return delta(share(matrix_algebra(ring, x.coords().size())), x);
}

ProjPoint delta_inv(const RightIdealRep& ideal) {
  const StructureAlgebra& a = *ideal.algebra;
  const Ring& ring = a.ring();
  std::size_t n1 = matrix_algebra_size(a);
  if (ideal.space.dim() != n1) {
    fail(ErrorCode::WrongIdealRank, "ideal has dimension " + std::to_string(ideal.space.dim()) +
                                        ", expected " + std::to_string(n1));
  }
  Matrix first = unflatten(ideal.space.basis.column(0), n1, n1);
  for (std::size_t c = 0; c < n1; ++c) {
    Vector col = first.column(c);
    bool has_unit = false;
    for (const auto& e : col) has_unit = has_unit || ring.is_unit(e);
    if (!has_unit) continue;
    ProjPoint x = make_point(ring, col);
    if (!(delta(ideal.algebra, x).space == ideal.space)) {
      fail(ErrorCode::NotInDeltaImage, "subspace is not delta of the point read from its first basis matrix");
    }
    return x;
  }
  fail(ErrorCode::NotInDeltaImage, "first basis matrix has no column containing a unit");
}

RightIdealRep conjugate_ideal(const Matrix& p, const RightIdealRep& ideal) {
  const Ring& ring = ideal.algebra->ring();
  std::size_t n1 = matrix_algebra_size(*ideal.algebra);
  if (p.rows() != n1 || !p.is_square()) fail(ErrorCode::DimensionMismatch, "conjugator size mismatch");
  Matrix pinv = invert_matrix(ring, p);
  std::vector<Vector> gens;
  for (std::size_t t = 0; t < ideal.space.dim(); ++t) {
    Matrix m = unflatten(ideal.space.basis.column(t), n1, n1);
    gens.push_back(flatten(mat_mul(ring, mat_mul(ring, p, m), pinv)));
  }
  Subspace s = subspace_from_span(ring, n1 * n1, gens);
  auto check = right_ideal_check(ideal.algebra, s);
  if (!check.ok()) fail(ErrorCode::Internal, "conjugate of a right ideal is not a right ideal");
  return *check.ideal;
}

Matrix matrix_units_conjugator(const Ring& ring, const std::vector<Matrix>& units) {
  auto n1 = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(units.size()))));
  if (n1 == 0 || n1 * n1 != units.size()) fail(ErrorCode::BadRelations, "need (n+1)^2 matrix units");
  for (const auto& e : units) {
    if (e.rows() != n1 || e.cols() != n1) fail(ErrorCode::BadRelations, "matrix units must be (n+1)x(n+1)");
  }
  auto at = [&](std::size_t i, std::size_t j) -> const Matrix& { return units[i * n1 + j]; };
  const Matrix zero = Matrix::zeros(ring, n1, n1);
  Matrix sum = zero;
  for (std::size_t i = 0; i < n1; ++i) sum = mat_add(ring, sum, at(i, i));
  if (!(sum == Matrix::identity(ring, n1))) fail(ErrorCode::BadRelations, "diagonal units do not sum to 1");
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n1; ++j) {
      for (std::size_t k = 0; k < n1; ++k) {
        for (std::size_t l = 0; l < n1; ++l) {
          const Matrix& expect = (j == k) ? at(i, l) : zero;
          if (!(mat_mul(ring, at(i, j), at(k, l)) == expect)) {
            fail(ErrorCode::BadRelations, "e_" + std::to_string(i) + std::to_string(j) + " e_" +
                                              std::to_string(k) + std::to_string(l) + " violates the unit relations");
          }
        }
      }
    }
  }
  std::vector<Vector> image = idempotent_image_basis(ring, at(0, 0));
  if (image.size() != 1) fail(ErrorCode::BadRelations, "image of e_00 is not free of rank 1");
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n1; ++i) cols.push_back(mat_vec(ring, at(i, 0), image[0]));
  Matrix p = Matrix::from_columns(ring, n1, cols);
  Matrix pinv;
  try {
    pinv = invert_matrix(ring, p);
  } catch (const Error&) {
    fail(ErrorCode::Internal, "conjugator built from matrix units is not invertible");
  }
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n1; ++j) {
      if (!(mat_mul(ring, mat_mul(ring, p, unit_matrix(ring, n1, i, j)), pinv) == at(i, j))) {
        fail(ErrorCode::Internal, "recovered conjugator fails a conjugation identity");
      }
    }
  }
  return p;
}

AlgebraMap inner_automorphism(const Ring& ring, std::size_t n, const Matrix& p) {
  std::size_t n1 = n + 1;
  if (p.rows() != n1 || !p.is_square()) fail(ErrorCode::DimensionMismatch, "conjugator size mismatch");
  Matrix pinv = invert_matrix(ring, p);
  auto alg = share(matrix_algebra(ring, n1));
  Matrix m = Matrix::zeros(ring, n1 * n1, n1 * n1);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n1; ++j) {
      m.set_column(i * n1 + j, flatten(mat_mul(ring, mat_mul(ring, p, unit_matrix(ring, n1, i, j)), pinv)));
    }
  }
  AlgebraMap f{alg, alg, std::move(m), false};
  if (!hom_check(f)) fail(ErrorCode::Internal, "conjugation failed its homomorphism check");
  return f;
}

AlgebraMap transpose_map(const Ring& ring, std::size_t n) {
  std::size_t n1 = n + 1;
  auto alg = share(matrix_algebra(ring, n1));
  Matrix m = Matrix::zeros(ring, n1 * n1, n1 * n1);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n1; ++j) m(j * n1 + i, i * n1 + j) = ring.one();
  }
  return AlgebraMap{alg, alg, std::move(m), false};
}

Matrix automorphism_to_pgl(const Ring& ring, std::size_t n, const AlgebraMap& sigma) {
  std::size_t n1 = n + 1;
  if (sigma.matrix.rows() != n1 * n1 || sigma.matrix.cols() != n1 * n1) {
    fail(ErrorCode::DimensionMismatch, "automorphism matrix must be (n+1)^2 square");
  }
  AlgebraMap f = sigma;
  if (!hom_check(f)) fail(ErrorCode::NotAutomorphism, "map is not multiplicative or not unital");
  if (!is_invertible(ring, f.matrix)) fail(ErrorCode::NotAutomorphism, "map is not bijective");
  std::vector<Matrix> units;
  for (std::size_t c = 0; c < n1 * n1; ++c) units.push_back(unflatten(f.matrix.column(c), n1, n1));
  Matrix p = matrix_units_conjugator(ring, units);
  return normalize_projective(ring, p);
}

AlgebraMap split_by_ideal(const AlgebraPtr& algebra, const RightIdealRep& ideal) {
  const StructureAlgebra& a = *algebra;
  const Ring& ring = a.ring();
  std::size_t n1 = azumaya_degree(a);
  if (ideal.space.ambient != a.rank()) fail(ErrorCode::DimensionMismatch, "ideal does not live in this algebra");
  if (!right_ideal_check(algebra, ideal.space).ok()) fail(ErrorCode::NotRightIdeal, "subspace is not a right ideal");
  if (ideal.space.dim() != n1) {
    fail(ErrorCode::WrongIdealRank, "ideal has dimension " + std::to_string(ideal.space.dim()) +
                                        ", expected " + std::to_string(n1));
  }
  Matrix phi = Matrix::zeros(ring, n1 * n1, a.rank());
  for (std::size_t s = 0; s < a.rank(); ++s) {
    // Column t of r holds the I-coordinates of iota_t * b_s.
    Matrix r = Matrix::zeros(ring, n1, n1);
    for (std::size_t t = 0; t < n1; ++t) {
      Vector prod = a.mul(ideal.space.basis.column(t), a.basis(s));
      auto coords = subspace_coordinates(ring, ideal.space, prod);
      if (!coords) fail(ErrorCode::NotRightIdeal, "product left the ideal");
      r.set_column(t, *coords);
    }
    phi.set_column(s, flatten(transpose(r)));
  }
  AlgebraMap f{algebra, share(matrix_algebra(ring, n1)), std::move(phi), false};
  if (!hom_check(f)) fail(ErrorCode::Internal, "splitting map failed its homomorphism check");
  if (!is_invertible(ring, f.matrix)) fail(ErrorCode::NotFaithful, "splitting map is not bijective");
  return f;
}

ProjPoint chatelet_point_map(const AlgebraMap& phi, const RightIdealRep& ideal) {
  const Ring& ring = phi.source->ring();
  if (ideal.space.ambient != phi.source->rank()) fail(ErrorCode::DimensionMismatch, "ideal does not live in the source algebra");
  if (!ideal.verified && !right_ideal_check(phi.source, ideal.space).ok()) {
    fail(ErrorCode::NotRightIdeal, "subspace is not a right ideal");
  }
  std::vector<Vector> images;
  for (std::size_t t = 0; t < ideal.space.dim(); ++t) images.push_back(phi.apply(ideal.space.basis.column(t)));
  Subspace s = subspace_from_span(ring, phi.target->rank(), images);
  return delta_inv(RightIdealRep{phi.target, s, false});
}

std::optional<RightIdealRep> find_right_ideal(const AlgebraPtr& algebra, std::uint64_t bound) {
  const StructureAlgebra& a = *algebra;
  const Ring& ring = a.ring();
  std::size_t n1 = azumaya_degree(a);
  std::size_t m = a.rank();
  std::optional<RightIdealRep> found;

  if (ring.is_finite()) {
    std::vector<Element> elems = ring.enumerate();
    std::uint64_t tried = 0;
    Vector cur(m);
    // Lexicographic walk over normalized coordinate vectors (first unit = 1,
    // earlier entries non-units), i.e. nonzero elements up to scalar.
    std::function<bool(std::size_t, bool)> rec = [&](std::size_t pos, bool pivoted) -> bool {
      if (pos == m) {
        if (!pivoted) return false;
        if (bound != 0 && tried >= bound) return true;
        ++tried;
        found = principal_candidate(algebra, cur, n1);
        return found.has_value();
      }
      for (const auto& e : elems) {
        if (!pivoted && ring.is_unit(e) && !ring.is_one(e)) continue;
        cur[pos] = e;
        if (rec(pos + 1, pivoted || ring.is_one(e))) return true;
      }
      return false;
    };
    rec(0, false);
    return found;
  }

  // Rationals: primitive integer vectors (first nonzero entry positive) by
  // increasing height; integers ordered 0, 1, -1, 2, -2, ...
  const std::vector<std::int64_t> sc_mod = table_mod_prime(a);
  auto height_bound = static_cast<long>(bound);
  std::vector<long> x(m);
  for (long h = 1; h <= height_bound; ++h) {
    std::vector<long> values{0};
    for (long v = 1; v <= h; ++v) {
      values.push_back(v);
      values.push_back(-v);
    }
    std::vector<std::size_t> idx(m, 0);
    for (;;) {
      long maxabs = 0, g = 0;
      long first = 0;
      for (std::size_t i = 0; i < m; ++i) {
        x[i] = values[idx[i]];
        maxabs = std::max(maxabs, std::labs(x[i]));
        g = std::gcd(g, std::labs(x[i]));
        if (first == 0) first = x[i];
      }
      if (maxabs == h && g == 1 && first > 0) {
        bool unit = m != n1 && !sc_mod.empty() && left_mult_full_rank_mod_prime(sc_mod, m, x);
        if (!unit) {
          Vector v(m);
          for (std::size_t i = 0; i < m; ++i) v[i] = ring.from_int(x[i]);
          if (auto r = principal_candidate(algebra, v, n1)) return r;
        }
      }
      if (!advance_odometer(idx, values.size())) break;
    }
  }
  return std::nullopt;
}

std::vector<RightIdealRep> enumerate_right_ideals(const AlgebraPtr& algebra, std::size_t dim) {
  std::vector<RightIdealRep> out;
  for (const auto& s : enumerate_subspaces(algebra->ring(), algebra->rank(), dim)) {
    auto check = right_ideal_check(algebra, s);
    if (check.ok()) out.push_back(std::move(*check.ideal));
  }
  return out;
}

}  // namespace brauer
