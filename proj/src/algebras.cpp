// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include "brauer/algebras.hpp"

#include <cmath>

#include "brauer/error.hpp"

namespace brauer {

namespace {

std::string law_name(TableViolation::Law law) {
  switch (law) {
    case TableViolation::Law::Shape: return "shape";
    case TableViolation::Law::Associativity: return "associativity";
    case TableViolation::Law::LeftUnit: return "left unit";
    case TableViolation::Law::RightUnit: return "right unit";
  }
  return {};
}

using Sparse = std::vector<std::vector<std::pair<std::uint32_t, Element>>>;

Sparse sparsify(const Ring& ring, std::size_t m, const std::vector<Element>& sc) {
  Sparse out(m * m);
  for (std::size_t ij = 0; ij < m * m; ++ij) {
    for (std::size_t k = 0; k < m; ++k) {
      const Element& c = sc[ij * m + k];
      if (!ring.is_zero(c)) out[ij].emplace_back(static_cast<std::uint32_t>(k), c);
    }
  }
  return out;
}

Vector sparse_mul(const Ring& ring, std::size_t m, const Sparse& sp, const Vector& x, const Vector& y) {
  Vector out(m, ring.zero());
  for (std::size_t i = 0; i < m; ++i) {
    if (ring.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (ring.is_zero(y[j])) continue;
      Element coef = ring.mul(x[i], y[j]);
      for (const auto& [k, c] : sp[i * m + j]) out[k] = ring.add(out[k], ring.mul(coef, c));
    }
  }
  return out;
}

Vector unit_vector(const Ring& ring, std::size_t m, std::size_t i) {
  Vector v(m, ring.zero());
  v[i] = ring.one();
  return v;
}

void require_units(const Ring& ring, std::initializer_list<std::pair<const char*, Element>> items) {
  for (const auto& [name, e] : items) {
    if (!ring.is_unit(e)) fail(ErrorCode::NotUnit, std::string(name) + " = " + ring.format(e) + " is not a unit");
  }
}

// Structure constants of Q(a,b) in the basis (1, i, j, ij).
std::vector<Element> quaternion_table(const Ring& ring, const Element& a, const Element& b) {
  const Element zero = ring.zero(), one = ring.one();
  const Element mone = ring.neg(one);
  const Element ab = ring.mul(a, b);
  std::vector<Element> sc(64, zero);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Element& v) { sc[(i * 4 + j) * 4 + k] = v; };
  for (std::size_t x = 0; x < 4; ++x) {
    set(0, x, x, one);
    set(x, 0, x, one);
  }
  set(1, 1, 0, a);            // i*i = a
  set(1, 2, 3, one);          // i*j = ij
  set(1, 3, 2, a);            // i*ij = a j
  set(2, 1, 3, mone);         // j*i = -ij
  set(2, 2, 0, b);            // j*j = b
  set(2, 3, 1, ring.neg(b));  // j*ij = -b i
  set(3, 1, 2, ring.neg(a));  // ij*i = -a j
  set(3, 2, 1, b);            // ij*j = b i
  set(3, 3, 0, ring.neg(ab)); // ij*ij = -ab
  return sc;
}

}  // namespace

StructureAlgebra::StructureAlgebra(Ring ring, std::size_t rank, std::vector<Element> sc, Vector unit)
    : ring_(std::move(ring)), rank_(rank), sc_(std::move(sc)), unit_(std::move(unit)) {
  sparse_ = sparsify(ring_, rank_, sc_);
}

std::optional<TableViolation> StructureAlgebra::validate(const Ring& ring, std::size_t m,
                                                         const std::vector<Element>& sc,
                                                         const Vector& unit) {
  if (m == 0 || sc.size() != m * m * m || unit.size() != m) {
    return TableViolation{TableViolation::Law::Shape, 0, 0, 0, "table must hold rank^3 entries and unit rank entries"};
  }
  for (const auto& e : sc) {
    if (!(ring.canonicalize(e) == e)) return TableViolation{TableViolation::Law::Shape, 0, 0, 0, "non-canonical coefficient"};
  }
  Sparse sp = sparsify(ring, m, sc);
  std::vector<Vector> products(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Vector v(m, ring.zero());
      for (const auto& [k, c] : sp[i * m + j]) v[k] = c;
      products[i * m + j] = std::move(v);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    Vector bi = unit_vector(ring, m, i);
    if (!(sparse_mul(ring, m, sp, unit, bi) == bi)) {
      return TableViolation{TableViolation::Law::LeftUnit, i, 0, 0, "1 * b_" + std::to_string(i) + " != b_" + std::to_string(i)};
    }
    if (!(sparse_mul(ring, m, sp, bi, unit) == bi)) {
      return TableViolation{TableViolation::Law::RightUnit, i, 0, 0, "b_" + std::to_string(i) + " * 1 != b_" + std::to_string(i)};
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        Vector lhs = sparse_mul(ring, m, sp, products[i * m + j], unit_vector(ring, m, k));
        Vector rhs = sparse_mul(ring, m, sp, unit_vector(ring, m, i), products[j * m + k]);
        if (!(lhs == rhs)) {
          return TableViolation{TableViolation::Law::Associativity, i, j, k,
                                "(b_" + std::to_string(i) + " b_" + std::to_string(j) + ") b_" + std::to_string(k) +
                                    " != b_" + std::to_string(i) + " (b_" + std::to_string(j) + " b_" + std::to_string(k) + ")"};
        }
      }
    }
  }
  return std::nullopt;
}

StructureAlgebra StructureAlgebra::create(Ring ring, std::size_t rank, std::vector<Element> sc, Vector unit) {
  if (auto v = validate(ring, rank, sc, unit)) {
    fail(ErrorCode::InvalidAlgebra, law_name(v->law) + " fails at (" + std::to_string(v->i) + "," +
                                        std::to_string(v->j) + "," + std::to_string(v->k) + "): " + v->detail);
  }
  return StructureAlgebra(std::move(ring), rank, std::move(sc), std::move(unit));
}

Vector StructureAlgebra::basis(std::size_t i) const { return unit_vector(ring_, rank_, i); }

Vector StructureAlgebra::mul(const Vector& x, const Vector& y) const {
  if (x.size() != rank_ || y.size() != rank_) fail(ErrorCode::DimensionMismatch, "coordinate length differs from algebra rank");
  return sparse_mul(ring_, rank_, sparse_, x, y);
}

Vector StructureAlgebra::basis_product(std::size_t i, std::size_t j) const {
  Vector v = zero();
  for (const auto& [k, c] : sparse_[i * rank_ + j]) v[k] = c;
  return v;
}

Vector AlgebraMap::apply(const Vector& x) const { return mat_vec(source->ring(), matrix, x); }

StructureAlgebra matrix_algebra(const Ring& ring, std::size_t n) {
  if (n == 0) fail(ErrorCode::DimensionMismatch, "matrix algebra needs n >= 1");
  std::size_t m = n * n;
  std::vector<Element> sc(m * m * m, ring.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        // E_{i,j} E_{j,l} = E_{i,l}
        sc[((i * n + j) * m + (j * n + l)) * m + (i * n + l)] = ring.one();
      }
    }
  }
  Vector unit(m, ring.zero());
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = ring.one();
  return StructureAlgebra::create(ring, m, std::move(sc), std::move(unit));
}

StructureAlgebra quaternion_algebra(const Ring& ring, const Element& a, const Element& b) {
  require_units(ring, {{"2", ring.from_int(2)}, {"a", a}, {"b", b}});
  Vector unit(4, ring.zero());
  unit[0] = ring.one();
  return StructureAlgebra::create(ring, 4, quaternion_table(ring, a, b), std::move(unit));
}

StructureAlgebra diagonal_algebra(const Ring& ring, std::size_t m) {
  std::vector<Element> sc(m * m * m, ring.zero());
  for (std::size_t i = 0; i < m; ++i) sc[(i * m + i) * m + i] = ring.one();
  return StructureAlgebra::create(ring, m, std::move(sc), Vector(m, ring.one()));
}

StructureAlgebra opposite(const StructureAlgebra& a) {
  std::size_t m = a.rank();
  std::vector<Element> sc(m * m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) sc[(i * m + j) * m + k] = a.sc(j, i, k);
    }
  }
  return StructureAlgebra::create(a.ring(), m, std::move(sc), a.unit());
}

StructureAlgebra tensor(const StructureAlgebra& a, const StructureAlgebra& b) {
  if (!(a.ring() == b.ring())) fail(ErrorCode::RingMismatch, "tensor factors live over different rings");
  const Ring& ring = a.ring();
  std::size_t ma = a.rank(), mb = b.rank(), m = ma * mb;
  std::vector<Element> sc(m * m * m, ring.zero());
  for (std::size_t i = 0; i < ma; ++i) {
    for (std::size_t k = 0; k < ma; ++k) {
      Vector ak = a.basis_product(i, k);
      for (std::size_t j = 0; j < mb; ++j) {
        for (std::size_t l = 0; l < mb; ++l) {
          Vector bl = b.basis_product(j, l);
          std::size_t row = ((i * mb + j) * m + (k * mb + l)) * m;
          for (std::size_t p = 0; p < ma; ++p) {
            if (ring.is_zero(ak[p])) continue;
            for (std::size_t q = 0; q < mb; ++q) {
              if (ring.is_zero(bl[q])) continue;
              sc[row + p * mb + q] = ring.mul(ak[p], bl[q]);
            }
          }
        }
      }
    }
  }
  Vector unit(m, ring.zero());
  for (std::size_t p = 0; p < ma; ++p) {
    for (std::size_t q = 0; q < mb; ++q) unit[p * mb + q] = ring.mul(a.unit()[p], b.unit()[q]);
  }
  return StructureAlgebra::create(ring, m, std::move(sc), std::move(unit));
}

MultMatrices mult_matrices(const StructureAlgebra& a, const Vector& x) {
  std::size_t m = a.rank();
  MultMatrices out{Matrix::zeros(a.ring(), m, m), Matrix::zeros(a.ring(), m, m)};
  for (std::size_t j = 0; j < m; ++j) {
    Vector bj = a.basis(j);
    out.left.set_column(j, a.mul(x, bj));
    out.right.set_column(j, a.mul(bj, x));
  }
  return out;
}

Matrix enveloping_matrix(const StructureAlgebra& a) {
  const Ring& ring = a.ring();
  std::size_t m = a.rank();
  Matrix env = Matrix::zeros(ring, m * m, m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t s = 0; s < m; ++s) {
      Vector left = a.basis_product(i, s);
      for (std::size_t j = 0; j < m; ++j) {
        // entry (r, s) of c -> b_i c b_j is the b_r coordinate of b_i b_s b_j
        Vector img = a.mul(left, a.basis(j));
        for (std::size_t r = 0; r < m; ++r) env(r * m + s, i * m + j) = img[r];
      }
    }
  }
  return env;
}

AzumayaReport azumaya_check(const StructureAlgebra& a) {
  AzumayaReport report;
  std::size_t m = a.rank();
  auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(m))));
  Matrix env = enveloping_matrix(a);
  report.enveloping_rank = rank(a.ring(), env);
  if (root * root != m) {
    report.reason = "rank " + std::to_string(m) + " is not a perfect square";
    return report;
  }
  if (report.enveloping_rank != m * m) {
    report.reason = "enveloping map not invertible (rank " + std::to_string(report.enveloping_rank) +
                    " < " + std::to_string(m * m) + ")";
    return report;
  }
  report.is_azumaya = true;
  report.n = root - 1;
  report.reason = "free of rank " + std::to_string(m) + " with invertible enveloping map";
  return report;
}

bool hom_check(AlgebraMap& f) {
  f.hom_verified = false;
  const StructureAlgebra& src = *f.source;
  const StructureAlgebra& tgt = *f.target;
  if (!(src.ring() == tgt.ring())) fail(ErrorCode::RingMismatch, "map between algebras over different rings");
  if (f.matrix.rows() != tgt.rank() || f.matrix.cols() != src.rank()) {
    fail(ErrorCode::DimensionMismatch, "map matrix does not match algebra ranks");
  }
  if (!(f.apply(src.unit()) == tgt.unit())) return false;
  std::vector<Vector> images;
  images.reserve(src.rank());
  for (std::size_t i = 0; i < src.rank(); ++i) images.push_back(f.matrix.column(i));
  for (std::size_t i = 0; i < src.rank(); ++i) {
    for (std::size_t j = 0; j < src.rank(); ++j) {
      if (!(f.apply(src.basis_product(i, j)) == tgt.mul(images[i], images[j]))) return false;
    }
  }
  f.hom_verified = true;
  return true;
}

AlgebraMap quaternion_split_iso(const Ring& ring, const Element& b) {
  require_units(ring, {{"2", ring.from_int(2)}, {"b", b}});
  auto source = share(quaternion_algebra(ring, ring.one(), b));
  auto target = share(matrix_algebra(ring, 2));
  const Element z = ring.zero(), o = ring.one(), mo = ring.neg(o);
  // Columns: images of 1, i, j, ij in coordinates (E00, E01, E10, E11).
  Matrix m = Matrix::from_columns(ring, 4, {{o, z, z, o}, {o, z, z, mo}, {z, b, o, z}, {z, b, mo, z}});
  AlgebraMap f{source, target, std::move(m), false};
  if (!hom_check(f)) fail(ErrorCode::Internal, "quaternion split map failed its homomorphism check");
  return f;
}

AlgebraMap quaternion_rescale_iso(const Ring& ring, const Element& a, const Element& b,
                                  const Element& u, const Element& v) {
  require_units(ring, {{"2", ring.from_int(2)}, {"a", a}, {"b", b}, {"u", u}, {"v", v}});
  auto target = share(quaternion_algebra(ring, a, b));
  auto source = share(quaternion_algebra(ring, ring.mul(ring.mul(u, u), a), ring.mul(ring.mul(v, v), b)));
  Matrix m = Matrix::zeros(ring, 4, 4);
  m(0, 0) = ring.one();
  m(1, 1) = u;
  m(2, 2) = v;
  m(3, 3) = ring.mul(u, v);
  AlgebraMap f{source, target, std::move(m), false};
  if (!hom_check(f)) fail(ErrorCode::Internal, "quaternion rescaling failed its homomorphism check");
  return f;
}

AlgebraMap quaternion_swap_iso(const Ring& ring, const Element& a, const Element& b) {
  auto source = share(quaternion_algebra(ring, a, b));
  auto target = share(quaternion_algebra(ring, b, a));
  Matrix m = Matrix::zeros(ring, 4, 4);
  m(0, 0) = ring.one();
  m(2, 1) = ring.one();
  m(1, 2) = ring.one();
  m(3, 3) = ring.neg(ring.one());
  AlgebraMap f{source, target, std::move(m), false};
  if (!hom_check(f)) fail(ErrorCode::Internal, "quaternion swap failed its homomorphism check");
  return f;
}

StructureAlgebra change_basis(const StructureAlgebra& a, const Matrix& p) {
  std::size_t m = a.rank();
  if (p.rows() != m || p.cols() != m) fail(ErrorCode::DimensionMismatch, "basis change must be rank x rank");
  const Ring& ring = a.ring();
  Matrix pinv = invert_matrix(ring, p);
  std::vector<Vector> cols(m);
  for (std::size_t j = 0; j < m; ++j) cols[j] = p.column(j);
  std::vector<Element> sc(m * m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Vector coords = mat_vec(ring, pinv, a.mul(cols[i], cols[j]));
      for (std::size_t k = 0; k < m; ++k) sc[(i * m + j) * m + k] = coords[k];
    }
  }
  return StructureAlgebra::create(ring, m, std::move(sc), mat_vec(ring, pinv, a.unit()));
}

AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f) {
  if (!(*f.target == *g.source)) fail(ErrorCode::DimensionMismatch, "maps are not composable");
  return AlgebraMap{f.source, g.target, mat_mul(f.source->ring(), g.matrix, f.matrix), false};
}

}  // namespace brauer
