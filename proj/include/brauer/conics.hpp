// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "brauer/projective.hpp"

namespace brauer {

/// Coordinate permutation used to move a base point into the x != 0 chart.
enum class ConicTransform { Identity, SwapXY, SwapXZ };

/// Applies the (involutive) permutation to a point of P^2.
ProjPoint apply_transform(const Ring& ring, ConicTransform t, const ProjPoint& x);
const char* transform_name(ConicTransform t);

/// Conic x^2 = a y^2 + b z^2 with the base point [1 : y0 : z0].
struct PointedConic {
  Element a, b;
  Element y0, z0;
  // The conic and point the caller started from.
  Element original_a, original_b;
  std::optional<ProjPoint> original_point;
  ConicTransform transform = ConicTransform::Identity;
};

bool on_conic(const Ring& ring, const Element& a, const Element& b, const ProjPoint& x);

/// First point in canonical order. Finite rings scan P^2 lexicographically,
/// `bound` capping the candidates tried (0 = no cap). Over QQ, integer
/// triples of height <= bound by increasing height, z slowest, each
/// coordinate in the order 0, 1, -1, 2, -2, ...
std::optional<ProjPoint> find_point(const Ring& ring, const Element& a, const Element& b, std::uint64_t bound);

/// All points of C(a,b) over a finite ring.
std::vector<ProjPoint> conic_points(const Ring& ring, const Element& a, const Element& b);

/// Points of C(a,b)(QQ) with a primitive integer representative of height
/// <= `height`, in find_point order.
std::vector<ProjPoint> rational_conic_points(const Ring& ring, const Element& a, const Element& b,
                                             std::uint64_t height);

/// Moves X into the x-unit chart: identity when x is a unit, otherwise
/// x<->y onto C(1/a, -b/a) or x<->z onto C(-a/b, 1/b).
PointedConic normalize_base_point(const Ring& ring, const Element& a, const Element& b, const ProjPoint& x);

/// [u:v] -> [a u^2 + b v^2 : y0(a u^2 - b v^2) + 2 b u v z0 : z0(a u^2 - b v^2) - 2 a u v y0]
ProjPoint psi(const Ring& ring, const PointedConic& pc, const ProjPoint& uv);

/// Inverse of psi, through whichever of x +/- (a y0 y + b z0 z) is a unit.
ProjPoint phi(const Ring& ring, const PointedConic& pc, const ProjPoint& x);

/// Maps P^1 <-> C(a,b) for the caller's conic, composing psi/phi with the
/// base-point transform.
class Parametrization {
 public:
  Parametrization(Ring ring, PointedConic pc) : ring_(std::move(ring)), pc_(std::move(pc)) {}

  const PointedConic& pointed() const { return pc_; }
  ProjPoint to_conic(const ProjPoint& uv) const;
  ProjPoint to_line(const ProjPoint& x) const;

 private:
  Ring ring_;
  PointedConic pc_;
};

struct ParamVerification {
  bool exhaustive = false;     // finite ring: both directions on every point
  std::size_t line_points = 0;
  std::size_t conic_points = 0;
  std::size_t roundtrips = 0;
  bool passed = false;
  std::string detail;  // first failure, if any
};

struct ParamResult {
  Parametrization map;
  std::optional<ParamVerification> verification;
};

/// Builds the parametrization; when `verify` is set, checks phi o psi = id
/// on all of P^1 and psi o phi = id on all conic points over finite rings,
/// or on `samples` psi-generated points over QQ.
ParamResult parametrize(const Ring& ring, const Element& a, const Element& b, const ProjPoint& x,
                        bool verify = true, std::uint64_t seed = 0, std::size_t samples = 25);

/// Random point of P^1 (small numerators and denominators over QQ).
ProjPoint random_line_point(const Ring& ring, std::mt19937_64& rng);

/// [x : u y : v z], taking C(u^2 a, v^2 b) onto C(a,b).
ProjPoint conic_rescale(const Ring& ring, const Element& a, const Element& b, const Element& u,
                        const Element& v, const ProjPoint& x);

}  // namespace brauer
