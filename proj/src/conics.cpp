// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include "brauer/conics.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>
#include <utility>

#include "brauer/error.hpp"

namespace brauer {

namespace {

void require_units(const Ring& ring, const Element& a, const Element& b) {
  if (!ring.is_unit(a)) fail(ErrorCode::NotUnit, "conic coefficient a must be a unit");
  if (!ring.is_unit(b)) fail(ErrorCode::NotUnit, "conic coefficient b must be a unit");
}

void require_plane(const ProjPoint& x) {
  if (x.dim() != 2) fail(ErrorCode::DimensionMismatch, "conic points live in P^2");
}

void require_on_conic(const Ring& ring, const Element& a, const Element& b, const ProjPoint& x) {
  require_plane(x);
  if (!on_conic(ring, a, b, x)) fail(ErrorCode::NotOnConic, "point is not on x^2 = a y^2 + b z^2");
}

std::string format_point(const Ring& ring, const ProjPoint& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    if (i) s += ":";
    s += ring.format(x.coords()[i]);
  }
  return s + "]";
}

// 0, 1, -1, 2, -2, ...
std::int64_t zigzag(std::uint64_t i) {
  auto h = static_cast<std::int64_t>((i + 1) / 2);
  return i % 2 == 1 ? h : -h;
}

// Visits primitive integer triples of height 1..bound, z slowest; stops when
// visit returns true.
template <typename Visit>
void walk_integer_points(const Ring& ring, std::uint64_t bound, Visit visit) {
  for (std::uint64_t h = 1; h <= bound; ++h) {
    const std::uint64_t width = 2 * h + 1;
    for (std::uint64_t iz = 0; iz < width; ++iz) {
      for (std::uint64_t iy = 0; iy < width; ++iy) {
        for (std::uint64_t ix = 0; ix < width; ++ix) {
          std::int64_t x = zigzag(ix), y = zigzag(iy), z = zigzag(iz);
          auto hh = static_cast<std::int64_t>(h);
          if (std::llabs(x) != hh && std::llabs(y) != hh && std::llabs(z) != hh) continue;
          if (std::gcd(std::gcd(x, y), z) != 1) continue;
          Vector v{ring.from_int(x), ring.from_int(y), ring.from_int(z)};
          if (visit(make_point(ring, v))) return;
        }
      }
    }
  }
}

std::optional<ProjPoint> find_point_rational(const Ring& ring, const Element& a, const Element& b,
                                             std::uint64_t bound) {
  std::optional<ProjPoint> found;
  walk_integer_points(ring, bound, [&](ProjPoint p) {
    if (!on_conic(ring, a, b, p)) return false;
    found = std::move(p);
    return true;
  });
  return found;
}

// Lexicographic walk of P^2 that prunes non-normalized prefixes.
std::optional<ProjPoint> find_point_finite(const Ring& ring, const Element& a, const Element& b,
                                           std::uint64_t bound) {
  const std::uint64_t q = ring.size();
  std::uint64_t tried = 0;
  Vector cur(3);
  std::optional<ProjPoint> found;
  std::function<bool(std::size_t, bool)> rec = [&](std::size_t pos, bool pivoted) -> bool {
    if (pos == 3) {
      if (!pivoted) return false;
      if (bound != 0 && tried >= bound) return true;
      ++tried;
      ProjPoint p = make_point(ring, cur);
      if (on_conic(ring, a, b, p)) {
        found = std::move(p);
        return true;
      }
      return false;
    }
    for (std::uint64_t i = 0; i < q; ++i) {
      Element e = ring.element_at(i);
      if (!pivoted && ring.is_unit(e) && !ring.is_one(e)) continue;
      cur[pos] = e;
      if (rec(pos + 1, pivoted || ring.is_one(e))) return true;
    }
    return false;
  };
  rec(0, false);
  return found;
}

ProjPoint checked_point(const Ring& ring, Vector raw, const char* what) {
  for (const auto& c : raw) {
    if (ring.is_unit(c)) return make_point(ring, std::move(raw));
  }
  fail(ErrorCode::DegenerateOutput, std::string(what) + " produced no unit coordinate");
}

}  // namespace

ProjPoint apply_transform(const Ring& ring, ConicTransform t, const ProjPoint& x) {
  require_plane(x);
  Vector c = x.coords();
  switch (t) {
    case ConicTransform::Identity:
      return x;
    case ConicTransform::SwapXY:
      std::swap(c[0], c[1]);
      break;
    case ConicTransform::SwapXZ:
      std::swap(c[0], c[2]);
      break;
  }
  return make_point(ring, std::move(c));
}

const char* transform_name(ConicTransform t) {
  switch (t) {
    case ConicTransform::Identity: return "identity";
    case ConicTransform::SwapXY: return "swap_xy";
    case ConicTransform::SwapXZ: return "swap_xz";
  }
  return "?";
}

bool on_conic(const Ring& ring, const Element& a, const Element& b, const ProjPoint& x) {
  if (x.dim() != 2) return false;
  const auto& c = x.coords();
  Element lhs = ring.mul(c[0], c[0]);
  Element rhs = ring.add(ring.mul(a, ring.mul(c[1], c[1])), ring.mul(b, ring.mul(c[2], c[2])));
  return lhs == rhs;
}

std::optional<ProjPoint> find_point(const Ring& ring, const Element& a, const Element& b, std::uint64_t bound) {
  require_units(ring, a, b);
  if (ring.is_finite()) return find_point_finite(ring, a, b, bound);
  return find_point_rational(ring, a, b, bound);
}

std::vector<ProjPoint> conic_points(const Ring& ring, const Element& a, const Element& b) {
  require_units(ring, a, b);
  std::vector<ProjPoint> out;
  for (auto& p : enumerate_points(ring, 2)) {
    if (on_conic(ring, a, b, p)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<ProjPoint> rational_conic_points(const Ring& ring, const Element& a, const Element& b,
                                             std::uint64_t height) {
  if (ring.kind() != RingSpec::Kind::Rationals) fail(ErrorCode::ParseError, "height search needs QQ");
  require_units(ring, a, b);
  std::vector<ProjPoint> out;
  // Each point has exactly one primitive representative up to sign, and the
  // walk reaches both signs at the same height; keep the first.
  walk_integer_points(ring, height, [&](ProjPoint p) {
    if (on_conic(ring, a, b, p) && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    return false;
  });
  return out;
}

PointedConic normalize_base_point(const Ring& ring, const Element& a, const Element& b, const ProjPoint& x) {
  require_units(ring, a, b);
  require_on_conic(ring, a, b, x);
  if (!ring.is_unit(ring.from_int(2))) fail(ErrorCode::NotUnit, "2 must be a unit to parametrize a conic");

  PointedConic pc;
  pc.original_a = a;
  pc.original_b = b;
  pc.original_point = x;
  const auto& c = x.coords();
  if (ring.is_unit(c[0])) {
    pc.transform = ConicTransform::Identity;
    pc.a = a;
    pc.b = b;
  } else if (ring.is_unit(c[1])) {
    // y^2 = (1/a) x^2 - (b/a) z^2
    Element ia = ring.inverse(a);
    pc.transform = ConicTransform::SwapXY;
    pc.a = ia;
    pc.b = ring.neg(ring.mul(b, ia));
  } else if (ring.is_unit(c[2])) {
    // z^2 = -(a/b) y^2 + (1/b) x^2
    Element ib = ring.inverse(b);
    pc.transform = ConicTransform::SwapXZ;
    pc.a = ring.neg(ring.mul(a, ib));
    pc.b = ib;
  } else {
    fail(ErrorCode::NoUnitCoordinate, "base point has no unit coordinate");
  }
  ProjPoint moved = apply_transform(ring, pc.transform, x);
  Element inv = ring.inverse(moved.coords()[0]);
  pc.y0 = ring.mul(moved.coords()[1], inv);
  pc.z0 = ring.mul(moved.coords()[2], inv);

  Element check = ring.add(ring.mul(pc.a, ring.mul(pc.y0, pc.y0)), ring.mul(pc.b, ring.mul(pc.z0, pc.z0)));
  if (!ring.is_one(check)) fail(ErrorCode::Internal, "normalized base point violates a y0^2 + b z0^2 = 1");
  return pc;
}

ProjPoint psi(const Ring& ring, const PointedConic& pc, const ProjPoint& uv) {
  if (uv.dim() != 1) fail(ErrorCode::DimensionMismatch, "psi takes a point of P^1");
  const Element& u = uv.coords()[0];
  const Element& v = uv.coords()[1];
  Element au2 = ring.mul(pc.a, ring.mul(u, u));
  Element bv2 = ring.mul(pc.b, ring.mul(v, v));
  Element diff = ring.sub(au2, bv2);
  Element two_uv = ring.mul(ring.from_int(2), ring.mul(u, v));
  Vector raw{
      ring.add(au2, bv2),
      ring.add(ring.mul(pc.y0, diff), ring.mul(pc.b, ring.mul(two_uv, pc.z0))),
      ring.sub(ring.mul(pc.z0, diff), ring.mul(pc.a, ring.mul(two_uv, pc.y0))),
  };
  ProjPoint out = checked_point(ring, std::move(raw), "psi");
  if (!on_conic(ring, pc.a, pc.b, out)) fail(ErrorCode::Internal, "psi left the conic at " + format_point(ring, out));
  return out;
}

ProjPoint phi(const Ring& ring, const PointedConic& pc, const ProjPoint& x) {
  require_on_conic(ring, pc.a, pc.b, x);
  const auto& c = x.coords();
  Element s = ring.add(ring.mul(pc.a, ring.mul(pc.y0, c[1])), ring.mul(pc.b, ring.mul(pc.z0, c[2])));
  Element d1 = ring.add(c[0], s);
  Element d2 = ring.sub(c[0], s);
  Element num = ring.sub(ring.mul(pc.z0, c[1]), ring.mul(pc.y0, c[2]));
  bool u1 = ring.is_unit(d1), u2 = ring.is_unit(d2);
  if (!u1 && !u2) {
    fail(ErrorCode::DichotomyFailure, "neither x + (a y0 y + b z0 z) nor x - (a y0 y + b z0 z) is a unit at " +
                                          format_point(ring, x));
  }
  if (u1 && u2) {
    // [1 : a n/d1] = [b n/d2 : 1] because d1 d2 = ab n^2 on the conic.
    Element t1 = ring.div(ring.mul(pc.a, num), d1);
    Element t2 = ring.div(ring.mul(pc.b, num), d2);
    if (!ring.is_one(ring.mul(t1, t2))) fail(ErrorCode::Internal, "phi charts disagree at " + format_point(ring, x));
  }
  if (u1) return make_point(ring, Vector{ring.one(), ring.div(ring.mul(pc.a, num), d1)});
  return make_point(ring, Vector{ring.div(ring.mul(pc.b, num), d2), ring.one()});
}

ProjPoint Parametrization::to_conic(const ProjPoint& uv) const {
  return apply_transform(ring_, pc_.transform, psi(ring_, pc_, uv));
}

ProjPoint Parametrization::to_line(const ProjPoint& x) const {
  require_on_conic(ring_, pc_.original_a, pc_.original_b, x);
  return phi(ring_, pc_, apply_transform(ring_, pc_.transform, x));
}

ProjPoint random_line_point(const Ring& ring, std::mt19937_64& rng) {
  for (;;) {
    Vector v{random_element(ring, rng), random_element(ring, rng)};
    if (ring.is_unit(v[0]) || ring.is_unit(v[1])) return make_point(ring, std::move(v));
  }
}

ParamResult parametrize(const Ring& ring, const Element& a, const Element& b, const ProjPoint& x, bool verify,
                        std::uint64_t seed, std::size_t samples) {
  ParamResult res{Parametrization(ring, normalize_base_point(ring, a, b, x)), std::nullopt};
  if (!verify) return res;

  ParamVerification ver;
  const Parametrization& m = res.map;
  auto note = [&](std::string msg) {
    if (ver.detail.empty()) ver.detail = std::move(msg);
  };
  try {
    if (ring.is_finite()) {
      ver.exhaustive = true;
      std::vector<ProjPoint> line = enumerate_points(ring, 1);
      std::vector<ProjPoint> conic = conic_points(ring, a, b);
      ver.line_points = line.size();
      ver.conic_points = conic.size();
      if (line.size() != conic.size()) note("P^1 and the conic have different sizes");
      for (const auto& uv : line) {
        ProjPoint p = m.to_conic(uv);
        if (!on_conic(ring, a, b, p)) note("image of " + format_point(ring, uv) + " is off the conic");
        if (!(m.to_line(p) == uv)) note("phi(psi(X)) != X at " + format_point(ring, uv));
        ++ver.roundtrips;
      }
      for (const auto& p : conic) {
        if (!(m.to_conic(m.to_line(p)) == p)) note("psi(phi(X)) != X at " + format_point(ring, p));
        ++ver.roundtrips;
      }
    } else {
      std::mt19937_64 rng(seed);
      for (std::size_t i = 0; i < samples; ++i) {
        ProjPoint uv = random_line_point(ring, rng);
        ProjPoint p = m.to_conic(uv);
        if (!on_conic(ring, a, b, p)) note("image of " + format_point(ring, uv) + " is off the conic");
        ProjPoint back = m.to_line(p);
        if (!(back == uv)) note("phi(psi(X)) != X at " + format_point(ring, uv));
        if (!(m.to_conic(back) == p)) note("psi(phi(X)) != X at " + format_point(ring, p));
        ++ver.roundtrips;
      }
    }
  } catch (const Error& e) {
    note(std::string(error_code_name(e.code())) + ": " + e.what());
  }
  ver.passed = ver.detail.empty();
  res.verification = std::move(ver);
  return res;
}

ProjPoint conic_rescale(const Ring& ring, const Element& a, const Element& b, const Element& u, const Element& v,
                        const ProjPoint& x) {
  require_units(ring, a, b);
  if (!ring.is_unit(u) || !ring.is_unit(v)) fail(ErrorCode::NotUnit, "rescaling factors must be units");
  Element a2 = ring.mul(ring.mul(u, u), a);
  Element b2 = ring.mul(ring.mul(v, v), b);
  require_on_conic(ring, a2, b2, x);
  const auto& c = x.coords();
  ProjPoint out = make_point(ring, Vector{c[0], ring.mul(u, c[1]), ring.mul(v, c[2])});
  if (!on_conic(ring, a, b, out)) fail(ErrorCode::Internal, "rescaled point left the conic");
  return out;
}

}  // namespace brauer
