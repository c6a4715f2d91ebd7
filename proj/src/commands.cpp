// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "brauer/conics.hpp"
#include "brauer/error.hpp"
#include "brauer/selftest.hpp"
#include "brauer/severi_brauer.hpp"

namespace brauer::commands {

namespace {

using namespace json_io;

[[noreturn]] void usage(const std::string& detail) { fail(ErrorCode::Usage, detail); }

// Verification records; each entry names a check and whether it held.
class Checks {
 public:
  explicit Checks(bool enabled) : enabled_(enabled) {}

  bool enabled() const { return enabled_; }

  void add(const std::string& name, bool passed, const json& extra = json::object()) {
    json entry{{"check", name}, {"passed", passed}};
    entry.update(extra);
    if (!passed && first_failure_.empty()) first_failure_ = name;
    list_.push_back(std::move(entry));
  }

  const json& list() const { return list_; }
  const std::string& first_failure() const { return first_failure_; }

 private:
  bool enabled_;
  json list_ = json::array();
  std::string first_failure_;
};

class Request {
 public:
  explicit Request(const json& j) : j_(j) {
    if (!j_.is_object()) usage("request must be a JSON object");
  }

  bool has(const char* key) const { return j_.contains(key) && !j_.at(key).is_null(); }

  const json& at(const char* key) const {
    if (!has(key)) usage(std::string("missing --") + key);
    return j_.at(key);
  }

  std::string string(const char* key) const {
    const json& v = at(key);
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }

  std::uint64_t uint(const char* key, std::uint64_t fallback) const {
    if (!has(key)) return fallback;
    const json& v = j_.at(key);
    if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0)) return v.get<std::uint64_t>();
    if (v.is_string()) {
      const std::string s = v.get<std::string>();
      if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) return std::stoull(s);
    }
    usage(std::string("--") + key + " must be a non-negative integer");
  }

  bool verify() const {
    if (!has("verify")) return true;
    const json& v = j_.at("verify");
    if (!v.is_boolean()) usage("verify must be a boolean");
    return v.get<bool>();
  }

  Ring ring() const { return Ring(parse_ring_spec(string("ring"))); }

  Element element(const Ring& ring, const char* key) const { return element_from_json(ring, at(key)); }

  // JSON-valued flags arrive as JSON or as JSON text.
  json structured(const char* key) const {
    const json& v = at(key);
    if (!v.is_string()) return v;
    std::string s = v.get<std::string>();
    std::size_t first = s.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (s[first] == '{' || s[first] == '[')) return parse_json(s, key);
    return v;
  }

 private:
  const json& j_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json algebra_document(const Request& req) {
  json v = req.structured("algebra");
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.rfind("builtin:", 0) == 0) return v;
    if (!s.empty() && s[0] == '@') s = s.substr(1);
    return parse_json(read_file(s), "algebra");
  }
  return v;
}

StructureAlgebra builtin_algebra(const Request& req, const std::string& name) {
  if (!req.has("ring")) usage("builtin algebras need --ring");
  return make_builtin_algebra(req.ring(), name);
}

StructureAlgebra load_algebra(const Request& req) {
  if (!req.has("algebra") && req.has("quaternion")) {
    Ring ring = req.ring();
    const json& q = req.at("quaternion");
    Vector ab = vector_from_json(ring, q);
    if (ab.size() != 2) usage("--quaternion takes a,b");
    return quaternion_algebra(ring, ab[0], ab[1]);
  }
  json doc = algebra_document(req);
  if (doc.is_string()) return builtin_algebra(req, doc.get<std::string>().substr(8));
  StructureAlgebra a = algebra_from_json(doc);
  if (req.has("ring") && !(req.ring() == a.ring())) {
    fail(ErrorCode::RingMismatch, "--ring differs from the algebra's ring " + format_ring_spec(a.ring().spec()));
  }
  return a;
}

std::size_t isqrt_exact(std::size_t m) {
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(m))));
  if (r * r != m) fail(ErrorCode::DimensionMismatch, std::to_string(m) + " is not a square");
  return r;
}

json element_matrix(const Ring& ring, const Vector& v) {
  std::size_t k = isqrt_exact(v.size());
  return matrix_to_json(ring, unflatten(v, k, k));
}

json ideal_matrices(const Ring& ring, const Subspace& s) {
  json out = json::array();
  for (std::size_t c = 0; c < s.dim(); ++c) out.push_back(element_matrix(ring, s.basis.column(c)));
  return out;
}

// Ambient dimension of an ideal document for M_k when --n is absent.
std::size_t infer_ambient(const Ring& ring, const json& j) {
  if (j.is_object() && j.contains("basis")) return matrix_from_json(ring, j.at("basis")).rows();
  if (j.is_object()) return matrix_from_json(ring, j).rows();
  if (!j.is_array() || j.empty()) fail(ErrorCode::ParseError, "ideal must be a basis matrix or a non-empty list");
  const json& first = j[0];
  if (first.is_object() || (first.is_array() && !first.empty() && first[0].is_array())) {
    Matrix m = matrix_from_json(ring, first);
    return m.rows() * m.cols();
  }
  return vector_from_json(ring, first).size();
}

std::string matrix_algebra_name(std::size_t n) { return "M_" + std::to_string(n + 1); }

void require_right_ideal(const RightIdealCheck& c, const Ring& ring) {
  if (c.ok()) return;
  const auto& f = *c.failure;
  fail(ErrorCode::NotRightIdeal, "ideal basis element " + std::to_string(f.ideal_basis_index) + " times algebra basis element " +
                                     std::to_string(f.algebra_basis_index) + " leaves the subspace: " +
                                     vector_to_json(ring, f.product).dump());
}

RightIdealRep load_ideal(const Request& req, const AlgebraPtr& a) {
  Subspace s = subspace_from_json(a->ring(), a->rank(), req.structured("ideal"));
  RightIdealCheck c = right_ideal_check(a, s);
  require_right_ideal(c, a->ring());
  return *c.ideal;
}

std::uint64_t default_bound(const Ring& ring) { return ring.is_finite() ? 0 : 10; }

RightIdealRep ideal_or_search(const Request& req, const AlgebraPtr& a, json& result) {
  if (req.has("ideal")) {
    result["ideal_source"] = "given";
    return load_ideal(req, a);
  }
  std::uint64_t bound = req.uint("bound", default_bound(a->ring()));
  auto found = find_right_ideal(a, bound);
  if (!found) fail(ErrorCode::NotRightIdeal, "no principal right ideal found within bound " + std::to_string(bound) + "; pass --ideal");
  result["ideal_source"] = "search";
  return *found;
}

json map_images(const AlgebraMap& f) {
  const Ring& ring = f.source->ring();
  json out = json::array();
  for (std::size_t i = 0; i < f.source->rank(); ++i) out.push_back(element_matrix(ring, f.matrix.column(i)));
  return out;
}

// ---- subcommands ----

json cmd_azumaya(const Request& req, Checks& checks) {
  StructureAlgebra a = load_algebra(req);
  AzumayaReport r = azumaya_check(a);
  json out{{"is_azumaya", r.is_azumaya},
           {"rank", a.rank()},
           {"ring", format_ring_spec(a.ring().spec())},
           {"enveloping_rank", r.enveloping_rank}};
  out["n"] = r.n ? json(*r.n) : json(nullptr);
  if (!r.is_azumaya) out["reason"] = r.reason;
  if (checks.enabled()) {
    checks.add("table_laws", true, {{"triples", a.rank() * a.rank() * a.rank()}});
    if (r.n) {
      std::size_t m = a.rank();
      checks.add("enveloping_rank", r.enveloping_rank == m * m || !r.is_azumaya,
                 {{"value", r.enveloping_rank}, {"full", m * m}});
    }
  }
  return out;
}

json cmd_quat_split(const Request& req, Checks& checks) {
  Ring ring = req.ring();
  Element b = req.element(ring, "b");
  Element a = req.has("a") ? req.element(ring, "a") : ring.one();
  AlgebraMap map;
  json route = json::array();
  if (a == ring.one()) {
    map = quaternion_split_iso(ring, b);
    route.push_back("split");
  } else if (auto u = ring.square_root(a)) {
    // Q(u^2, b) -> Q(1, b) -> M_2
    AlgebraMap rescale = quaternion_rescale_iso(ring, ring.one(), b, *u, ring.one());
    map = compose(quaternion_split_iso(ring, b), rescale);
    route = json{"rescale i by " + ring.format(*u), "split"};
  } else if (auto v = ring.square_root(b)) {
    // Q(a, v^2) -> Q(v^2, a) -> Q(1, a) -> M_2
    AlgebraMap swap = quaternion_swap_iso(ring, a, b);
    AlgebraMap rescale = quaternion_rescale_iso(ring, ring.one(), a, *v, ring.one());
    map = compose(quaternion_split_iso(ring, a), compose(rescale, swap));
    route = json{"swap", "rescale i by " + ring.format(*v), "split"};
  } else {
    // No square parameter: split through a right ideal if one can be found.
    AlgebraPtr q = share(quaternion_algebra(ring, a, b));
    std::uint64_t bound = req.uint("bound", default_bound(ring));
    auto ideal = find_right_ideal(q, bound);
    if (!ideal) {
      fail(ErrorCode::NoSquareRoot, "neither a nor b is a square and no right ideal was found within bound " +
                                        std::to_string(bound));
    }
    map = split_by_ideal(q, *ideal);
    route = json{"right ideal"};
  }
  json out{{"algebra", algebra_to_json(*map.source)}, {"matrix", matrix_to_json(ring, map.matrix)}, {"route", route}};
  json images = json::object();
  const char* names[] = {"1", "i", "j", "ij"};
  for (std::size_t i = 0; i < 4; ++i) images[names[i]] = element_matrix(ring, map.matrix.column(i));
  out["images"] = images;
  if (checks.enabled()) {
    checks.add("hom_check", hom_check(map), {{"products", 16}});
    checks.add("invertible", is_invertible(ring, map.matrix));
  }
  return out;
}

json cmd_param_conic(const Request& req, Checks& checks) {
  Ring ring = req.ring();
  Element a = req.element(ring, "a"), b = req.element(ring, "b");
  json out;
  ProjPoint x = [&] {
    if (req.has("point")) return point_from_json(ring, req.at("point"));
    std::uint64_t bound = req.uint("bound", ring.is_finite() ? 0 : 20);
    auto p = find_point(ring, a, b, bound);
    if (!p) fail(ErrorCode::NotOnConic, "no point found within bound " + std::to_string(bound) + "; pass --point");
    out["point_source"] = "search";
    return *p;
  }();
  const std::uint64_t seed = req.uint("seed", 0);
  const std::size_t samples = req.uint("samples", 25);
  ParamResult r = parametrize(ring, a, b, x, checks.enabled(), seed, samples);
  const PointedConic& pc = r.map.pointed();
  out["conic"] = {{"a", ring.format(a)}, {"b", ring.format(b)}, {"point", point_to_json(ring, x)}};
  out["pointed"] = {{"a", ring.format(pc.a)},
                    {"b", ring.format(pc.b)},
                    {"y0", ring.format(pc.y0)},
                    {"z0", ring.format(pc.z0)},
                    {"base_point", vector_to_json(ring, {ring.one(), pc.y0, pc.z0})}};
  out["transform"] = transform_name(pc.transform);

  std::vector<ProjPoint> line;
  if (ring.is_finite() && ring.size() <= 63) {
    line = enumerate_points(ring, 1);
  } else {
    for (auto [u, v] : std::initializer_list<std::pair<int, int>>{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, -2}, {2, -1}}) {
      line.push_back(make_point(ring, {ring.from_int(u), ring.from_int(v)}));
    }
  }
  json table = json::array();
  for (const auto& uv : line) {
    table.push_back({{"line", point_to_json(ring, uv)}, {"conic", point_to_json(ring, r.map.to_conic(uv))}});
  }
  out["table"] = table;
  if (r.verification) {
    const auto& v = *r.verification;
    json extra{{"exhaustive", v.exhaustive}, {"line_points", v.line_points}, {"conic_points", v.conic_points},
               {"roundtrips", v.roundtrips}};
    if (!ring.is_finite()) extra["seed"] = seed;
    if (!v.detail.empty()) extra["detail"] = v.detail;
    checks.add("roundtrip", v.passed, extra);
  }
  return out;
}

json cmd_conic_points(const Request& req, Checks& checks) {
  Ring ring = req.ring();
  Element a = req.element(ring, "a"), b = req.element(ring, "b");
  std::vector<ProjPoint> pts;
  json out;
  if (ring.is_finite()) {
    if (ring.size() > 2000) fail(ErrorCode::TooLarge, "P^2 over a ring of " + std::to_string(ring.size()) + " elements is too large to scan");
    pts = conic_points(ring, a, b);
    out["complete"] = true;
  } else {
    std::uint64_t h = req.uint("bound", 10);
    pts = rational_conic_points(ring, a, b, h);
    out["complete"] = false;
    out["height_bound"] = h;
  }
  json list = json::array();
  for (const auto& p : pts) list.push_back(point_to_json(ring, p));
  out["count"] = pts.size();
  out["points"] = list;
  if (checks.enabled()) {
    bool all_on = true;
    for (const auto& p : pts) all_on = all_on && on_conic(ring, a, b, p);
    checks.add("on_conic", all_on, {{"count", pts.size()}});
    if (ring.is_finite() && ring.is_field() && ring.is_unit(ring.from_int(2))) {
      checks.add("count_q_plus_1", pts.size() == ring.size() + 1, {{"expected", ring.size() + 1}});
    }
  }
  return out;
}

json cmd_delta(const Request& req, Checks& checks) {
  Ring ring = req.ring();
  ProjPoint x = point_from_json(ring, req.at("point"));
  if (req.has("n") && req.uint("n", 0) != x.dim()) fail(ErrorCode::DimensionMismatch, "point does not lie in P^n");
  AlgebraPtr alg = share(matrix_algebra(ring, x.dim() + 1));
  RightIdealRep d = delta(alg, x);
  json out{{"n", x.dim()},
           {"algebra", matrix_algebra_name(x.dim())},
           {"point", point_to_json(ring, x)},
           {"ideal", subspace_to_json(ring, d.space)},
           {"matrices", ideal_matrices(ring, d.space)}};
  if (checks.enabled()) {
    checks.add("right_ideal", right_ideal_check(alg, d.space).ok(), {{"products", d.space.dim() * alg->rank()}});
    checks.add("rank", d.space.dim() == x.dim() + 1, {{"value", d.space.dim()}});
    checks.add("delta_inv_roundtrip", delta_inv(d) == x);
  }
  return out;
}

json cmd_delta_inv(const Request& req, Checks& checks) {
  Ring ring = req.ring();
  json doc = req.structured("ideal");
  std::size_t ambient = req.has("n") ? (req.uint("n", 0) + 1) * (req.uint("n", 0) + 1) : infer_ambient(ring, doc);
  std::size_t k = isqrt_exact(ambient);
  AlgebraPtr alg = share(matrix_algebra(ring, k));
  Subspace s = subspace_from_json(ring, ambient, doc);
  RightIdealCheck c = right_ideal_check(alg, s);
  // A subspace that is not a right ideal is certainly not some delta(X).
  if (!c.ok()) {
    RightIdealRep raw{alg, s, false};
    delta_inv(raw);
    require_right_ideal(c, ring);
  }
  ProjPoint x = delta_inv(*c.ideal);
  json out{{"n", k - 1}, {"point", point_to_json(ring, x)}};
  if (checks.enabled()) {
    checks.add("right_ideal", true);
    checks.add("delta_roundtrip", delta(alg, x).space == s);
  }
  return out;
}

bool is_matrix_doc(const json& j) {
  return j.is_object() || (j.is_array() && !j.empty() && j[0].is_array() && (j[0].empty() || !j[0][0].is_array()));
}

json cmd_conjugator(const Request& req, Checks& checks) {
  Ring ring = req.ring();
  json doc = req.structured("matrix");
  std::vector<Matrix> units;
  std::optional<Matrix> given;
  if (is_matrix_doc(doc)) {
    Matrix p = matrix_from_json(ring, doc);
    if (!p.is_square() || !is_invertible(ring, p)) fail(ErrorCode::NotInvertible, "P must be invertible");
    Matrix pinv = invert_matrix(ring, p);
    for (std::size_t i = 0; i < p.rows(); ++i) {
      for (std::size_t j = 0; j < p.rows(); ++j) {
        Matrix e = Matrix::zeros(ring, p.rows(), p.rows());
        e(i, j) = ring.one();
        units.push_back(mat_mul(ring, mat_mul(ring, p, e), pinv));
      }
    }
    given = p;
  } else if (doc.is_array()) {
    for (const auto& m : doc) units.push_back(matrix_from_json(ring, m));
  } else {
    usage("--matrix takes an invertible matrix or a list of matrix units");
  }
  Matrix q = matrix_units_conjugator(ring, units);
  json out{{"P", matrix_to_json(ring, q)}, {"normalized", matrix_to_json(ring, normalize_projective(ring, q))}};
  if (checks.enabled()) {
    Matrix qinv = invert_matrix(ring, q);
    const std::size_t k = q.rows();
    bool ok = true;
    for (std::size_t idx = 0; idx < units.size(); ++idx) {
      Matrix e = Matrix::zeros(ring, k, k);
      e(idx / k, idx % k) = ring.one();
      ok = ok && mat_mul(ring, mat_mul(ring, q, e), qinv) == units[idx];
    }
    checks.add("conjugation_identities", ok, {{"count", units.size()}});
    if (given) {
      auto lambda = scalar_of(ring, mat_mul(ring, invert_matrix(ring, *given), q));
      bool scalar = lambda && ring.is_unit(*lambda);
      json extra = json::object();
      if (scalar) extra["lambda"] = ring.format(*lambda);
      checks.add("scalar_multiple_of_input", scalar, extra);
    }
  }
  return out;
}

json cmd_aut_to_pgl(const Request& req, Checks& checks) {
  Ring ring = req.ring();
  json doc = req.structured("matrix");
  std::optional<Matrix> given;
  AlgebraMap sigma;
  std::size_t n = 0;
  if (doc.is_string() && doc.get<std::string>() == "transpose") {
    n = req.uint("n", 1);
    sigma = transpose_map(ring, n);
  } else {
    Matrix m = matrix_from_json(ring, doc.is_object() && doc.contains("sigma") ? doc.at("sigma") : doc);
    if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "matrix must be square");
    bool is_sigma = doc.is_object() && doc.contains("sigma");
    if (req.has("n")) {
      n = req.uint("n", 0);
      if (m.rows() == (n + 1) * (n + 1) && n > 0) {
        is_sigma = true;
      } else if (m.rows() != n + 1) {
        fail(ErrorCode::DimensionMismatch, "matrix is neither (n+1)x(n+1) nor (n+1)^2x(n+1)^2");
      }
    } else if (is_sigma) {
      n = isqrt_exact(m.rows()) - 1;
    } else {
      n = m.rows() - 1;
    }
    if (is_sigma) {
      AlgebraPtr alg = share(matrix_algebra(ring, n + 1));
      sigma = AlgebraMap{alg, alg, m, false};
    } else {
      if (!is_invertible(ring, m)) fail(ErrorCode::NotInvertible, "P must be invertible");
      sigma = inner_automorphism(ring, n, m);
      given = m;
    }
  }
  Matrix p = automorphism_to_pgl(ring, n, sigma);
  json out{{"n", n}, {"P", matrix_to_json(ring, p)}};
  if (checks.enabled()) {
    checks.add("hom_check", hom_check(sigma));
    Matrix pinv = invert_matrix(ring, p);
    bool ok = true;
    for (std::size_t idx = 0; idx < (n + 1) * (n + 1); ++idx) {
      Matrix e = Matrix::zeros(ring, n + 1, n + 1);
      e(idx / (n + 1), idx % (n + 1)) = ring.one();
      Vector image = sigma.apply(flatten(e));
      ok = ok && flatten(mat_mul(ring, mat_mul(ring, p, e), pinv)) == image;
    }
    checks.add("conjugation_identities", ok, {{"count", (n + 1) * (n + 1)}});
    if (given) checks.add("matches_input_in_pgl", normalize_projective(ring, *given) == p);
  }
  return out;
}

json cmd_split(const Request& req, Checks& checks) {
  AlgebraPtr a = share(load_algebra(req));
  const Ring& ring = a->ring();
  json out = json::object();
  RightIdealRep ideal = ideal_or_search(req, a, out);
  AlgebraMap phi = split_by_ideal(a, ideal);
  out["n"] = isqrt_exact(phi.target->rank()) - 1;
  out["ideal"] = subspace_to_json(ring, ideal.space);
  out["phi"] = matrix_to_json(ring, phi.matrix);
  out["images"] = map_images(phi);
  if (checks.enabled()) {
    checks.add("right_ideal", ideal.verified);
    checks.add("hom_check", hom_check(phi), {{"products", a->rank() * a->rank()}});
    checks.add("invertible", is_invertible(ring, phi.matrix));
  }
  return out;
}

json cmd_chatelet(const Request& req, Checks& checks) {
  AlgebraPtr a = share(load_algebra(req));
  const Ring& ring = a->ring();
  json out = json::object();
  RightIdealRep ideal = ideal_or_search(req, a, out);
  AlgebraMap phi = split_by_ideal(a, ideal);
  const std::size_t n = isqrt_exact(phi.target->rank()) - 1;
  out["n"] = n;
  out["splitting_ideal"] = subspace_to_json(ring, ideal.space);
  out["phi"] = matrix_to_json(ring, phi.matrix);

  std::vector<RightIdealRep> ideals;
  bool complete = false;
  if (ring.is_finite() && ring.is_field()) {
    try {
      ideals = enumerate_right_ideals(a, n + 1);
      complete = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TooLarge) throw;
    }
  }
  if (!complete) ideals = {ideal};
  json points = json::array();
  std::set<std::string> seen;
  for (const auto& j : ideals) {
    ProjPoint x = chatelet_point_map(phi, j);
    seen.insert(point_to_json(ring, x).dump());
    points.push_back({{"ideal", subspace_to_json(ring, j.space)}, {"point", point_to_json(ring, x)}});
  }
  out["complete"] = complete;
  out["points"] = points;
  if (checks.enabled()) {
    checks.add("hom_check", hom_check(phi), {{"products", a->rank() * a->rank()}});
    checks.add("invertible", is_invertible(ring, phi.matrix));
    checks.add("injective", seen.size() == ideals.size(), {{"count", ideals.size()}});
    if (complete) {
      std::size_t expected = enumerate_points(ring, n).size();
      checks.add("bijective_onto_projective_space", seen.size() == expected, {{"expected", expected}});
    }
  }
  return out;
}

json cmd_find_ideal(const Request& req, Checks& checks) {
  AlgebraPtr a = share(load_algebra(req));
  std::uint64_t bound = req.uint("bound", default_bound(a->ring()));
  auto found = find_right_ideal(a, bound);
  json out{{"bound", bound}};
  if (!found) {
    out["status"] = "unknown";
    out["ideal"] = nullptr;
    return out;
  }
  out["status"] = "found";
  out["ideal"] = subspace_to_json(a->ring(), found->space);
  if (checks.enabled()) checks.add("right_ideal", right_ideal_check(a, found->space).ok());
  return out;
}

json report_json(const CriterionReport& r) {
  return {{"id", r.id},
          {"name", r.name},
          {"passed", r.passed},
          {"checks", r.checks},
          {"budget_seconds", r.budget_seconds},
          {"within_budget", r.seconds <= r.budget_seconds},
          {"detail", r.detail}};
}

struct SelftestOutcome {
  json report;
  std::string failure;
};

SelftestOutcome selftest(const Request& req) {
  std::string level = req.has("level") ? req.string("level") : "quick";
  if (level != "quick" && level != "full") usage("--level must be quick or full");
  std::vector<CriterionReport> reports =
      run_selftest(level == "full" ? SelftestLevel::Full : SelftestLevel::Quick, req.uint("seed", 0));
  if (req.has("algebra")) {
    json doc = algebra_document(req);
    if (doc.is_string()) {
      StructureAlgebra a = builtin_algebra(req, doc.get<std::string>().substr(8));
      reports.push_back(check_table(a.ring(), a.rank(), a.table(), a.unit()));
    } else {
      AlgebraTable t = algebra_table_from_json(doc);
      reports.push_back(check_table(t.ring, t.rank, t.sc, t.unit));
    }
  }
  SelftestOutcome out;
  json list = json::array();
  bool all = true;
  for (const auto& r : reports) {
    list.push_back(report_json(r));
    if (!r.passed && out.failure.empty()) out.failure = r.name + ": " + r.detail;
    all = all && r.passed;
  }
  out.report = {{"level", level}, {"passed", all}, {"criteria", list}};
  return out;
}

using Handler = std::function<json(const Request&, Checks&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"azumaya-check", cmd_azumaya}, {"quat-split", cmd_quat_split}, {"param-conic", cmd_param_conic},
      {"conic-points", cmd_conic_points}, {"delta", cmd_delta}, {"delta-inv", cmd_delta_inv},
      {"conjugator", cmd_conjugator}, {"aut-to-pgl", cmd_aut_to_pgl}, {"split", cmd_split},
      {"chatelet", cmd_chatelet}, {"find-ideal", cmd_find_ideal},
  };
  return table;
}

json error_envelope(ErrorCode code, const std::string& detail) {
  return {{"ok", false}, {"error", std::string(error_code_name(code))}, {"detail", detail}};
}

}  // namespace

StructureAlgebra make_builtin_algebra(const Ring& ring, const std::string& name) {
  auto count = [&](const std::string& digits) -> std::size_t {
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 3) {
      fail(ErrorCode::ParseError, "bad builtin algebra '" + name + "'");
    }
    std::size_t k = std::stoul(digits);
    if (k == 0) fail(ErrorCode::ParseError, "builtin algebras need positive size");
    return k;
  };
  if (name.size() > 1 && name[0] == 'M') return matrix_algebra(ring, count(name.substr(1)));
  if (name.size() > 1 && name[0] == 'D') return diagonal_algebra(ring, count(name.substr(1)));
  if (name.size() > 3 && name[0] == 'Q' && name[1] == '(' && name.back() == ')') {
    auto parts = json_io::split_csv(name.substr(2, name.size() - 3));
    if (parts.size() != 2) fail(ErrorCode::ParseError, "builtin:Q needs two parameters");
    return quaternion_algebra(ring, ring.parse_element(parts[0]), ring.parse_element(parts[1]));
  }
  fail(ErrorCode::ParseError, "unknown builtin algebra '" + name + "' (expected Mk, Dk or Q(a,b))");
}

const std::vector<std::string>& subcommand_names() {
  static const std::vector<std::string> names = {"azumaya-check", "quat-split", "param-conic", "conic-points",
                                                 "delta", "delta-inv", "conjugator", "aut-to-pgl",
                                                 "split", "chatelet", "find-ideal", "selftest"};
  return names;
}

json run(const std::string& subcommand, const json& request) {
  try {
    Request req(request);
    if (subcommand == "selftest") {
      SelftestOutcome s = selftest(req);
      if (!s.failure.empty()) {
        json env = error_envelope(ErrorCode::SelftestFailed, s.failure);
        env["result"] = s.report;
        return env;
      }
      return {{"ok", true}, {"result", s.report}, {"verification", json::array()}};
    }
    auto it = handlers().find(subcommand);
    if (it == handlers().end()) usage("unknown subcommand '" + subcommand + "'");
    Checks checks(req.verify());
    json result = it->second(req, checks);
    if (!checks.first_failure().empty()) {
      json env = error_envelope(ErrorCode::Internal, "verification failed: " + checks.first_failure());
      env["verification"] = checks.list();
      return env;
    }
    return {{"ok", true}, {"result", result}, {"verification", checks.list()}};
  } catch (const Error& e) {
    return error_envelope(e.code(), e.what());
  } catch (const json::exception& e) {
    return error_envelope(ErrorCode::ParseError, e.what());
  } catch (const std::invalid_argument& e) {
    return error_envelope(ErrorCode::ParseError, e.what());
  } catch (const std::out_of_range& e) {
    return error_envelope(ErrorCode::ParseError, e.what());
  }
}

int exit_code(const json& envelope) {
  if (envelope.value("ok", false)) return 0;
  return envelope.value("error", std::string()) == "UsageError" ? 64 : 2;
}

}  // namespace brauer::commands
