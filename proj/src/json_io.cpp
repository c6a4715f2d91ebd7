// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include "json_io.hpp"

#include <string>

#include "brauer/error.hpp"

namespace brauer::json_io {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::size_t as_size(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    fail(ErrorCode::ParseError, std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("bad JSON for ") + what + ": " + e.what());
  }
}

Element element_from_json(const Ring& ring, const json& j) {
  if (j.is_string()) return ring.parse_element(j.get<std::string>());
  if (j.is_number_integer()) return ring.parse_element(std::to_string(j.get<long long>()));
  if (j.is_array() && ring.spec().kind == RingSpec::Kind::ExtField) return ring.parse_element(j.dump());
  fail(ErrorCode::ParseError, "element must be a string or an integer, got " + j.dump());
}

json element_to_json(const Ring& ring, const Element& e) { return ring.format(e); }

Vector vector_from_json(const Ring& ring, const json& j) {
  if (j.is_string()) {
    Vector v;
    for (const auto& f : split_csv(j.get<std::string>())) v.push_back(ring.parse_element(f));
    return v;
  }
  if (!j.is_array()) fail(ErrorCode::ParseError, "expected a coordinate list");
  Vector v;
  for (const auto& e : j) v.push_back(element_from_json(ring, e));
  return v;
}

json vector_to_json(const Ring& ring, const Vector& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(element_to_json(ring, e));
  return a;
}

Matrix matrix_from_json(const Ring& ring, const json& j) {
  const json* rows = &j;
  std::size_t nr = 0, nc = 0;
  bool sized = false;
  if (j.is_object()) {
    rows = &field(j, "entries");
    nr = as_size(field(j, "rows"), "rows");
    nc = as_size(field(j, "cols"), "cols");
    sized = true;
  }
  if (!rows->is_array()) fail(ErrorCode::ParseError, "matrix entries must be an array of rows");
  if (!sized) {
    nr = rows->size();
    nc = nr ? (*rows)[0].size() : 0;
  }
  if (rows->size() != nr) fail(ErrorCode::DimensionMismatch, "matrix has the wrong number of rows");
  Matrix m = Matrix::zeros(ring, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    const json& row = (*rows)[r];
    if (!row.is_array() || row.size() != nc) fail(ErrorCode::DimensionMismatch, "matrix row has the wrong length");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = element_from_json(ring, row[c]);
  }
  return m;
}

json matrix_to_json(const Ring& ring, const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(element_to_json(ring, m(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

ProjPoint point_from_json(const Ring& ring, const json& j) { return make_point(ring, vector_from_json(ring, j)); }

json point_to_json(const Ring& ring, const ProjPoint& p) { return vector_to_json(ring, p.coords()); }

AlgebraTable algebra_table_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "algebra must be a JSON object");
  const json& rs = field(j, "ring");
  if (!rs.is_string()) fail(ErrorCode::ParseError, "algebra ring must be a spec string");
  Ring ring(parse_ring_spec(rs.get<std::string>()));
  std::size_t m = as_size(field(j, "rank"), "rank");
  const json& sc = field(j, "sc");
  if (!sc.is_array() || sc.size() != m) fail(ErrorCode::InvalidAlgebra, "sc must be a rank x rank table");
  std::vector<Element> table;
  table.reserve(m * m * m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!sc[i].is_array() || sc[i].size() != m) fail(ErrorCode::InvalidAlgebra, "sc must be a rank x rank table");
    for (std::size_t k = 0; k < m; ++k) {
      Vector v = vector_from_json(ring, sc[i][k]);
      if (v.size() != m) {
        fail(ErrorCode::InvalidAlgebra, "sc[" + std::to_string(i) + "][" + std::to_string(k) + "] needs " +
                                            std::to_string(m) + " coordinates");
      }
      for (auto& e : v) table.push_back(std::move(e));
    }
  }
  Vector unit = vector_from_json(ring, field(j, "unit"));
  if (unit.size() != m) fail(ErrorCode::InvalidAlgebra, "unit needs rank coordinates");
  return AlgebraTable{std::move(ring), m, std::move(table), std::move(unit)};
}

StructureAlgebra algebra_from_json(const json& j) {
  AlgebraTable t = algebra_table_from_json(j);
  return StructureAlgebra::create(std::move(t.ring), t.rank, std::move(t.sc), std::move(t.unit));
}

json algebra_to_json(const StructureAlgebra& a) {
  const Ring& ring = a.ring();
  json sc = json::array();
  for (std::size_t i = 0; i < a.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.rank(); ++j) row.push_back(vector_to_json(ring, a.basis_product(i, j)));
    sc.push_back(std::move(row));
  }
  return json{{"ring", format_ring_spec(ring.spec())},
              {"rank", a.rank()},
              {"sc", std::move(sc)},
              {"unit", vector_to_json(ring, a.unit())}};
}

Subspace subspace_from_json(const Ring& ring, std::size_t ambient, const json& j) {
  if (j.is_object() && j.contains("basis")) {
    Matrix b = matrix_from_json(ring, j.at("basis"));
    if (b.rows() != ambient) fail(ErrorCode::DimensionMismatch, "ideal basis has the wrong ambient dimension");
    return subspace_from_matrix(ring, b);
  }
  if (j.is_object()) {
    Matrix b = matrix_from_json(ring, j);
    if (b.rows() != ambient) fail(ErrorCode::DimensionMismatch, "ideal basis has the wrong ambient dimension");
    return subspace_from_matrix(ring, b);
  }
  if (!j.is_array()) fail(ErrorCode::ParseError, "ideal must be a basis matrix or a list of vectors");
  std::vector<Vector> vs;
  for (const auto& v : j) {
    // A square matrix per generator is read row-major, as an element of M_k.
    if (v.is_array() && !v.empty() && v[0].is_array()) {
      vs.push_back(flatten(matrix_from_json(ring, v)));
    } else if (v.is_object()) {
      vs.push_back(flatten(matrix_from_json(ring, v)));
    } else {
      vs.push_back(vector_from_json(ring, v));
    }
  }
  return subspace_from_span(ring, ambient, vs);
}

json subspace_to_json(const Ring& ring, const Subspace& s) {
  json pivots = json::array();
  for (auto p : s.pivots) pivots.push_back(p);
  return json{{"ambient", s.ambient}, {"dim", s.dim()}, {"basis", matrix_to_json(ring, s.basis)}, {"pivots", pivots}};
}

}  // namespace brauer::json_io
