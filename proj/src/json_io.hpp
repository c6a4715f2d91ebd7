// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

// JSON encodings shared by the command layer and the C API.
//
//   element  "3", "-1/2", "[1,0]" (extension fields); integers accepted on input
//   matrix   {"rows": r, "cols": c, "entries": [[...], ...]}; bare row arrays accepted
//   point    [x0, ..., xn]; "x0,...,xn" accepted
//   algebra  {"ring": spec, "rank": m, "sc": [[[...]]], "unit": [...]}
//   ideal    {"ambient": N, "dim": k, "basis": matrix N x k}; a list of
//            coordinate vectors is accepted and canonicalized

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "brauer/algebras.hpp"
#include "brauer/projective.hpp"

namespace brauer::json_io {

// Insertion-ordered, so envelopes read {"ok", "result", "verification"}.
using json = nlohmann::ordered_json;

Element element_from_json(const Ring& ring, const json& j);
json element_to_json(const Ring& ring, const Element& e);

Vector vector_from_json(const Ring& ring, const json& j);
json vector_to_json(const Ring& ring, const Vector& v);

Matrix matrix_from_json(const Ring& ring, const json& j);
json matrix_to_json(const Ring& ring, const Matrix& m);

ProjPoint point_from_json(const Ring& ring, const json& j);
json point_to_json(const Ring& ring, const ProjPoint& p);

/// An algebra table as read, before the algebra laws are checked.
struct AlgebraTable {
  Ring ring;
  std::size_t rank = 0;
  std::vector<Element> sc;
  Vector unit;
};

AlgebraTable algebra_table_from_json(const json& j);
StructureAlgebra algebra_from_json(const json& j);
json algebra_to_json(const StructureAlgebra& a);

Subspace subspace_from_json(const Ring& ring, std::size_t ambient, const json& j);
json subspace_to_json(const Ring& ring, const Subspace& s);

/// Splits "a,b,c" into trimmed fields.
std::vector<std::string> split_csv(const std::string& text);

/// Parses JSON text, mapping syntax errors to ParseError.
json parse_json(const std::string& text, const char* what);

}  // namespace brauer::json_io
