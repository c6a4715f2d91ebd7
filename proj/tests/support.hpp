// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

// Small constructors shared by the unit tests.

#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "brauer/error.hpp"
#include "brauer/linalg.hpp"
#include "brauer/projective.hpp"
#include "brauer/rings.hpp"

namespace bt {

using namespace brauer;

inline Ring ring(const char* spec) { return Ring(parse_ring_spec(spec)); }

inline Element el(const Ring& r, const std::string& s) { return r.parse_element(s); }
inline Element el(const Ring& r, long v) { return r.from_int(v); }

inline Matrix mat(const Ring& r, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr ? rows.begin()->size() : 0;
  Matrix m = Matrix::zeros(r, nr, nc);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m(i, j++) = r.from_int(v);
    ++i;
  }
  return m;
}

inline Vector vec(const Ring& r, std::initializer_list<long> vals) {
  Vector v;
  for (long x : vals) v.push_back(r.from_int(x));
  return v;
}

inline ProjPoint pt(const Ring& r, std::initializer_list<long> vals) { return make_point(r, vec(r, vals)); }

// E_{i,j} of size k as a flat coordinate vector in M_k.
inline Vector unit_coords(const Ring& r, std::size_t k, std::size_t i, std::size_t j) {
  Vector v(k * k, r.zero());
  v[i * k + j] = r.one();
  return v;
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace bt
