// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace brauer {

/// Description of one of the supported local base rings.
///
/// Four families are supported: the rationals, prime fields GF(p),
/// extension fields GF(p)[x]/(f) with f monic irreducible of degree 2..4,
/// and the local rings Z/p^k.
struct RingSpec {
  enum class Kind { Rationals, PrimeField, ExtField, LocalIntegers };

  Kind kind = Kind::Rationals;
  std::int64_t p = 0;
  int k = 1;                             // LocalIntegers exponent
  std::vector<std::int64_t> modulus;     // ExtField, low-to-high, monic

  static RingSpec rationals();
  static RingSpec prime_field(std::int64_t p);
  static RingSpec ext_field(std::int64_t p, std::vector<std::int64_t> modulus);
  static RingSpec local_integers(std::int64_t p, int k);

  bool operator==(const RingSpec&) const = default;
};

RingSpec parse_ring_spec(std::string_view text);
std::string format_ring_spec(const RingSpec& spec);

/// Canonical-form ring element. Finite rings store coordinates (one residue,
/// or up to four polynomial coefficients); the rationals store a reduced
/// fraction. Structural equality is ring equality.
class Element {
 public:
  using Coeffs = std::array<std::int64_t, 4>;

  Element() = default;
  explicit Element(const Coeffs& c) : rep_(c) {}
  explicit Element(mpq_class q) : rep_(std::move(q)) {}

  bool is_rational() const { return std::holds_alternative<mpq_class>(rep_); }
  const Coeffs& coeffs() const { return std::get<Coeffs>(rep_); }
  const mpq_class& rational() const { return std::get<mpq_class>(rep_); }

  bool operator==(const Element& other) const { return rep_ == other.rep_; }

 private:
  std::variant<Coeffs, mpq_class> rep_{Coeffs{}};
};

enum class ArithOp { Add, Sub, Mul, Neg };

/// A validated ring together with its arithmetic. Cheap to copy and
/// immutable after construction.
class Ring {
 public:
  explicit Ring(RingSpec spec);

  const RingSpec& spec() const { return spec_; }
  RingSpec::Kind kind() const { return spec_.kind; }
  bool is_field() const;
  bool is_finite() const { return spec_.kind != RingSpec::Kind::Rationals; }
  /// Number of elements; only meaningful for finite rings.
  std::uint64_t size() const { return size_; }
  /// Size of the residue field (p for Z/p^k, the ring itself for fields).
  std::uint64_t residue_field_size() const;

  Element zero() const;
  Element one() const;
  Element from_int(std::int64_t v) const;
  Element from_rational(const mpq_class& q) const;

  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element mul(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  Element arith(ArithOp op, const Element& x, const Element& y) const;
  Element pow(const Element& x, std::uint64_t e) const;

  bool is_zero(const Element& x) const;
  bool is_one(const Element& x) const { return x == one(); }
  bool is_unit(const Element& x) const;
  std::optional<Element> unit_inverse(const Element& x) const;
  /// Inverse of a unit; throws NotUnit otherwise.
  Element inverse(const Element& x, std::string_view what = "element") const;
  Element div(const Element& x, const Element& unit) const { return mul(x, inverse(unit)); }

  /// p-adic valuation for Z/p^k (k for zero); 0 or infinity-like for fields.
  int valuation(const Element& x) const;

  /// Canonical total order: residue order, integer encoding for extension
  /// fields, (denominator, numerator) for the rationals.
  bool less(const Element& x, const Element& y) const;
  int compare(const Element& x, const Element& y) const;

  std::vector<Element> enumerate() const;
  /// Element with the given index in canonical order (finite rings only).
  Element element_at(std::uint64_t index) const;

  Element parse_element(std::string_view text) const;
  std::string format(const Element& x) const;

  /// Returns a square root when one exists (finite rings by search, the
  /// rationals by exact integer square roots).
  std::optional<Element> square_root(const Element& x) const;

  /// Re-canonicalizes arbitrary coordinates; used by tests for the
  /// canonicality property.
  Element canonicalize(const Element& x) const;

  bool operator==(const Ring& other) const { return spec_ == other.spec_; }

 private:
  std::int64_t reduce(std::int64_t v) const;
  std::int64_t mod_mul(std::int64_t a, std::int64_t b) const;
  std::int64_t mod_inverse(std::int64_t a) const;

  RingSpec spec_;
  std::int64_t modulus_ = 0;   // p for GF(p)/ExtField coefficients, p^k for Z/p^k
  int degree_ = 1;             // ExtField degree
  std::uint64_t size_ = 0;
};

bool is_prime(std::int64_t n);

}  // namespace brauer
