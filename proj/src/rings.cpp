// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include "brauer/rings.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <tuple>
#include <utility>

#include "brauer/error.hpp"

namespace brauer {

namespace {

constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;
constexpr int kMaxExtDegree = 4;

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::int64_t parse_int(std::string_view text, std::string_view context) {
  std::string t = trim(text);
  std::int64_t v = 0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && t[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (t.empty() || ec != std::errc() || ptr != last) {
    fail(ErrorCode::ParseError, "expected an integer in " + std::string(context) + ", got '" + t + "'");
  }
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::int64_t>::max() / base) return -1;
    r *= base;
  }
  return r;
}

// Polynomial helpers over GF(p), coefficient vectors low-to-high.
std::int64_t poly_eval(const std::vector<std::int64_t>& f, std::int64_t x, std::int64_t p) {
  std::int64_t acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % p;
  return acc;
}

// True iff the monic quadratic x^2 + s x + t divides the monic quartic f.
bool divides_by_quadratic(const std::vector<std::int64_t>& f, std::int64_t s, std::int64_t t,
                          std::int64_t p) {
  std::vector<std::int64_t> r(f);
  for (int d = static_cast<int>(r.size()) - 1; d >= 2; --d) {
    std::int64_t c = r[d] % p;
    if (c == 0) continue;
    r[d] = 0;
    r[d - 1] = ((r[d - 1] - c * s) % p + p) % p;
    r[d - 2] = ((r[d - 2] - c * t) % p + p) % p;
  }
  return r[0] % p == 0 && r[1] % p == 0;
}

bool irreducible(const std::vector<std::int64_t>& f, std::int64_t p) {
  int deg = static_cast<int>(f.size()) - 1;
  for (std::int64_t x = 0; x < p; ++x) {
    if (poly_eval(f, x, p) == 0) return false;
  }
  if (deg == 4) {
    for (std::int64_t s = 0; s < p; ++s) {
      for (std::int64_t t = 0; t < p; ++t) {
        if (divides_by_quadratic(f, s, t, p)) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

RingSpec RingSpec::rationals() { return RingSpec{}; }

RingSpec RingSpec::prime_field(std::int64_t p) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p >= kMaxModulus) fail(ErrorCode::TooLarge, "prime exceeds 2^31");
  RingSpec s;
  s.kind = Kind::PrimeField;
  s.p = p;
  return s;
}

RingSpec RingSpec::ext_field(std::int64_t p, std::vector<std::int64_t> modulus) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  int deg = static_cast<int>(modulus.size()) - 1;
  if (deg < 2 || deg > kMaxExtDegree) {
    fail(ErrorCode::ParseError, "extension degree must be between 2 and 4");
  }
  for (auto& c : modulus) c = ((c % p) + p) % p;
  if (modulus.back() != 1) fail(ErrorCode::ParseError, "modulus must be monic");
  std::int64_t q = ipow(p, deg);
  if (q < 0 || q >= kMaxModulus) fail(ErrorCode::TooLarge, "field size exceeds 2^31");
  if (!irreducible(modulus, p)) {
    fail(ErrorCode::NotIrreducible, "modulus is reducible over GF(" + std::to_string(p) + ")");
  }
  RingSpec s;
  s.kind = Kind::ExtField;
  s.p = p;
  s.modulus = std::move(modulus);
  return s;
}

RingSpec RingSpec::local_integers(std::int64_t p, int k) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1) fail(ErrorCode::ParseError, "exponent must be at least 1");
  std::int64_t n = ipow(p, k);
  if (n < 0 || n >= kMaxModulus) fail(ErrorCode::TooLarge, "p^k exceeds 2^31");
  RingSpec s;
  s.kind = Kind::LocalIntegers;
  s.p = p;
  s.k = k;
  return s;
}

RingSpec parse_ring_spec(std::string_view text) {
  std::string t = trim(text);
  if (t == "QQ") return RingSpec::rationals();

  if (t.rfind("GF(", 0) == 0 && t.size() > 4 && t.back() == ')') {
    std::string body = t.substr(3, t.size() - 4);
    auto caret = body.find('^');
    if (caret == std::string::npos) return RingSpec::prime_field(parse_int(body, "GF(p)"));
    auto semi = body.find(';');
    if (semi == std::string::npos || semi < caret) {
      fail(ErrorCode::ParseError, "extension field needs a modulus: GF(p^e;c0,...,1)");
    }
    std::int64_t p = parse_int(body.substr(0, caret), "GF(p^e)");
    std::int64_t e = parse_int(body.substr(caret + 1, semi - caret - 1), "GF(p^e)");
    std::vector<std::int64_t> coeffs;
    for (const auto& c : split(std::string_view(body).substr(semi + 1), ',')) {
      coeffs.push_back(parse_int(c, "modulus"));
    }
    if (static_cast<std::int64_t>(coeffs.size()) != e + 1) {
      fail(ErrorCode::ParseError, "modulus of degree e needs e+1 coefficients");
    }
    return RingSpec::ext_field(p, std::move(coeffs));
  }

  if (t.rfind("Z/", 0) == 0) {
    std::string body = t.substr(2);
    auto caret = body.find('^');
    if (caret != std::string::npos) {
      std::int64_t p = parse_int(body.substr(0, caret), "Z/p^k");
      std::int64_t k = parse_int(body.substr(caret + 1), "Z/p^k");
      if (k < 1 || k > 62) fail(ErrorCode::ParseError, "bad exponent in Z/p^k");
      return RingSpec::local_integers(p, static_cast<int>(k));
    }
    std::int64_t n = parse_int(body, "Z/N");
    if (n < 2) fail(ErrorCode::ParseError, "Z/N needs N >= 2");
    std::int64_t p = 2;
    while (n % p != 0) ++p;
    int k = 0;
    std::int64_t m = n;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (m != 1) fail(ErrorCode::NotPrime, std::to_string(n) + " is not a prime power");
    return RingSpec::local_integers(p, k);
  }

  fail(ErrorCode::ParseError, "unrecognized ring spec '" + t + "'");
}

std::string format_ring_spec(const RingSpec& spec) {
  switch (spec.kind) {
    case RingSpec::Kind::Rationals:
      return "QQ";
    case RingSpec::Kind::PrimeField:
      return "GF(" + std::to_string(spec.p) + ")";
    case RingSpec::Kind::ExtField: {
      std::string s = "GF(" + std::to_string(spec.p) + "^" +
                      std::to_string(spec.modulus.size() - 1) + ";";
      for (std::size_t i = 0; i < spec.modulus.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(spec.modulus[i]);
      }
      return s + ")";
    }
    case RingSpec::Kind::LocalIntegers:
      return "Z/" + std::to_string(spec.p) + "^" + std::to_string(spec.k);
  }
  return {};
}

Ring::Ring(RingSpec spec) : spec_(std::move(spec)) {
  switch (spec_.kind) {
    case RingSpec::Kind::Rationals:
      break;
    case RingSpec::Kind::PrimeField:
      modulus_ = spec_.p;
      size_ = static_cast<std::uint64_t>(spec_.p);
      break;
    case RingSpec::Kind::ExtField:
      modulus_ = spec_.p;
      degree_ = static_cast<int>(spec_.modulus.size()) - 1;
      size_ = static_cast<std::uint64_t>(ipow(spec_.p, degree_));
      break;
    case RingSpec::Kind::LocalIntegers:
      modulus_ = ipow(spec_.p, spec_.k);
      size_ = static_cast<std::uint64_t>(modulus_);
      break;
  }
}

bool Ring::is_field() const {
  return spec_.kind != RingSpec::Kind::LocalIntegers || spec_.k == 1;
}

std::uint64_t Ring::residue_field_size() const {
  return spec_.kind == RingSpec::Kind::LocalIntegers ? static_cast<std::uint64_t>(spec_.p) : size_;
}

std::int64_t Ring::reduce(std::int64_t v) const {
  v %= modulus_;
  return v < 0 ? v + modulus_ : v;
}

std::int64_t Ring::mod_mul(std::int64_t a, std::int64_t b) const { return (a * b) % modulus_; }

std::int64_t Ring::mod_inverse(std::int64_t a) const {
  std::int64_t old_r = a, r = modulus_, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  return old_r == 1 ? reduce(old_s) : -1;
}

Element Ring::zero() const {
  return is_finite() ? Element(Element::Coeffs{}) : Element(mpq_class(0));
}

Element Ring::one() const { return from_int(1); }

Element Ring::from_int(std::int64_t v) const {
  if (!is_finite()) return Element(mpq_class(static_cast<long>(v)));
  Element::Coeffs c{};
  c[0] = reduce(v);
  return Element(c);
}

Element Ring::from_rational(const mpq_class& q) const {
  if (!is_finite()) {
    mpq_class r(q);
    r.canonicalize();
    return Element(r);
  }
  mpz_class m(static_cast<long>(modulus_));
  mpz_class num = q.get_num() % m;
  mpz_class den = q.get_den() % m;
  if (num < 0) num += m;
  if (den < 0) den += m;
  Element n = from_int(num.get_si());
  Element d = from_int(den.get_si());
  return mul(n, inverse(d, "denominator"));
}

Element Ring::add(const Element& x, const Element& y) const {
  if (!is_finite()) return Element(mpq_class(x.rational() + y.rational()));
  Element::Coeffs c{};
  for (int i = 0; i < degree_; ++i) {
    std::int64_t s = x.coeffs()[i] + y.coeffs()[i];
    c[i] = s >= modulus_ ? s - modulus_ : s;
  }
  return Element(c);
}

Element Ring::sub(const Element& x, const Element& y) const {
  if (!is_finite()) return Element(mpq_class(x.rational() - y.rational()));
  Element::Coeffs c{};
  for (int i = 0; i < degree_; ++i) {
    std::int64_t s = x.coeffs()[i] - y.coeffs()[i];
    c[i] = s < 0 ? s + modulus_ : s;
  }
  return Element(c);
}

Element Ring::neg(const Element& x) const {
  if (!is_finite()) return Element(mpq_class(-x.rational()));
  Element::Coeffs c{};
  for (int i = 0; i < degree_; ++i) c[i] = x.coeffs()[i] == 0 ? 0 : modulus_ - x.coeffs()[i];
  return Element(c);
}

Element Ring::mul(const Element& x, const Element& y) const {
  if (!is_finite()) return Element(mpq_class(x.rational() * y.rational()));
  if (spec_.kind != RingSpec::Kind::ExtField) {
    Element::Coeffs c{};
    c[0] = mod_mul(x.coeffs()[0], y.coeffs()[0]);
    return Element(c);
  }
  std::array<std::int64_t, 2 * kMaxExtDegree - 1> prod{};
  for (int i = 0; i < degree_; ++i) {
    if (x.coeffs()[i] == 0) continue;
    for (int j = 0; j < degree_; ++j) {
      prod[i + j] = (prod[i + j] + mod_mul(x.coeffs()[i], y.coeffs()[j])) % modulus_;
    }
  }
  // x^deg = -(m_0 + ... + m_{deg-1} x^{deg-1})
  for (int d = 2 * degree_ - 2; d >= degree_; --d) {
    std::int64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < degree_; ++i) {
      prod[d - degree_ + i] = reduce(prod[d - degree_ + i] - mod_mul(c, spec_.modulus[i]));
    }
  }
  Element::Coeffs c{};
  std::copy_n(prod.begin(), degree_, c.begin());
  return Element(c);
}

Element Ring::arith(ArithOp op, const Element& x, const Element& y) const {
  switch (op) {
    case ArithOp::Add: return add(x, y);
    case ArithOp::Sub: return sub(x, y);
    case ArithOp::Mul: return mul(x, y);
    case ArithOp::Neg: return neg(x);
  }
  return x;
}

Element Ring::pow(const Element& x, std::uint64_t e) const {
  Element result = one();
  Element base = x;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

bool Ring::is_zero(const Element& x) const { return x == zero(); }

bool Ring::is_unit(const Element& x) const {
  switch (spec_.kind) {
    case RingSpec::Kind::Rationals:
      return sgn(x.rational()) != 0;
    case RingSpec::Kind::PrimeField:
      return x.coeffs()[0] != 0;
    case RingSpec::Kind::ExtField:
      return !is_zero(x);
    case RingSpec::Kind::LocalIntegers:
      return x.coeffs()[0] % spec_.p != 0;
  }
  return false;
}

std::optional<Element> Ring::unit_inverse(const Element& x) const {
  if (!is_unit(x)) return std::nullopt;
  switch (spec_.kind) {
    case RingSpec::Kind::Rationals:
      return Element(mpq_class(1 / x.rational()));
    case RingSpec::Kind::ExtField:
      return pow(x, size_ - 2);
    default: {
      Element::Coeffs c{};
      c[0] = mod_inverse(x.coeffs()[0]);
      return Element(c);
    }
  }
}

Element Ring::inverse(const Element& x, std::string_view what) const {
  auto inv = unit_inverse(x);
  if (!inv) fail(ErrorCode::NotUnit, std::string(what) + " " + format(x) + " is not a unit");
  return *inv;
}

int Ring::valuation(const Element& x) const {
  if (spec_.kind != RingSpec::Kind::LocalIntegers) return is_zero(x) ? 1 : 0;
  std::int64_t v = x.coeffs()[0];
  if (v == 0) return spec_.k;
  int val = 0;
  while (v % spec_.p == 0) {
    v /= spec_.p;
    ++val;
  }
  return val;
}

int Ring::compare(const Element& x, const Element& y) const {
  if (!is_finite()) {
    int c = cmp(x.rational().get_den(), y.rational().get_den());
    if (c == 0) c = cmp(x.rational().get_num(), y.rational().get_num());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  for (int i = degree_ - 1; i >= 0; --i) {
    if (x.coeffs()[i] != y.coeffs()[i]) return x.coeffs()[i] < y.coeffs()[i] ? -1 : 1;
  }
  return 0;
}

bool Ring::less(const Element& x, const Element& y) const { return compare(x, y) < 0; }

Element Ring::element_at(std::uint64_t index) const {
  if (!is_finite()) fail(ErrorCode::InfiniteRing, "QQ has no element enumeration");
  Element::Coeffs c{};
  for (int i = 0; i < degree_; ++i) {
    c[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(modulus_));
    index /= static_cast<std::uint64_t>(modulus_);
  }
  return Element(c);
}

std::vector<Element> Ring::enumerate() const {
  if (!is_finite()) fail(ErrorCode::InfiniteRing, "QQ cannot be enumerated");
  std::vector<Element> out;
  out.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(element_at(i));
  return out;
}

Element Ring::parse_element(std::string_view text) const {
  std::string t = trim(text);
  if (!is_finite()) {
    auto slash = t.find('/');
    mpz_class num, den(1);
    auto parse_z = [&](const std::string& s) {
      std::string u = trim(s);
      if (!u.empty() && u[0] == '+') u = u.substr(1);
      mpz_class z;
      if (u.empty() || z.set_str(u, 10) != 0) {
        fail(ErrorCode::ParseError, "bad rational '" + t + "'");
      }
      return z;
    };
    if (slash == std::string::npos) {
      num = parse_z(t);
    } else {
      num = parse_z(t.substr(0, slash));
      den = parse_z(t.substr(slash + 1));
    }
    if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + t + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Element(q);
  }
  if (spec_.kind == RingSpec::Kind::ExtField && !t.empty() && t.front() == '[') {
    if (t.back() != ']') fail(ErrorCode::ParseError, "unterminated coefficient list '" + t + "'");
    auto parts = split(std::string_view(t).substr(1, t.size() - 2), ',');
    if (static_cast<int>(parts.size()) > degree_) {
      fail(ErrorCode::ParseError, "too many coefficients in '" + t + "'");
    }
    Element::Coeffs c{};
    for (std::size_t i = 0; i < parts.size(); ++i) c[i] = reduce(parse_int(parts[i], "coefficient"));
    return Element(c);
  }
  return from_int(reduce(parse_int(t, "element")));
}

std::string Ring::format(const Element& x) const {
  if (!is_finite()) return x.rational().get_str();
  if (spec_.kind != RingSpec::Kind::ExtField) return std::to_string(x.coeffs()[0]);
  std::string s = "[";
  for (int i = 0; i < degree_; ++i) {
    if (i) s += ",";
    s += std::to_string(x.coeffs()[i]);
  }
  return s + "]";
}

std::optional<Element> Ring::square_root(const Element& x) const {
  if (!is_finite()) {
    const mpq_class& q = x.rational();
    if (sgn(q) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) ||
        !mpz_perfect_square_p(q.get_den().get_mpz_t())) {
      return std::nullopt;
    }
    mpz_class n = sqrt(q.get_num());
    mpz_class d = sqrt(q.get_den());
    return Element(mpq_class(n, d));
  }
  for (std::uint64_t i = 0; i < size_; ++i) {
    Element r = element_at(i);
    if (mul(r, r) == x) return r;
  }
  return std::nullopt;
}

Element Ring::canonicalize(const Element& x) const {
  if (!is_finite()) {
    mpq_class q(x.rational());
    q.canonicalize();
    return Element(q);
  }
  Element::Coeffs c{};
  for (int i = 0; i < degree_; ++i) c[i] = reduce(x.coeffs()[i]);
  return Element(c);
}

}  // namespace brauer
