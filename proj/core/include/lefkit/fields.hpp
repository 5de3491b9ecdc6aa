#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "lefkit/policy.hpp"

namespace lefkit {

// Arbitrary-precision rationals. No floating point anywhere in the library.
struct RationalField {
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const {
    Element e;
    e = static_cast<long>(v);
    return e;
  }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element div(const Element& a, const Element& b) const { return a / b; }
  Element neg(const Element& a) const { return -a; }
  // a -= b*c, the elimination kernel
  void submul(Element& a, const Element& b, const Element& c) const { a -= b * c; }
  std::string to_string(const Element& a) const { return a.get_str(); }
};

// GF(p) with a runtime modulus; elements are canonical representatives.
struct PrimeField {
  using Element = std::uint64_t;
  std::uint64_t p = 0;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (!is_prime_u64(prime)) throw std::invalid_argument("PrimeField: modulus not prime");
  }

  Element zero() const { return 0; }
  Element one() const { return 1 % p; }
  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return static_cast<Element>(r);
  }
  bool is_zero(const Element& a) const { return a == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element add(const Element& a, const Element& b) const {
    Element s = a + b;
    return s >= p ? s - p : s;
  }
  Element sub(const Element& a, const Element& b) const {
    return a >= b ? a - b : a + p - b;
  }
  Element mul(const Element& a, const Element& b) const {
    return static_cast<Element>((__uint128_t)a * b % p);
  }
  Element inv(const Element& a) const {
    if (a == 0) throw std::domain_error("PrimeField: division by zero");
    return pow(a, p - 2);
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  Element neg(const Element& a) const { return a == 0 ? 0 : p - a; }
  void submul(Element& a, const Element& b, const Element& c) const {
    a = sub(a, mul(b, c));
  }
  Element pow(Element a, std::uint64_t e) const {
    Element r = 1 % p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::string to_string(const Element& a) const { return std::to_string(a); }
};

}  // namespace lefkit
