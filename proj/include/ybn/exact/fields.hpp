#pragma once

#include <cstdint>
#include <string>

#include "ybn/exact/cyclotomic.hpp"
#include "ybn/exact/prime_field.hpp"

namespace ybn::exact {

// Field policies consumed by the linalg templates. Each exposes an Element type
// and the handful of in-place operations elimination needs.

struct PrimeField {
  using Element = std::uint64_t;

  std::uint64_t p;
  long order = 1;  // cyclotomic order whose generator maps to omega
  std::uint64_t omega = 1;

  static PrimeField for_order(long order, std::uint64_t p) { return PrimeField{p, order, root_of_order(order, p)}; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p ? s - p : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p - a; }
  Element mul(Element a, Element b) const { return a * b % p; }
  Element inv(Element a) const { return pow_mod(a, p - 2, p); }
  void add_assign(Element& a, Element b) const { a = add(a, b); }
  void mul_assign(Element& a, Element b) const { a = mul(a, b); }
  // a -= c * b
  void sub_mul(Element& a, Element c, Element b) const { a = sub(a, mul(c, b)); }
  void add_mul(Element& a, Element c, Element b) const { a = add(a, mul(c, b)); }
  void assign_mul(Element& out, Element c, Element b) const { out = mul(c, b); }
  void set_zero(Element& a) const { a = 0; }
  bool equal(Element a, Element b) const { return a == b; }

  Element from(const CycloElement& x) const {
    if (x.order() != order) return specialize(x.embed(order), p).value;
    return specialize(x, p).value;
  }
  std::string name() const { return "mod " + std::to_string(p); }
};

struct CyclotomicField {
  using Element = CycloElement;

  long order;

  Element zero() const { return CycloElement(order); }
  Element one() const { return CycloElement::from_rational(order, Rational(1)); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool is_one(const Element& a) const { return a.is_one(); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const { return a.inverse(); }
  void add_assign(Element& a, const Element& b) const { a += b; }
  void mul_assign(Element& a, const Element& b) const { a *= b; }
  void sub_mul(Element& a, const Element& c, const Element& b) const { a.sub_product(c, b); }
  void add_mul(Element& a, const Element& c, const Element& b) const { a.add_product(c, b); }
  void assign_mul(Element& out, const Element& c, const Element& b) const { out.assign_product(c, b); }
  void set_zero(Element& a) const { a.set_zero(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element from(const CycloElement& x) const { return x.order() == order ? x : x.embed(order); }
  std::string name() const { return "exact Q(zeta" + std::to_string(order) + ")"; }
};

}  // namespace ybn::exact
