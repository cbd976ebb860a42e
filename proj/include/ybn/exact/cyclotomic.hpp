#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybn/exact/rational.hpp"

namespace ybn::exact {

long euler_phi(long n);

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(long order);

/// Power-basis coordinates of zeta_N^e reduced mod Phi_N.
const std::vector<std::int64_t>& root_power_coordinates(long order, long exponent);

/// An element of Q(zeta_N) in the basis 1, zeta, ..., zeta^(phi(N)-1).
class CycloElement {
 public:
  CycloElement() : CycloElement(1) {}
  explicit CycloElement(long order);  // zero
  CycloElement(long order, std::vector<Rational> coeffs);

  static CycloElement from_rational(long order, const Rational& r);
  static CycloElement root_power(long order, long exponent);

  long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Constant coordinate; meaningful as a value only when is_rational().
  const Rational& constant() const { return coeffs_[0]; }

  /// Same number viewed in Q(zeta_M); requires N | M.
  CycloElement embed(long target_order) const;

  CycloElement inverse() const;
  CycloElement pow(long exponent) const;

  CycloElement& operator+=(const CycloElement& other);
  CycloElement& operator-=(const CycloElement& other);
  CycloElement& operator*=(const CycloElement& other);
  /// this -= a * b
  void sub_product(const CycloElement& a, const CycloElement& b);
  void add_product(const CycloElement& a, const CycloElement& b);
  /// this = a * b, reusing storage.
  void assign_product(const CycloElement& a, const CycloElement& b);
  void set_zero();

  friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
  friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
  friend CycloElement operator*(CycloElement a, const CycloElement& b) { return a *= b; }
  friend CycloElement operator/(const CycloElement& a, const CycloElement& b) { return a * b.inverse(); }
  friend CycloElement operator-(const CycloElement& a);

  friend bool operator==(const CycloElement& a, const CycloElement& b);

  /// Human-readable form such as "-1", "zeta3", "1/2 - 2*zeta12^3".
  std::string to_string() const;

 private:
  void require_same_order(const CycloElement& other) const;

  long order_;
  std::vector<Rational> coeffs_;
};

CycloElement cyclotomic_root(long order);

/// ((n)_q, (n)_q!) with (n)_q = 1 + q + ... + q^(n-1).
std::pair<CycloElement, CycloElement> q_analogues(long n, const CycloElement& q);

/// Multiplicative order when x is a root of unity, otherwise nothing.
std::optional<long> root_of_unity_order(const CycloElement& x);

long lcm_order(long a, long b);

}  // namespace ybn::exact
