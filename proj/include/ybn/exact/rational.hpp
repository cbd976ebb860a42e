#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace ybn::exact {

/// Reduced fraction with arbitrary-precision numerator and positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Accepts "n" or "n/d" with optional sign; throws ParseError.
  static Rational parse(std::string_view text);

  /// "n/d", with the denominator omitted when it is 1.
  std::string to_string() const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  Rational inverse() const;

  Rational& operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
  }
  Rational& operator-=(const Rational& other) {
    value_ -= other.value_;
    return *this;
  }
  Rational& operator*=(const Rational& other) {
    value_ *= other.value_;
    return *this;
  }
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  void set_zero() { value_ = 0; }

  // this += a * b and this -= a * b without a temporary Rational.
  void add_product(const Rational& a, const Rational& b);
  void sub_product(const Rational& a, const Rational& b);
  void assign_product(const Rational& a, const Rational& b) {
    mpq_mul(value_.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  }

 private:
  mpq_class value_;
};

}  // namespace ybn::exact
