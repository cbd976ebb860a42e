#include "ybn/exact/rational.hpp"

#include <cctype>

#include "ybn/error.hpp"

namespace ybn::exact {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw InvalidArgument("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-')
    throw ParseError("not a rational: '" + std::string(text) + "'");
  mpz_class d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(parse_integer(num), d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero");
  mpq_class inv = 1 / value_;
  return Rational(std::move(inv));
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw InvalidArgument("division by zero");
  value_ /= other.value_;
  return *this;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  thread_local mpq_class scratch;
  mpq_mul(scratch.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
}

void Rational::sub_product(const Rational& a, const Rational& b) {
  thread_local mpq_class scratch;
  mpq_mul(scratch.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
}

}  // namespace ybn::exact
