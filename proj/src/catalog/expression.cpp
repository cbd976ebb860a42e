#include "ybn/catalog/expression.hpp"

#include <cctype>
#include <set>

#include "ybn/error.hpp"

namespace ybn::catalog {

namespace {

CycloElement lift(const CycloElement& a, long order) { return a.order() == order ? a : a.embed(order); }

CycloElement times(const CycloElement& a, const CycloElement& b) {
  long order = exact::lcm_order(a.order(), b.order());
  return lift(a, order) * lift(b, order);
}

class Parser {
 public:
  Parser(std::string_view text, const Environment* env) : text_(text), env_(env) {}

  CycloElement parse_all() {
    CycloElement value = product();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

  std::set<std::string> names;

 private:
  CycloElement product() {
    skip_space();
    bool negative = false;
    while (peek() == '-' || peek() == '+') {
      if (peek() == '-') negative = !negative;
      ++pos_;
      skip_space();
    }
    CycloElement value = power();
    for (;;) {
      skip_space();
      char c = peek();
      if (c == '*') {
        ++pos_;
        value = times(value, power());
      } else if (c == '/') {
        ++pos_;
        CycloElement d = power();
        if (d.is_zero()) fail("division by zero");
        value = times(value, d.inverse());
      } else {
        break;
      }
    }
    return negative ? -value : value;
  }

  CycloElement power() {
    CycloElement base = atom();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      long e = integer(true);
      if (e < 0 && base.is_zero()) fail("zero to a negative power");
      base = base.pow(e);
    }
    return base;
  }

  CycloElement atom() {
    skip_space();
    char c = peek();
    if (c == '(') {
      ++pos_;
      CycloElement inner = product();
      skip_space();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = integer(false);
      return CycloElement::from_rational(1, exact::Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (name.rfind("zeta", 0) == 0 && name.size() > 4 &&
          name.find_first_not_of("0123456789", 4) == std::string::npos) {
        long order = std::stol(name.substr(4));
        if (order < 1) fail("zeta order must be positive");
        return exact::cyclotomic_root(order);
      }
      names.insert(name);
      if (!env_) return CycloElement::from_rational(1, exact::Rational(1));
      auto it = env_->find(name);
      if (it == env_->end()) throw UnknownName(name);
      return it->second;
    }
    fail(c == '\0' ? "unexpected end" : "unexpected '" + std::string(1, c) + "'");
  }

  long integer(bool allow_sign) {
    bool negative = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000L) fail("number too large");
      ++pos_;
    }
    return negative ? -v : v;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse '" + std::string(text_) + "': " + why);
  }

  std::string_view text_;
  const Environment* env_;
  std::size_t pos_ = 0;
};

}  // namespace

CycloElement evaluate(std::string_view text, const Environment& env) { return Parser(text, &env).parse_all(); }

CycloElement parse_value(std::string_view text) {
  Parser p(text, nullptr);
  auto v = p.parse_all();
  if (!p.names.empty()) throw ParseError("parameter value may not reference '" + *p.names.begin() + "'");
  return v;
}

std::vector<std::string> identifiers(std::string_view text) {
  Parser p(text, nullptr);
  p.parse_all();
  return {p.names.begin(), p.names.end()};
}

}  // namespace ybn::catalog
