#include "ybn/exact/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ybn/error.hpp"

namespace ybn::exact {

long euler_phi(long n) {
  if (n < 1) throw InvalidArgument("euler_phi of non-positive integer");
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

long lcm_order(long a, long b) { return std::lcm(a, b); }

namespace {

using Poly = std::vector<std::int64_t>;

// Exact division of integer polynomials, divisor monic.
Poly divide_monic(Poly num, const Poly& den) {
  std::size_t dn = den.size() - 1;
  Poly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    std::int64_t c = num[i];
    quot[i - dn] = c;
    for (std::size_t k = 0; k <= dn; ++k) num[i - dn + k] -= c * den[k];
  }
  return quot;
}

struct Modulus {
  Poly phi_poly;
  std::vector<Poly> powers;  // zeta^e mod Phi_N for e in [0, N)
};

Poly build_cyclotomic(long n, std::map<long, Modulus>& cache);

const Modulus& modulus(long n, std::map<long, Modulus>& cache) {
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Modulus mod;
  mod.phi_poly = build_cyclotomic(n, cache);
  std::size_t deg = mod.phi_poly.size() - 1;
  Poly cur(deg, 0);
  cur[0] = 1;
  for (long e = 0; e < n; ++e) {
    mod.powers.push_back(cur);
    // multiply by zeta and reduce
    std::int64_t top = cur[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::size_t i = 0; i < deg; ++i) cur[i] -= top * mod.phi_poly[i];
  }
  return cache.emplace(n, std::move(mod)).first->second;
}

Poly build_cyclotomic(long n, std::map<long, Modulus>& cache) {
  // x^n - 1 = prod_{d | n} Phi_d
  Poly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) num = divide_monic(num, modulus(d, cache).phi_poly);
  return num;
}

std::mutex registry_mutex;
std::map<long, Modulus>& registry() {
  static std::map<long, Modulus> cache;
  return cache;
}

const Modulus& lookup(long n) {
  if (n < 1) throw InvalidArgument("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(registry_mutex);
  return modulus(n, registry());
}

long positive_mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(long order) { return lookup(order).phi_poly; }

const std::vector<std::int64_t>& root_power_coordinates(long order, long exponent) {
  return lookup(order).powers[positive_mod(exponent, order)];
}

CycloElement::CycloElement(long order) : order_(order), coeffs_(euler_phi(order)) {}

CycloElement::CycloElement(long order, std::vector<Rational> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  if (static_cast<long>(coeffs_.size()) != euler_phi(order))
    throw DimensionMismatch("cyclotomic element needs phi(N) coordinates");
}

CycloElement CycloElement::from_rational(long order, const Rational& r) {
  CycloElement x(order);
  x.coeffs_[0] = r;
  return x;
}

CycloElement CycloElement::root_power(long order, long exponent) {
  const auto& coords = root_power_coordinates(order, exponent);
  CycloElement x(order);
  for (std::size_t i = 0; i < coords.size(); ++i) x.coeffs_[i] = Rational(coords[i]);
  return x;
}

bool CycloElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycloElement::is_one() const {
  if (!coeffs_[0].is_one()) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

bool CycloElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

CycloElement CycloElement::embed(long target_order) const {
  if (target_order % order_ != 0) throw InvalidArgument("embedding needs N | M");
  if (target_order == order_) return *this;
  long step = target_order / order_;
  CycloElement out(target_order);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const auto& coords = root_power_coordinates(target_order, static_cast<long>(i) * step);
    for (std::size_t k = 0; k < coords.size(); ++k)
      if (coords[k] != 0) out.coeffs_[k].add_product(coeffs_[i], Rational(coords[k]));
  }
  return out;
}

void CycloElement::require_same_order(const CycloElement& other) const {
  if (order_ != other.order_) throw InvalidArgument("cyclotomic elements of different orders");
}

CycloElement& CycloElement::operator+=(const CycloElement& other) {
  require_same_order(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& other) {
  require_same_order(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

namespace {

// Full product reduced modulo Phi_N, written into out.
void multiply_into(const std::vector<Rational>& a, const std::vector<Rational>& b, long order,
                   std::vector<Rational>& out) {
  std::size_t d = a.size();
  if (d == 1) {
    out.assign(1, a[0] * b[0]);
    return;
  }
  std::vector<Rational> full(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (!b[j].is_zero()) full[i + j].add_product(a[i], b[j]);
  }
  const auto& phi = cyclotomic_polynomial(order);
  for (std::size_t t = 2 * d - 2; t >= d; --t) {
    if (full[t].is_zero()) continue;
    Rational c = full[t];
    for (std::size_t k = 0; k < d; ++k)
      if (phi[k] != 0) full[t - d + k].sub_product(c, Rational(phi[k]));
  }
  full.resize(d);
  out = std::move(full);
}

}  // namespace

CycloElement& CycloElement::operator*=(const CycloElement& other) {
  require_same_order(other);
  std::vector<Rational> out;
  multiply_into(coeffs_, other.coeffs_, order_, out);
  coeffs_ = std::move(out);
  return *this;
}

void CycloElement::sub_product(const CycloElement& a, const CycloElement& b) {
  require_same_order(a);
  require_same_order(b);
  if (coeffs_.size() == 1) {
    coeffs_[0].sub_product(a.coeffs_[0], b.coeffs_[0]);
    return;
  }
  std::vector<Rational> prod;
  multiply_into(a.coeffs_, b.coeffs_, order_, prod);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= prod[i];
}

void CycloElement::add_product(const CycloElement& a, const CycloElement& b) {
  require_same_order(a);
  require_same_order(b);
  if (coeffs_.size() == 1) {
    coeffs_[0].add_product(a.coeffs_[0], b.coeffs_[0]);
    return;
  }
  std::vector<Rational> prod;
  multiply_into(a.coeffs_, b.coeffs_, order_, prod);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += prod[i];
}

void CycloElement::assign_product(const CycloElement& a, const CycloElement& b) {
  a.require_same_order(b);
  if (order_ != a.order_) *this = CycloElement(a.order_);
  if (coeffs_.size() == 1) {
    coeffs_[0].assign_product(a.coeffs_[0], b.coeffs_[0]);
    return;
  }
  multiply_into(a.coeffs_, b.coeffs_, order_, coeffs_);
}

void CycloElement::set_zero() {
  for (auto& c : coeffs_) c.set_zero();
}

CycloElement operator-(const CycloElement& a) {
  CycloElement out(a.order_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] = -a.coeffs_[i];
  return out;
}

bool operator==(const CycloElement& a, const CycloElement& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

CycloElement CycloElement::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero");
  std::size_t d = coeffs_.size();
  if (d == 1) return from_rational(order_, coeffs_[0].inverse());
  // Column j of the multiplication matrix is this * zeta^j; solve M y = e_0.
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  CycloElement col = *this;
  CycloElement zeta = root_power(order_, 1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coeffs_[i];
    col *= zeta;
  }
  m[0][d] = Rational(1);
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (m[piv][c].is_zero()) ++piv;
    std::swap(m[piv], m[c]);
    Rational inv = m[c][c].inverse();
    for (std::size_t k = c; k <= d; ++k) m[c][k] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      Rational f = m[r][c];
      for (std::size_t k = c; k <= d; ++k) m[r][k].sub_product(f, m[c][k]);
    }
  }
  CycloElement out(order_);
  for (std::size_t i = 0; i < d; ++i) out.coeffs_[i] = m[i][d];
  return out;
}

CycloElement CycloElement::pow(long exponent) const {
  CycloElement base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  CycloElement result = from_rational(order_, Rational(1));
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string CycloElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    bool negative = c.sign() < 0;
    Rational mag = negative ? -c : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.to_string();
      continue;
    }
    if (!mag.is_one()) out << mag.to_string() << '*';
    out << "zeta" << order_;
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

CycloElement cyclotomic_root(long order) {
  if (order < 1) throw InvalidArgument("root order must be positive");
  return CycloElement::root_power(order, 1);
}

std::pair<CycloElement, CycloElement> q_analogues(long n, const CycloElement& q) {
  if (n < 1) throw InvalidArgument("q-analogue needs n >= 1");
  CycloElement one = CycloElement::from_rational(q.order(), Rational(1));
  CycloElement integer = one;
  CycloElement factorial = one;
  CycloElement power = one;
  for (long k = 2; k <= n; ++k) {
    power *= q;
    integer += power;  // now (k)_q
    factorial *= integer;
  }
  return {integer, factorial};
}

std::optional<long> root_of_unity_order(const CycloElement& x) {
  if (x.is_zero()) return std::nullopt;
  // Roots of unity in Q(zeta_N) have order dividing lcm(2, N).
  long bound = std::lcm(2L, x.order());
  if (!x.pow(bound).is_one()) return std::nullopt;
  for (long d = 1; d <= bound; ++d)
    if (bound % d == 0 && x.pow(d).is_one()) return d;
  return bound;
}

}  // namespace ybn::exact
