#include "qhrep/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qhrep {

namespace {

void trim(std::vector<Integer>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Rational polynomials, coefficients low to high, used for reduction and
// inversion mod Phi_n.
using RatPoly = std::vector<Rational>;

void trim(RatPoly& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

long degree(const RatPoly& p) { return static_cast<long>(p.size()) - 1; }

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

RatPoly sub_scaled(RatPoly a, const RatPoly& b, const Rational& s) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= s * b[i];
  trim(a);
  return a;
}

// In-place remainder of p mod the monic integer polynomial phi.
void reduce_mod(RatPoly& p, const CycPoly& phi) {
  const long d = phi.degree();
  const auto& m = phi.coeffs();
  trim(p);
  while (degree(p) >= d) {
    const long k = degree(p);
    const Rational lead = p[k];
    p[k] = 0;
    for (long j = 0; j < d; ++j) p[k - d + j] -= lead * m[j];
    trim(p);
  }
}

// Extended Euclid over Q[x]: returns u with u*a == g (mod b), g the monic gcd.
// Here b = Phi_n is irreducible, so g == 1 for nonzero a and u is 1/a.
RatPoly invert_mod(const RatPoly& a, const CycPoly& phi) {
  RatPoly r0(phi.coeffs().begin(), phi.coeffs().end());
  RatPoly r1 = a;
  RatPoly s0 = {};              // coefficient of `a` in r0
  RatPoly s1 = {Rational(1)};   // coefficient of `a` in r1
  trim(r1);
  while (!r1.empty()) {
    // Divide r0 by r1.
    RatPoly q;
    RatPoly rem = r0;
    const long d1 = degree(r1);
    const Rational inv_lead = 1 / r1[d1];
    while (degree(rem) >= d1) {
      const long k = degree(rem);
      const Rational c = rem[k] * inv_lead;
      if (static_cast<long>(q.size()) <= k - d1) q.resize(k - d1 + 1, Rational(0));
      q[k - d1] = c;
      RatPoly shifted(k - d1, Rational(0));
      shifted.insert(shifted.end(), r1.begin(), r1.end());
      rem = sub_scaled(rem, shifted, c);
    }
    RatPoly s2 = sub_scaled(s0, mul(q, s1), Rational(1));
    r0 = std::move(r1);
    s0 = std::move(s1);
    r1 = std::move(rem);
    s1 = std::move(s2);
  }
  if (degree(r0) != 0) throw std::logic_error("gcd with Phi_n is not 1");
  const Rational scale = 1 / r0[0];
  for (auto& c : s0) c *= scale;
  reduce_mod(s0, phi);
  return s0;
}

}  // namespace

CycPoly::CycPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

CycPoly CycPoly::x_pow_minus_one(long n) {
  std::vector<Integer> c(n + 1, Integer(0));
  c[0] = -1;
  c[n] = 1;
  return CycPoly(std::move(c));
}

CycPoly operator*(const CycPoly& a, const CycPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return CycPoly{};
  std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return CycPoly(std::move(r));
}

CycPoly CycPoly::divided_exactly_by(const CycPoly& divisor) const {
  if (divisor.coeffs_.empty()) throw std::logic_error("division by zero polynomial");
  std::vector<Integer> rem = coeffs_;
  const long dd = divisor.degree();
  const Integer& lead = divisor.coeffs_.back();
  std::vector<Integer> quot(rem.size() > static_cast<size_t>(dd)
                                ? rem.size() - dd
                                : 0,
                            Integer(0));
  for (long k = static_cast<long>(rem.size()) - 1; k >= dd; --k) {
    if (rem[k] == 0) continue;
    if (rem[k] % lead != 0) throw std::logic_error("inexact polynomial division");
    const Integer c = rem[k] / lead;
    quot[k - dd] = c;
    for (long j = 0; j <= dd; ++j) rem[k - dd + j] -= c * divisor.coeffs_[j];
  }
  trim(rem);
  if (!rem.empty()) throw std::logic_error("inexact polynomial division");
  return CycPoly(std::move(quot));
}

std::string CycPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    const Integer a = abs(c);
    if (a != 1 || k == 0) os << a.get_str();
    if (k > 0) os << "x";
    if (k > 1) os << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

const CycPoly& cyclotomic_polynomial(long n) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument("cyclotomic order must be odd and >= 1");
  }
  static std::map<long, CycPoly> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed without
  // recursion on the cache lock by walking divisors in increasing order.
  for (long m = 1; m <= n; ++m) {
    if (n % m != 0 || cache.count(m)) continue;
    CycPoly prod(std::vector<Integer>{Integer(1)});
    for (long d = 1; d < m; ++d) {
      if (m % d == 0) prod = prod * cache.at(d);
    }
    cache.emplace(m, CycPoly::x_pow_minus_one(m).divided_exactly_by(prod));
  }
  return cache.at(n);
}

CycNumber::CycNumber(long order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {}

namespace {
void check_order(long n) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("CycNumber order must be odd and >= 3");
  }
}
}  // namespace

CycNumber CycNumber::zero(long order) {
  check_order(order);
  const long d = cyclotomic_polynomial(order).degree();
  return CycNumber(order, std::vector<Rational>(d, Rational(0)));
}

CycNumber CycNumber::one(long order) {
  return from_rational(order, Rational(1));
}

CycNumber CycNumber::from_rational(long order, const Rational& value) {
  CycNumber r = zero(order);
  r.coeffs_[0] = value;
  return r;
}

CycNumber CycNumber::from_coeffs(long order, std::vector<Rational> coeffs) {
  check_order(order);
  const CycPoly& phi = cyclotomic_polynomial(order);
  reduce_mod(coeffs, phi);
  coeffs.resize(phi.degree(), Rational(0));
  return CycNumber(order, std::move(coeffs));
}

bool CycNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycNumber::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

namespace {
void check_same_order(const CycNumber& a, const CycNumber& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("CycNumber order mismatch");
  }
}
}  // namespace

CycNumber CycNumber::operator+(const CycNumber& other) const {
  check_same_order(*this, other);
  std::vector<Rational> c = coeffs_;
  for (size_t i = 0; i < c.size(); ++i) c[i] += other.coeffs_[i];
  return CycNumber(order_, std::move(c));
}

CycNumber CycNumber::operator-(const CycNumber& other) const {
  check_same_order(*this, other);
  std::vector<Rational> c = coeffs_;
  for (size_t i = 0; i < c.size(); ++i) c[i] -= other.coeffs_[i];
  return CycNumber(order_, std::move(c));
}

CycNumber CycNumber::operator*(const CycNumber& other) const {
  check_same_order(*this, other);
  RatPoly prod(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < other.coeffs_.size(); ++j) {
      prod[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  const CycPoly& phi = cyclotomic_polynomial(order_);
  reduce_mod(prod, phi);
  prod.resize(phi.degree(), Rational(0));
  return CycNumber(order_, std::move(prod));
}

CycNumber CycNumber::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x = -x;
  return CycNumber(order_, std::move(c));
}

CycNumber CycNumber::operator+(const Rational& r) const {
  std::vector<Rational> c = coeffs_;
  c[0] += r;
  return CycNumber(order_, std::move(c));
}

CycNumber CycNumber::operator-(const Rational& r) const {
  std::vector<Rational> c = coeffs_;
  c[0] -= r;
  return CycNumber(order_, std::move(c));
}

CycNumber CycNumber::operator*(const Rational& r) const {
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x *= r;
  return CycNumber(order_, std::move(c));
}

bool CycNumber::operator==(const CycNumber& other) const {
  return order_ == other.order_ && coeffs_ == other.coeffs_;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero CycNumber");
  const CycPoly& phi = cyclotomic_polynomial(order_);
  RatPoly a = coeffs_;
  RatPoly inv = invert_mod(a, phi);
  inv.resize(phi.degree(), Rational(0));
  return CycNumber(order_, std::move(inv));
}

CycNumber CycNumber::conjugate() const {
  // q^i -> q^(-i mod n), then reduce.
  std::vector<Rational> c(order_, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const long e = (order_ - static_cast<long>(i)) % order_;
    c[e] += coeffs_[i];
  }
  return from_coeffs(order_, std::move(c));
}

CycNumber CycNumber::pow(long exp) const {
  if (exp < 0) return inverse().pow(-exp);
  CycNumber result = one(order_);
  CycNumber base = *this;
  unsigned long e = static_cast<unsigned long>(exp);
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::complex<double> CycNumber::embed() const {
  const double step = -2.0 * std::numbers::pi / static_cast<double>(order_);
  std::complex<double> acc(0.0, 0.0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    acc += to_double(coeffs_[i]) * std::polar(1.0, step * static_cast<double>(i));
  }
  return acc;
}

std::string CycNumber::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Rational c = coeffs_[i];
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (i == 0 || c != 1) os << to_string(c);
    if (i > 0 && c != 1) os << "*";
    if (i == 1) os << "q";
    if (i > 1) os << "q^" << i;
  }
  if (first) os << "0";
  return os.str();
}

CycNumber root_of_unity(long n) {
  check_order(n);
  std::vector<Rational> c(2, Rational(0));
  c[1] = 1;
  return CycNumber::from_coeffs(n, std::move(c));
}

CycNumber q_number(long m, const CycNumber& q) {
  const long n = q.order();
  const long e = ((m % n) + n) % n;
  const CycNumber num = q.pow(e) - q.pow(n - e);
  const CycNumber den = q - q.pow(n - 1);
  return num * den.inverse();
}

}  // namespace qhrep
