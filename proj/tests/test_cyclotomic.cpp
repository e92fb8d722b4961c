#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "qhrep/cyclotomic.hpp"

using namespace qhrep;

namespace {

long totient_brute(long n) {
  long count = 0;
  for (long k = 1; k <= n; ++k) {
    long a = k, b = n;
    while (b != 0) {
      long t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) ++count;
  }
  return count;
}

CycNumber random_element(long order, std::mt19937& rng) {
  const long deg = cyclotomic_polynomial(order).degree();
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> c;
  c.reserve(deg);
  for (long i = 0; i < deg; ++i) c.push_back(make_rational(num(rng), den(rng)));
  return CycNumber::from_coeffs(order, std::move(c));
}

CycNumber random_nonzero(long order, std::mt19937& rng) {
  for (;;) {
    CycNumber a = random_element(order, rng);
    if (!a.is_zero()) return a;
  }
}

}  // namespace

TEST_CASE("cyclotomic polynomials at small odd orders") {
  CHECK(cyclotomic_polynomial(1).str() == "x - 1");
  CHECK(cyclotomic_polynomial(3).str() == "x^2 + x + 1");
  CHECK(cyclotomic_polynomial(9).str() == "x^6 + x^3 + 1");
  CHECK(cyclotomic_polynomial(15).str() == "x^8 - x^7 + x^5 - x^4 + x^3 - x + 1");
  CHECK_THROWS_AS(cyclotomic_polynomial(4), std::invalid_argument);
  CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST_CASE("product of Phi_d over divisors equals x^n - 1; degree is the totient") {
  for (long n = 1; n <= 25; n += 2) {
    CycPoly prod(std::vector<Integer>{Integer(1)});
    for (long d = 1; d <= n; ++d) {
      if (n % d == 0) prod = prod * cyclotomic_polynomial(d);
    }
    CHECK(prod == CycPoly::x_pow_minus_one(n));
    if (n >= 3) CHECK(cyclotomic_polynomial(n).degree() == totient_brute(n));
  }
}

TEST_CASE("root_of_unity basics") {
  const CycNumber q = root_of_unity(3);
  CHECK(q * q * q == CycNumber::one(3));
  CHECK(q != CycNumber::one(3));
  const auto z = q.embed();
  CHECK(z.real() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(z.imag() == doctest::Approx(-std::sqrt(3.0) / 2.0).epsilon(1e-12));
  CHECK_THROWS_AS(root_of_unity(4), std::invalid_argument);
  CHECK_THROWS_AS(root_of_unity(1), std::invalid_argument);
}

TEST_CASE("field operation examples") {
  const CycNumber q3 = root_of_unity(3);
  CHECK(q3 + q3.conjugate() == CycNumber::from_rational(3, Rational(-1)));
  CHECK(CycNumber::one(5).inverse() == CycNumber::one(5));
  CHECK(root_of_unity(5).pow(5) == CycNumber::one(5));
  CHECK_THROWS_AS(CycNumber::zero(5).inverse(), std::domain_error);
  CHECK_THROWS_AS(q3 + CycNumber::one(5), std::invalid_argument);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(20240813);
  for (long order : {3L, 5L, 7L, 9L, 15L, 21L, 25L}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const CycNumber a = random_nonzero(order, rng);
      CHECK(a * a.inverse() == CycNumber::one(order));
    }
    for (int trial = 0; trial < 200; ++trial) {
      const CycNumber a = random_element(order, rng);
      const CycNumber b = random_element(order, rng);
      const CycNumber c = random_element(order, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a.conjugate().conjugate() == a);
      CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    }
  }
}

TEST_CASE("q_number identities") {
  for (long n : {3L, 5L, 7L, 9L, 15L}) {
    const CycNumber q = root_of_unity(n);
    CHECK(q_number(1, q) == CycNumber::one(n));
    CHECK(q_number(n, q) == CycNumber::zero(n));
    CHECK(q_number(n - 1, q) == CycNumber::from_rational(n, Rational(-1)));
    std::mt19937 rng(7 * n);
    std::uniform_int_distribution<long> ms(-40, 40);
    for (int trial = 0; trial < 50; ++trial) {
      const long m = ms(rng);
      const long mm = ((m % n) + n) % n;
      CHECK(q_number(m, q) == q_number(mm, q));
      CHECK(q_number(n - mm, q) == -q_number(mm, q));
      CHECK(q_number(m, q).conjugate() == q_number(m, q));
    }
  }
}

TEST_CASE("q_number 2 at order 5 embeds to the inverse golden ratio") {
  const CycNumber q = root_of_unity(5);
  const auto v = q_number(2, q).embed();
  CHECK(v.real() == doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0).epsilon(1e-12));
  CHECK(std::abs(v.imag()) < 1e-12);
}

TEST_CASE("embedding examples and homomorphism property") {
  CHECK(std::abs(CycNumber::one(3).embed() - std::complex<double>(1.0, 0.0)) < 1e-15);
  const CycNumber q = root_of_unity(3);
  CHECK(std::abs((q + q * q).embed() - std::complex<double>(-1.0, 0.0)) < 1e-12);

  std::mt19937 rng(424242);
  for (long order : {3L, 9L, 25L}) {
    for (int trial = 0; trial < 200; ++trial) {
      const CycNumber a = random_element(order, rng);
      const CycNumber b = random_element(order, rng);
      CHECK(std::abs((a * b).embed() - a.embed() * b.embed()) < 1e-12);
      CHECK(std::abs((a + b).embed() - (a.embed() + b.embed())) < 1e-12);
      CHECK(std::abs(a.conjugate().embed() - std::conj(a.embed())) < 1e-12);
    }
  }
}
