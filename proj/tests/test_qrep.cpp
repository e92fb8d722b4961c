#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "qhrep/qrep.hpp"

using namespace qhrep;

namespace {
CycNumber rat(long n, long num, long den = 1) {
  return CycNumber::from_rational(n, make_rational(num, den));
}
}  // namespace

TEST_CASE("p=1 magnitudes reproduce the |a_1|^2 = |a_3|^2 = |a_2|^2 - 1 law") {
  const auto mags = solve_coefficients(1, Rational(1));
  REQUIRE(mags.size() == 3);
  CHECK(mags[0] == rat(3, 1));
  CHECK(mags[1] == rat(3, 2));
  CHECK(mags[2] == rat(3, 1));
  CHECK(mags[0] == mags[2]);
  CHECK(mags[1] == mags[0] + Rational(1));
}

TEST_CASE("p=2 magnitudes walk the chain through the golden ratio") {
  const auto mags = solve_coefficients(2, Rational(1));
  REQUIRE(mags.size() == 5);
  const CycNumber q = root_of_unity(5);
  const CycNumber phi = q_number(2, q) + Rational(1);  // (1+sqrt(5))/2
  CHECK(mags[0] == rat(5, 1));
  CHECK(mags[1] == rat(5, 1));
  CHECK(mags[2] == phi);
  CHECK(mags[3] == rat(5, 2));
  CHECK(mags[4] == phi);
  CHECK(phi.embed().real() == doctest::Approx(1.6180339887).epsilon(1e-9));
}

TEST_CASE("zero floor is rejected") {
  CHECK_THROWS_AS(solve_coefficients(1, Rational(0)), std::domain_error);
  CHECK_THROWS_AS(solve_coefficients(1, make_rational(-1, 2)), std::domain_error);
  CHECK_THROWS_AS(solve_coefficients(0, Rational(1)), std::invalid_argument);
}

TEST_CASE("q-number chain closure: the step-2 cycle sums to zero") {
  for (long p = 1; p <= 12; ++p) {
    const long n = 2 * p + 1;
    const CycNumber q = root_of_unity(n);
    CycNumber sum = CycNumber::zero(n);
    for (long i = 1; i <= n; ++i) sum = sum + q_number(i, q);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("solved representations verify for p = 1..12") {
  for (long p = 1; p <= 12; ++p) {
    const CyclicRep rep = build_rep(p, solve_coefficients(p, Rational(1)));
    const RepVerification v = verify_rep(rep);
    CHECK(v.algebra.pass);
    CHECK(v.unitarity.pass);
    CHECK(v.casimir.report.pass);
    CHECK(v.cyclic);
    CHECK(v.pass);
  }
}

TEST_CASE("base shift leaves the algebra checks invariant") {
  for (const Rational floor_value : {Rational(1), make_rational(7, 2)}) {
    const CyclicRep rep = build_rep(3, solve_coefficients(3, floor_value));
    CHECK(verify_algebra(rep).pass);
  }
}

TEST_CASE("p=1 matrices match the explicit 3-dimensional form") {
  const CyclicRep rep = build_rep(1, solve_coefficients(1, Rational(1)));

  // K = diag(qt, qt^2, 1) with qt = exp(2 pi i / 3).
  const std::complex<double> qt = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const Eigen::MatrixXcd K = rep.matrix_K();
  CHECK(std::abs(K(0, 0) - qt) < 1e-12);
  CHECK(std::abs(K(1, 1) - qt * qt) < 1e-12);
  CHECK(std::abs(K(2, 2) - 1.0) < 1e-12);
  CHECK(rep.k_eigenvalue(3) == CycNumber::one(3));

  // E+ nonzero exactly at (1,3), (2,1), (3,2) in 1-based terms.
  const Eigen::MatrixXcd Ep = rep.matrix_Eplus();
  CHECK(std::abs(Ep(0, 2)) > 0.5);
  CHECK(std::abs(Ep(1, 0)) > 0.5);
  CHECK(std::abs(Ep(2, 1)) > 0.5);
  CHECK(std::abs(Ep(0, 0)) == 0.0);
  CHECK(std::abs(Ep(0, 1)) == 0.0);
  CHECK(std::abs(Ep(1, 1)) == 0.0);
  CHECK(std::abs(Ep(1, 2)) == 0.0);
  CHECK(std::abs(Ep(2, 0)) == 0.0);
  CHECK(std::abs(Ep(2, 2)) == 0.0);
}

TEST_CASE("ladder matrices are weighted cyclic permutations") {
  for (long p : {1L, 2L, 5L}) {
    const CyclicRep rep = build_rep(p, solve_coefficients(p, Rational(1)));
    const Eigen::MatrixXcd Ep = rep.matrix_Eplus();
    const long n = rep.dim();
    for (long r = 0; r < n; ++r) {
      long nonzero_row = 0;
      long nonzero_col = 0;
      for (long c = 0; c < n; ++c) {
        if (std::abs(Ep(r, c)) > 0) ++nonzero_row;
        if (std::abs(Ep(c, r)) > 0) ++nonzero_col;
      }
      CHECK(nonzero_row == 1);
      CHECK(nonzero_col == 1);
    }
  }
}

TEST_CASE("casimir scalars at p=1: K^3 = 1 and E+^3 = sqrt(2)") {
  const CyclicRep rep = build_rep(1, solve_coefficients(1, Rational(1)));
  const CasimirScalars cas = casimirs(rep);
  CHECK(cas.report.pass);
  CHECK(cas.k_scalar == CycNumber::one(3));
  CHECK(std::abs(cas.eplus_scalar - std::sqrt(2.0)) < 1e-10);
  CHECK(std::abs(cas.eminus_scalar - std::conj(cas.eplus_scalar)) < 1e-12);
}

TEST_CASE("the algebra checks are lambda-aware") {
  // lambda = q shifts the magnitude chain by one slot. The lambda = 1
  // solution keeps unitarity and K^3 = 1 but fails the commutator ...
  const CycNumber q = root_of_unity(3);
  const auto mags = solve_coefficients(1, Rational(1));
  const CyclicRep mismatched = build_rep(1, mags, std::nullopt, q);
  CHECK(!verify_algebra(mismatched).pass);
  CHECK(verify_unitarity(mismatched).pass);
  CHECK(casimirs(mismatched).k_scalar == CycNumber::one(3));

  // ... while the rotated chain solves the lambda = q representation.
  const std::vector<CycNumber> rotated{mags[2], mags[0], mags[1]};
  const CyclicRep matched = build_rep(1, rotated, std::nullopt, q);
  CHECK(verify_rep(matched).pass);
}

TEST_CASE("doubling |a_2|^2 breaks the commutator on slot 2") {
  auto mags = solve_coefficients(1, Rational(1));
  mags[1] = mags[1] * Rational(2);  // (1, 4, 1)
  const CyclicRep rep = build_rep(1, mags);
  const VerifyReport report = verify_algebra(rep);
  CHECK(!report.pass);
  const VerifyCheck* comm = report.find("commutator");
  REQUIRE(comm != nullptr);
  CHECK(!comm->pass);
  // residual = (|a_i|^2 - |a_(i-2)|^2) + [i]_q: slot 2 gives (4-1) - 1 = 2.
  CHECK(comm->residuals[1] == rat(3, 2));
  CHECK(comm->residuals[2].is_zero());
  CHECK(!comm->residuals[0].is_zero());
}

TEST_CASE("build_rep refuses structural invariant violations") {
  auto mags = solve_coefficients(1, Rational(1));
  auto broken = mags;
  broken[0] = CycNumber::zero(3);
  CHECK_THROWS_AS(build_rep(1, broken), std::domain_error);

  broken = mags;
  broken[0] = -broken[0];
  CHECK_THROWS_AS(build_rep(1, broken), std::domain_error);

  broken = mags;
  broken[2] = root_of_unity(3);  // not in the real subfield
  CHECK_THROWS_AS(build_rep(1, broken), std::domain_error);

  CHECK_THROWS_AS(build_rep(1, mags, std::vector<std::complex<double>>{{2, 0}, {1, 0}, {1, 0}}),
                  std::domain_error);
  CHECK_THROWS_AS(build_rep(2, mags), std::invalid_argument);
}

TEST_CASE("verify_cyclic detects an annihilated basis vector") {
  for (long p : {1L, 5L}) {
    CHECK(verify_cyclic(build_rep(p, solve_coefficients(p, Rational(1)))));
  }
  // Forced-zero slot, assembled directly since build_rep refuses it.
  const long n = 3;
  CyclicRep rep{1,
                root_of_unity(n),
                CycNumber::one(n),
                {CycNumber::zero(n), rat(n, 2), rat(n, 1)},
                {{1, 0}, {1, 0}, {1, 0}}};
  CHECK(!verify_cyclic(rep));
}
