#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <numbers>
#include <set>

#include "qhrep/classify.hpp"

using namespace qhrep;

TEST_CASE("state space labels enumerate i/(2p+1)") {
  const StateSpace s1 = build_state_space(1);
  REQUIRE(s1.labels.size() == 3);
  CHECK(s1.labels[0].nu.str() == "1/3");
  CHECK(s1.labels[1].nu.str() == "2/3");
  CHECK(s1.labels[2].nu.str() == "1");

  const StateSpace s2 = build_state_space(2);
  REQUIRE(s2.labels.size() == 5);
  CHECK(s2.labels[0].nu.str() == "1/5");
  CHECK(s2.labels[1].nu.str() == "2/5");
  CHECK(s2.labels[2].nu.str() == "3/5");
  CHECK(s2.labels[3].nu.str() == "4/5");
  CHECK(s2.labels[4].nu.str() == "1");

  Rational sum(0);
  for (const auto& l : s2.labels) sum += l.nu.value();
  CHECK(sum == Rational(3));  // p + 1
}

TEST_CASE("attachments must realize the slot fillings and be orthogonal") {
  // N = 4: the three trial states are pairwise orthogonal.
  const StateSpace ok =
      build_state_space(1, {laughlin(4, 3), daughter(4), laughlin(4, 1)});
  CHECK(ok.attached.size() == 3);

  // N = 2: <psi_{1/3}, psi_{2/3}> != 0, construction refused citing the pair.
  try {
    build_state_space(1, {laughlin(2, 3), daughter(2), laughlin(2, 1)});
    FAIL("expected orthogonality refusal");
  } catch (const std::domain_error& e) {
    const std::string what = e.what();
    CHECK(what.find("1/3") != std::string::npos);
    CHECK(what.find("2/3") != std::string::npos);
  }

  // Wrong slot order.
  CHECK_THROWS_AS(build_state_space(1, {laughlin(4, 1)}), std::domain_error);
  // Mixed N.
  CHECK_THROWS_AS(build_state_space(1, {laughlin(4, 3), daughter(2)}),
                  std::domain_error);
}

TEST_CASE("filling operator equals K exactly for p <= 12") {
  for (long p = 1; p <= 12; ++p) {
    const StateSpace space = build_state_space(p);
    const ClassOp k = filling_operator(space);
    const CyclicRep rep = build_rep(p, solve_coefficients(p, Rational(1)));
    REQUIRE(static_cast<long>(k.diagonal.size()) == rep.dim());
    for (long i = 1; i <= rep.dim(); ++i) {
      CHECK(k.diagonal[i - 1] == rep.k_eigenvalue(i));
    }
  }
}

TEST_CASE("p=1 filling operator renders the explicit phases") {
  const ClassOp k = filling_operator(build_state_space(1));
  const std::complex<double> w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  CHECK(std::abs(k.matrix(0, 0) - w) < 1e-12);
  CHECK(std::abs(k.matrix(1, 1) - w * w) < 1e-12);
  CHECK(std::abs(k.matrix(2, 2) - 1.0) < 1e-12);
}

TEST_CASE("attachments do not change the algebraic output") {
  const StateSpace bare = build_state_space(1);
  const StateSpace realized =
      build_state_space(1, {laughlin(4, 3), daughter(4), laughlin(4, 1)});
  const ClassOp k0 = filling_operator(bare);
  const ClassOp k1 = filling_operator(realized);
  for (size_t i = 0; i < k0.diagonal.size(); ++i) {
    CHECK(k0.diagonal[i] == k1.diagonal[i]);
  }
  const auto mags = solve_coefficients(1, Rational(1));
  const auto [e0p, e0m] = ladder_operators(bare, mags);
  const auto [e1p, e1m] = ladder_operators(realized, mags);
  CHECK((e0p.matrix - e1p.matrix).cwiseAbs().maxCoeff() == 0.0);
  CHECK((e0m.matrix - e1m.matrix).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("ladder operators close the algebra with the filling operator") {
  const StateSpace space = build_state_space(1);
  const auto mags = solve_coefficients(1, Rational(1));
  const auto [eplus, eminus] = ladder_operators(space, mags);
  CHECK(std::abs(eplus.matrix(0, 2)) > 0.5);
  CHECK(std::abs(eplus.matrix(1, 0)) > 0.5);
  CHECK(std::abs(eplus.matrix(2, 1)) > 0.5);
  CHECK((eplus.matrix.adjoint() - eminus.matrix).cwiseAbs().maxCoeff() == 0.0);

  // The triple is the cyclic representation; its relations hold verbatim.
  CHECK(verify_algebra(build_rep(1, mags)).pass);

  // Phases cancel in every relation.
  const std::vector<std::complex<double>> flipped(3, {-1.0, 0.0});
  CHECK(verify_rep(build_rep(1, mags, flipped)).pass);

  auto broken = mags;
  broken[1] = CycNumber::zero(3);
  CHECK_THROWS_AS(ladder_operators(space, broken), std::domain_error);
}

TEST_CASE("classification end to end") {
  const Classification c = classify_nu(FillingFactor::parse("2/5"));
  CHECK(c.p == 2);
  CHECK(c.slot == 2);
  CHECK(c.minus_chain.coeffs == std::vector<long>{3, 2});
  CHECK(c.plus_chain.coeffs == std::vector<long>{3, -2});
  CHECK(c.verification.pass);

  const Classification reduced = classify_nu(FillingFactor::parse("3/9"));
  CHECK(reduced.nu.str() == "1/3");
  CHECK(reduced.p == 1);
  CHECK(reduced.slot == 1);

  const Classification unit = classify_nu(FillingFactor::parse("1"));
  CHECK(unit.p == 1);
  CHECK(unit.slot == 3);

  CHECK_THROWS_AS(FillingFactor::parse("1/2"), std::domain_error);
}

TEST_CASE("slot fillings sum to p + 1 for p <= 12") {
  for (long p = 1; p <= 12; ++p) {
    Rational sum(0);
    for (const auto& label : build_state_space(p).labels) sum += label.nu.value();
    CHECK(sum == Rational(p + 1));
  }
}

TEST_CASE("classification succeeds for every filling the chain oracle reaches") {
  // Full parity enumeration with r <= 3 and |coeff| <= 9, every convention;
  // classification (with representation verification) is run once per
  // distinct filling up to denominator 33, desk scale for the exact layer.
  std::set<Rational> seen;
  const std::vector<long> first = {1, 3, 5, 7, 9};
  const std::vector<long> later = {-8, -6, -4, -2, 2, 4, 6, 8};
  std::vector<std::vector<long>> chains;
  for (long a0 : first) chains.push_back({a0});
  for (size_t i = 0; i < chains.size(); ++i) {
    if (chains[i].size() >= 4) continue;
    for (long a : later) {
      auto next = chains[i];
      next.push_back(a);
      chains.push_back(std::move(next));
    }
  }
  for (Convention conv : {Convention::Minus, Convention::Plus}) {
    for (const auto& coeffs : chains) {
      Rational value;
      try {
        value = eval_chain_raw(HierarchyChain{conv, coeffs});
      } catch (const std::domain_error&) {
        continue;
      }
      if (value <= 0 || value > 1 || value.get_den() > 33) continue;
      if (!seen.insert(value).second) continue;
      const Classification c = classify_nu(FillingFactor(value));
      CHECK(c.verification.pass);
      CHECK(eval_chain(c.minus_chain).value() == value);
      CHECK(eval_chain(c.plus_chain).value() == value);
      CHECK(Rational(c.slot) == value * Rational(2 * c.p + 1));
    }
  }
  CHECK(seen.size() > 100);
}
