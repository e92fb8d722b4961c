#include "qhrep/filling.hpp"

#include <stdexcept>

namespace qhrep {

FillingFactor::FillingFactor(const Integer& p, const Integer& q) {
  if (q == 0) throw std::domain_error("filling factor with zero denominator");
  value_ = make_rational(p, q);
  if (value_.get_den() % 2 == 0) {
    throw std::domain_error("even denominator out of scope: " + to_string(value_));
  }
  if (value_ <= 0 || value_ > 1) {
    throw std::domain_error("filling factor must satisfy 0 < P/Q <= 1: " + to_string(value_));
  }
}

FillingFactor::FillingFactor(const Rational& value)
    : FillingFactor(value.get_num(), value.get_den()) {}

FillingFactor FillingFactor::parse(const std::string& text) {
  return FillingFactor(parse_rational(text));
}

std::string convention_name(Convention c) {
  return c == Convention::Minus ? "minus" : "plus";
}

Convention parse_convention(const std::string& name) {
  if (name == "minus") return Convention::Minus;
  if (name == "plus") return Convention::Plus;
  throw std::invalid_argument("unknown convention: " + name);
}

void HierarchyChain::validate() const {
  if (coeffs.empty()) throw std::domain_error("empty chain");
  if (coeffs[0] % 2 == 0) throw std::domain_error("first chain coefficient must be odd");
  if (convention == Convention::Minus && coeffs[0] <= 0) {
    throw std::domain_error("minus-convention chain must start positive");
  }
  for (size_t i = 1; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0 || coeffs[i] % 2 != 0) {
      throw std::domain_error("chain coefficients past the first must be even and nonzero");
    }
  }
}

Rational eval_chain_raw(const HierarchyChain& chain) {
  chain.validate();
  const bool minus = chain.convention == Convention::Minus;
  // t_r = a_r, then t_k = a_k -+ 1/t_(k+1); the value is 1/t_0.
  Rational t(chain.coeffs.back());
  for (size_t k = chain.coeffs.size() - 1; k-- > 0;) {
    if (t == 0) throw std::domain_error("vanishing intermediate denominator in chain");
    if (minus) {
      t = Rational(chain.coeffs[k]) - 1 / t;
    } else {
      t = Rational(chain.coeffs[k]) + 1 / t;
    }
  }
  if (t == 0) throw std::domain_error("vanishing intermediate denominator in chain");
  return 1 / t;
}

FillingFactor eval_chain(const HierarchyChain& chain) {
  const Rational nu = eval_chain_raw(chain);
  FillingFactor result(nu);
  // Valid parity chains always land on an odd denominator; reaching this
  // with an even one means the parity validation above has a hole.
  if (result.Q() % 2 == 0) throw std::logic_error("parity chain produced even denominator");
  return result;
}

namespace {

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) {
    throw std::overflow_error("chain coefficient exceeds supported size");
  }
  return z.get_si();
}

// Nearest integer to x of the given parity (0 = even, 1 = odd). Zero is
// excluded when exclude_zero is set (chain tails must be nonzero); a tie
// picks the candidate whose remainder x - k is negative for the minus
// reading, i.e. the larger candidate, matching the positive-remainder rule.
Integer nearest_with_parity(const Rational& x, int parity, bool exclude_zero,
                            bool remainder_is_minus) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Integer k1 = (((fl % 2) + 2) % 2 == parity) ? fl : fl - 1;
  Integer k2 = k1 + 2;
  if (exclude_zero) {
    if (k1 == 0) k1 -= 2;
    if (k2 == 0) k2 += 2;
  }
  const Rational d1 = x - Rational(k1);
  const Rational d2 = Rational(k2) - x;
  if (d1 < d2) return k1;
  if (d2 < d1) return k2;
  // Tie: prefer the positive remainder. rho = k - x in the minus
  // convention (k2 wins), rho = x - k in the plus convention (k1 wins).
  return remainder_is_minus ? k2 : k1;
}

}  // namespace

HierarchyChain decompose(const FillingFactor& nu, Convention convention) {
  const bool minus = convention == Convention::Minus;
  HierarchyChain chain{convention, {}};
  Rational x = 1 / nu.value();
  for (int level = 0;; ++level) {
    const int parity = (level == 0) ? 1 : 0;
    const Integer a = nearest_with_parity(x, parity, level > 0, minus);
    chain.coeffs.push_back(to_long(a));
    const Rational rho = minus ? Rational(a) - x : x - Rational(a);
    if (rho == 0) break;
    const Rational next = 1 / rho;
    // The greedy quotient keeps |rho| < 1, so denominators shrink.
    if (next.get_den() >= x.get_den() && level > 0) {
      throw std::logic_error("continued-fraction denominators failed to decrease");
    }
    x = next;
  }
  chain.validate();
  return chain;
}

long slot_of(const FillingFactor& nu, long p) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  const Integer n(2 * p + 1);
  if (n % nu.Q() != 0) {
    throw std::domain_error("filling " + nu.str() + " has no slot at p = " +
                            std::to_string(p));
  }
  const Integer slot = nu.P() * (n / nu.Q());
  return slot.get_si();
}

Rational nu_finite(long N, long L) {
  if (N < 2) throw std::invalid_argument("need N >= 2");
  if (L < 1) throw std::invalid_argument("need L >= 1");
  return make_rational(Integer(N) * Integer(N - 1), Integer(2) * Integer(L));
}

BWParams bw_parameters(const HierarchyChain& plus_chain,
                       std::optional<std::vector<int>> signs) {
  if (plus_chain.convention != Convention::Plus) {
    throw std::invalid_argument("bw_parameters expects a plus-convention chain");
  }
  plus_chain.validate();
  const size_t levels = plus_chain.coeffs.size();  // r + 1

  BWParams out;
  out.theta.push_back(Rational(0));
  out.qweights.push_back(Rational(-1));
  for (size_t a = 1; a < levels; ++a) {
    const int sign = (a % 2 == 0) ? 1 : -1;  // (-1)^a
    const Rational denom = Rational(plus_chain.coeffs[a - 1]) - sign * out.theta[a - 1];
    if (denom == 0) throw std::domain_error("zero denominator in theta recursion");
    out.theta.push_back(Rational(sign) / denom);
    const int sign_next = -sign;  // (-1)^(a+1)
    out.qweights.push_back(sign_next * out.qweights[a - 1] * out.theta[a]);
  }

  if (signs) {
    if (signs->size() != levels) {
      throw std::invalid_argument("need one interlevel sign per level");
    }
    for (size_t i = 0; i + 1 < levels; ++i) {
      if ((*signs)[i] != 1 && (*signs)[i] != -1) {
        throw std::invalid_argument("interlevel signs must be +-1");
      }
    }
    if (signs->back() != 0) {
      throw std::invalid_argument("final interlevel sign must be 0");
    }
    out.signs = *signs;
  } else {
    out.signs.assign(levels, 1);
    out.signs.back() = 0;
  }
  return out;
}

}  // namespace qhrep
