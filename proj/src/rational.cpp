#include "qhrep/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qhrep {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
        ((c == '-' || c == '+') && (i == 0 || text[i - 1] == '/'))) {
      continue;
    }
    throw std::invalid_argument("malformed rational literal: " + text);
  }
  Rational r;
  if (r.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
  if (r.get_den() == 0) {
    throw std::invalid_argument("rational with zero denominator: " + text);
  }
  r.canonicalize();
  return r;
}

Rational rational_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0 && exp < 0) throw std::domain_error("0 raised to negative power");
  const unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  if (exp < 0) r = 1 / r;
  return r;
}

Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace qhrep
