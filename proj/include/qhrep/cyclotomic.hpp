#pragma once

#include <complex>
#include <vector>

#include "qhrep/rational.hpp"

namespace qhrep {

/// Integer polynomial in one indeterminate, coefficients ordered low to high.
/// Used for the cyclotomic moduli Phi_n, which are monic over Z.
class CycPoly {
 public:
  CycPoly() = default;
  explicit CycPoly(std::vector<Integer> coeffs);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool operator==(const CycPoly& other) const = default;

  static CycPoly x_pow_minus_one(long n);

  friend CycPoly operator*(const CycPoly& a, const CycPoly& b);

  // Exact division; throws std::logic_error if the remainder is nonzero.
  CycPoly divided_exactly_by(const CycPoly& divisor) const;

  std::string str() const;

 private:
  std::vector<Integer> coeffs_;  // trimmed, leading coefficient nonzero
};

/// Phi_n for odd n >= 1, by dividing x^n - 1 by the product of Phi_d over
/// proper divisors d of n. Even n is rejected.
const CycPoly& cyclotomic_polynomial(long n);

/// Element of the cyclotomic field Q(q), q a primitive n-th root of unity,
/// n odd >= 3. Stored in the power basis q^0..q^(deg Phi_n - 1), reduced
/// mod Phi_n; equality is coefficient-wise. The float embedding evaluates
/// at q = exp(-2*pi*i/n), so conjugate() embeds as complex conjugation.
class CycNumber {
 public:
  // Empty sentinel (order 0); any arithmetic on it is an order mismatch.
  CycNumber() = default;

  static CycNumber zero(long order);
  static CycNumber one(long order);
  static CycNumber from_rational(long order, const Rational& value);
  // Power-basis coefficients of any length; reduced mod Phi_n.
  static CycNumber from_coeffs(long order, std::vector<Rational> coeffs);

  long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  // True when the element lies in Q (only the constant coefficient nonzero).
  bool is_rational() const;
  Rational rational_part() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }

  CycNumber operator+(const CycNumber& other) const;
  CycNumber operator-(const CycNumber& other) const;
  CycNumber operator*(const CycNumber& other) const;
  CycNumber operator-() const;
  CycNumber operator+(const Rational& r) const;
  CycNumber operator-(const Rational& r) const;
  CycNumber operator*(const Rational& r) const;
  bool operator==(const CycNumber& other) const;
  bool operator!=(const CycNumber& other) const { return !(*this == other); }

  // Throws std::domain_error on zero.
  CycNumber inverse() const;
  // The Galois automorphism q -> q^(n-1) = q^(-1).
  CycNumber conjugate() const;
  CycNumber pow(long exp) const;

  // Evaluation at q = exp(-2*pi*i/n); rounding error stays below 1e-12
  // at the orders used here.
  std::complex<double> embed() const;

  std::string str() const;

 private:
  CycNumber(long order, std::vector<Rational> coeffs);
  long order_ = 0;
  std::vector<Rational> coeffs_;
};

/// The canonical primitive root q (basis element x) for odd n >= 3.
CycNumber root_of_unity(long n);

/// [m]_q = (q^m - q^(-m)) / (q - q^(-1)); lies in the real subfield.
CycNumber q_number(long m, const CycNumber& q);

}  // namespace qhrep
