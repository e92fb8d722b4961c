#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhrep/rational.hpp"

namespace qhrep {

/// Reduced filling factor P/Q with Q odd and 0 < P <= Q. nu = 1 is
/// admitted (it labels the top slot of every representation).
class FillingFactor {
 public:
  FillingFactor(const Integer& p, const Integer& q);
  explicit FillingFactor(const Rational& value);

  Integer P() const { return value_.get_num(); }
  Integer Q() const { return value_.get_den(); }
  const Rational& value() const { return value_; }
  std::string str() const { return to_string(value_); }
  bool operator==(const FillingFactor& other) const { return value_ == other.value_; }

  static FillingFactor parse(const std::string& text);

 private:
  Rational value_;
};

enum class Convention { Minus, Plus };

std::string convention_name(Convention c);
Convention parse_convention(const std::string& name);

/// Parity-constrained continued-fraction chain. Minus convention
/// evaluates 1/(a0 - 1/(a1 - ...)), plus convention 1/(p0 + 1/(p1 + ...)).
/// First coefficient odd (positive in the minus convention), later
/// coefficients even and nonzero.
struct HierarchyChain {
  Convention convention = Convention::Minus;
  std::vector<long> coeffs;

  // Throws std::domain_error on a parity violation.
  void validate() const;
  bool operator==(const HierarchyChain& other) const = default;
};

/// Bottom-up rational value of the chain, without the FillingFactor range
/// check. Throws std::domain_error on a vanishing intermediate denominator.
Rational eval_chain_raw(const HierarchyChain& chain);

/// Validated evaluation into a FillingFactor.
FillingFactor eval_chain(const HierarchyChain& chain);

/// Greedy parity-constrained expansion: at each level take the integer of
/// the required parity nearest to the exact reciprocal (zero excluded past
/// level 0; ties resolved toward the positive remainder), recurse on the
/// remainder. Terminates because the remainder's denominator strictly
/// decreases.
HierarchyChain decompose(const FillingFactor& nu, Convention convention);

/// Slot i with nu = i/(2p+1), or std::domain_error when the reduced
/// denominator does not divide 2p+1.
long slot_of(const FillingFactor& nu, long p);

/// Finite-N surrogate N(N-1)/(2L) for the thermodynamic-limit filling.
Rational nu_finite(long N, long L);

/// Level parameters of the positive-power hierarchy rewrite: theta_0 = 0,
/// q_0 = -1, then theta_a = (-1)^a / (p_(a-1) - (-1)^a theta_(a-1)) and
/// q_a = (-1)^(a+1) q_(a-1) theta_a. Interlevel signs are carried as
/// labels, +-1 with the final entry 0.
struct BWParams {
  std::vector<Rational> theta;
  std::vector<Rational> qweights;
  std::vector<int> signs;
};

BWParams bw_parameters(const HierarchyChain& plus_chain,
                       std::optional<std::vector<int>> signs = std::nullopt);

}  // namespace qhrep
