#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qhrep/cyclotomic.hpp"

namespace qhrep {

inline constexpr double kMatrixTol = 1e-12;
inline constexpr double kCasimirMagnitudeTol = 1e-10;

/// One verified relation. Exact checks carry per-slot field residuals and
/// pass iff all of them are the zero element; float checks carry the max
/// matrix residual against kMatrixTol (scaled where noted).
struct VerifyCheck {
  std::string name;
  bool exact = false;
  bool pass = false;
  std::vector<CycNumber> residuals;  // exact checks only
  double max_residual = 0.0;
};

struct VerifyReport {
  bool pass = false;
  std::vector<VerifyCheck> checks;
  const VerifyCheck* find(const std::string& name) const;
};

/// The (2p+1)-dimensional cyclic representation data: K diagonal with
/// eigenvalue lambda * q^(-i) on slot i, E+ with entries a_i at |i><i+2|,
/// E- the adjoint. Slots run 1..2p+1 with wraparound; vectors index slot i
/// at position i-1. sq_magnitudes hold |a_i|^2 exactly in the real
/// subfield; ladder entries are rendered as phase_i * sqrt(|a_i|^2).
///
/// Fields are open so that verifiers can be exercised on broken data;
/// build_rep is the validated constructor.
struct CyclicRep {
  long p = 0;
  CycNumber q;
  CycNumber lambda;
  std::vector<CycNumber> sq_magnitudes;
  std::vector<std::complex<double>> phases;

  long dim() const { return 2 * p + 1; }
  // 1-based slot arithmetic mod 2p+1, result in 1..2p+1.
  long wrap(long slot) const;
  CycNumber k_eigenvalue(long slot) const;
  std::complex<double> ladder_entry(long slot) const;

  Eigen::MatrixXcd matrix_K() const;
  Eigen::MatrixXcd matrix_K_inverse() const;
  Eigen::MatrixXcd matrix_Eplus() const;
  Eigen::MatrixXcd matrix_Eminus() const;
};

/// Solves the magnitude chain |a_i|^2 - |a_(i-2)|^2 = -[i]_q around the
/// single step-2 cycle through all residues mod 2p+1. The chain closes
/// because the q-numbers sum to zero; the free base value is shifted so
/// the minimum magnitude equals `floor_value` (> 0 required).
std::vector<CycNumber> solve_coefficients(long p, const Rational& floor_value);

/// Validated constructor. Refuses non-real or non-positive |a_i|^2 and
/// non-unit phases, citing the offending slot. The magnitude recurrence
/// itself is verify_algebra's job, so intentionally broken chains can
/// still be rendered and reported on.
CyclicRep build_rep(long p, std::vector<CycNumber> sq_magnitudes,
                    std::optional<std::vector<std::complex<double>>> phases = std::nullopt,
                    std::optional<CycNumber> lambda = std::nullopt);

/// K E± K^-1 = q^(±2) E± and [E+,E-] (q - q^-1) = K - K^-1. Both reduce
/// to field identities (the commutator diagonal needs only |a_i|^2); a
/// float cross-check on the rendered matrices runs as well.
VerifyReport verify_algebra(const CyclicRep& rep);

/// K† K = 1 exactly slotwise and E+† = E- on the rendered matrices.
VerifyReport verify_unitarity(const CyclicRep& rep);

struct CasimirScalars {
  CycNumber k_scalar;                // K^(2p+1) = lambda^(2p+1), exact
  std::complex<double> eplus_scalar;  // E+^(2p+1) = c+ * 1, numeric
  std::complex<double> eminus_scalar;
  VerifyReport report;
};

/// K^(2p+1) scalar exactly; E±^(2p+1) proportional to identity numerically,
/// with |c+|^2 matched against embed(prod |a_i|^2) at kCasimirMagnitudeTol
/// relative tolerance.
CasimirScalars casimirs(const CyclicRep& rep);

/// True iff every |a_i|^2 is nonzero (no annihilated basis vector).
bool verify_cyclic(const CyclicRep& rep);

struct RepVerification {
  VerifyReport algebra;
  VerifyReport unitarity;
  CasimirScalars casimir;
  bool cyclic = false;
  bool pass = false;
};

RepVerification verify_rep(const CyclicRep& rep);

}  // namespace qhrep
