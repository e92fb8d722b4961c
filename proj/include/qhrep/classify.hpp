#pragma once

#include <Eigen/Dense>

#include <optional>
#include <utility>
#include <vector>

#include "qhrep/filling.hpp"
#include "qhrep/qrep.hpp"
#include "qhrep/wavefn.hpp"

namespace qhrep {

/// The labeled orthonormal basis |i,p>, i = 1..2p+1, with filling i/(2p+1)
/// on slot i. Second quantization is modeled as this abstract orthonormal
/// label set; trial wave functions may be attached as explicit
/// realizations, in which case they must match the slot fillings and pass
/// a pairwise exact orthogonality check.
struct SlotLabel {
  long slot = 0;
  FillingFactor nu;
};

struct StateSpace {
  long p = 0;
  std::vector<SlotLabel> labels;
  std::vector<WaveState> attached;  // empty, or realizations for slots 1..k

  long dim() const { return 2 * p + 1; }
};

StateSpace build_state_space(long p, std::vector<WaveState> attach = {});

/// Operator on the StateSpace basis: exact diagonal where applicable plus
/// the float matrix render.
struct ClassOp {
  std::vector<CycNumber> diagonal;  // empty for ladder operators
  Eigen::MatrixXcd matrix;
};

/// k = sum_i exp(2 pi i nu_i) |i><i|, built from the slot fillings via the
/// conjugate root. Under the q -> exp(-2 pi i/(2p+1)) embedding this
/// equals the representation K with lambda = 1, exactly as field elements.
ClassOp filling_operator(const StateSpace& space);

/// e+ = sum a_i |i><i+2| and e- = e+† from solved magnitudes; the triple
/// (k, e+, e-) is the cyclic representation and passes verify_algebra.
std::pair<ClassOp, ClassOp> ladder_operators(
    const StateSpace& space, const std::vector<CycNumber>& sq_magnitudes,
    std::optional<std::vector<std::complex<double>>> phases = std::nullopt);

struct Classification {
  FillingFactor nu;
  long p = 0;
  long slot = 0;
  HierarchyChain minus_chain;
  HierarchyChain plus_chain;
  CyclicRep rep;
  RepVerification verification;
};

/// End-to-end: reduce nu, reject even denominators, place it in its
/// minimal representation (p = (Q-1)/2, or p = 1 for nu = 1), solve and
/// verify the representation, and expand both continued-fraction chains.
Classification classify_nu(const FillingFactor& nu);

}  // namespace qhrep
