#include "qhrep/classify.hpp"

#include <stdexcept>
#include <string>

namespace qhrep {

StateSpace build_state_space(long p, std::vector<WaveState> attach) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  const long n = 2 * p + 1;
  StateSpace space{p, {}, {}};
  space.labels.reserve(n);
  for (long i = 1; i <= n; ++i) {
    space.labels.push_back(SlotLabel{i, FillingFactor(Integer(i), Integer(n))});
  }

  if (!attach.empty()) {
    if (static_cast<long>(attach.size()) > n) {
      throw std::invalid_argument("more attachments than slots");
    }
    for (size_t j = 0; j < attach.size(); ++j) {
      if (!(attach[j].nu == space.labels[j].nu)) {
        throw std::domain_error("attachment " + attach[j].label() +
                                " does not realize slot filling " +
                                space.labels[j].nu.str());
      }
      if (attach[j].N != attach[0].N) {
        throw std::domain_error("attached states must share N");
      }
    }
    for (size_t i = 0; i < attach.size(); ++i) {
      for (size_t j = i + 1; j < attach.size(); ++j) {
        const PiScaled overlap = inner_product(attach[i], attach[j]);
        if (!overlap.is_zero()) {
          throw std::domain_error("attached states <" + attach[i].label() + "|" +
                                  attach[j].label() + "> are not orthogonal: " +
                                  overlap.str());
        }
      }
    }
    space.attached = std::move(attach);
  }
  return space;
}

ClassOp filling_operator(const StateSpace& space) {
  const long n = space.dim();
  // exp(2 pi i nu) for nu = P/Q is conj(root)(= exp(+2 pi i / n)) raised to
  // the slot index; built from the labels, not from the representation.
  const CycNumber phase_unit = root_of_unity(n).conjugate();
  ClassOp op;
  op.diagonal.reserve(n);
  op.matrix = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& label : space.labels) {
    const Integer steps = label.nu.P() * (Integer(n) / label.nu.Q());
    const CycNumber ev = phase_unit.pow(steps.get_si());
    op.matrix(label.slot - 1, label.slot - 1) = ev.embed();
    op.diagonal.push_back(ev);
  }
  return op;
}

std::pair<ClassOp, ClassOp> ladder_operators(
    const StateSpace& space, const std::vector<CycNumber>& sq_magnitudes,
    std::optional<std::vector<std::complex<double>>> phases) {
  const CyclicRep rep = build_rep(space.p, sq_magnitudes, std::move(phases));
  ClassOp eplus{{}, rep.matrix_Eplus()};
  ClassOp eminus{{}, rep.matrix_Eminus()};
  return {std::move(eplus), std::move(eminus)};
}

Classification classify_nu(const FillingFactor& nu) {
  if (nu.Q() % 2 == 0) {
    throw std::domain_error("even denominator out of scope: " + nu.str());
  }
  // Minimal representation: Q = 2p+1. nu = 1 has Q = 1 and no p >= 1 of
  // its own, so it classifies into the smallest family, p = 1.
  const Integer q = nu.Q();
  long p = static_cast<long>((q.get_si() - 1) / 2);
  if (p < 1) p = 1;

  Classification out{nu,
                     p,
                     slot_of(nu, p),
                     decompose(nu, Convention::Minus),
                     decompose(nu, Convention::Plus),
                     build_rep(p, solve_coefficients(p, Rational(1))),
                     {}};
  out.verification = verify_rep(out.rep);
  return out;
}

}  // namespace qhrep
