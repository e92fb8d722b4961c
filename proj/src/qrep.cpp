#include "qhrep/qrep.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qhrep {

namespace {

void check_p(long p) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
}

double max_abs(const Eigen::MatrixXcd& m) {
  return m.cwiseAbs().maxCoeff();
}

}  // namespace

const VerifyCheck* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

long CyclicRep::wrap(long slot) const {
  const long n = dim();
  return ((slot - 1) % n + n) % n + 1;
}

CycNumber CyclicRep::k_eigenvalue(long slot) const {
  // q^(-i) = q^(n-i) for the canonical root; avoids a field inversion.
  return lambda * q.pow(dim() - wrap(slot));
}

std::complex<double> CyclicRep::ladder_entry(long slot) const {
  const long i = wrap(slot);
  return phases[i - 1] * std::sqrt(sq_magnitudes[i - 1].embed().real());
}

Eigen::MatrixXcd CyclicRep::matrix_K() const {
  const long n = dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (long i = 1; i <= n; ++i) m(i - 1, i - 1) = k_eigenvalue(i).embed();
  return m;
}

Eigen::MatrixXcd CyclicRep::matrix_K_inverse() const {
  const long n = dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (long i = 1; i <= n; ++i) m(i - 1, i - 1) = k_eigenvalue(i).inverse().embed();
  return m;
}

Eigen::MatrixXcd CyclicRep::matrix_Eplus() const {
  // entry(r, c) = <r|E+|c>, E+ = sum a_i |i><i+2|.
  const long n = dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (long i = 1; i <= n; ++i) m(i - 1, wrap(i + 2) - 1) = ladder_entry(i);
  return m;
}

Eigen::MatrixXcd CyclicRep::matrix_Eminus() const {
  const long n = dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (long i = 1; i <= n; ++i) m(wrap(i + 2) - 1, i - 1) = std::conj(ladder_entry(i));
  return m;
}

std::vector<CycNumber> solve_coefficients(long p, const Rational& floor_value) {
  check_p(p);
  if (floor_value <= 0) {
    throw std::domain_error("floor must be positive: every a_i must be nonzero");
  }
  const long n = 2 * p + 1;
  const CycNumber q = root_of_unity(n);

  std::vector<CycNumber> qnum;
  qnum.reserve(n + 1);
  qnum.push_back(CycNumber::zero(n));  // unused slot 0
  CycNumber qsum = CycNumber::zero(n);
  for (long i = 1; i <= n; ++i) {
    qnum.push_back(q_number(i, q));
    qsum = qsum + qnum.back();
  }
  if (!qsum.is_zero()) throw std::logic_error("q-numbers failed to sum to zero");

  // Walk the step-2 cycle from slot 1; gcd(2, n) = 1 visits every slot.
  std::vector<CycNumber> offset(n, CycNumber::zero(n));
  long slot = 1;
  for (long step = 0; step < n - 1; ++step) {
    const long next = (slot + 2 - 1) % n + 1;
    offset[next - 1] = offset[slot - 1] - qnum[next];
    slot = next;
  }
  // Closing the cycle must land back on offset zero for slot 1.
  const CycNumber closure = offset[slot - 1] - qnum[1];
  if (!closure.is_zero()) throw std::logic_error("magnitude chain failed to close");

  long argmin = 0;
  double best = offset[0].embed().real();
  for (long i = 1; i < n; ++i) {
    const double v = offset[i].embed().real();
    if (v < best) {
      best = v;
      argmin = i;
    }
  }
  std::vector<CycNumber> mags;
  mags.reserve(n);
  for (long i = 0; i < n; ++i) {
    mags.push_back(offset[i] - offset[argmin] + floor_value);
  }
  return mags;
}

CyclicRep build_rep(long p, std::vector<CycNumber> sq_magnitudes,
                    std::optional<std::vector<std::complex<double>>> phases,
                    std::optional<CycNumber> lambda) {
  check_p(p);
  const long n = 2 * p + 1;
  if (static_cast<long>(sq_magnitudes.size()) != n) {
    throw std::invalid_argument("expected 2p+1 squared magnitudes");
  }
  for (long i = 1; i <= n; ++i) {
    const CycNumber& m = sq_magnitudes[i - 1];
    if (m.order() != n) {
      throw std::invalid_argument("magnitude order mismatch at slot " + std::to_string(i));
    }
    std::ostringstream why;
    if (m.conjugate() != m) {
      why << "|a_" << i << "|^2 is not in the real subfield";
      throw std::domain_error(why.str());
    }
    if (m.is_zero() || m.embed().real() <= 0.0) {
      why << "|a_" << i << "|^2 must be positive, slot " << i << " violates cyclicity";
      throw std::domain_error(why.str());
    }
  }
  std::vector<std::complex<double>> ph =
      phases.value_or(std::vector<std::complex<double>>(n, {1.0, 0.0}));
  if (static_cast<long>(ph.size()) != n) {
    throw std::invalid_argument("expected 2p+1 phases");
  }
  for (long i = 1; i <= n; ++i) {
    if (std::abs(std::abs(ph[i - 1]) - 1.0) > kMatrixTol) {
      throw std::domain_error("phase at slot " + std::to_string(i) + " is not unit modulus");
    }
  }
  CycNumber lam = lambda.value_or(CycNumber::one(n));
  if (lam.order() != n) throw std::invalid_argument("lambda order mismatch");
  if (lam.is_zero()) throw std::domain_error("lambda must be nonzero");
  return CyclicRep{p, root_of_unity(n), std::move(lam), std::move(sq_magnitudes),
                   std::move(ph)};
}

VerifyReport verify_algebra(const CyclicRep& rep) {
  const long n = rep.dim();
  const CycNumber& q = rep.q;
  VerifyReport report;

  // K E+ K^-1 = q^2 E+ on the |i><i+2| pattern: q^(-i) q^(i+2) - q^2,
  // and the E- counterpart; lambda cancels.
  VerifyCheck conj_plus{"k_conjugation_plus", true, true, {}, 0.0};
  VerifyCheck conj_minus{"k_conjugation_minus", true, true, {}, 0.0};
  for (long i = 1; i <= n; ++i) {
    const long j = rep.wrap(i + 2);
    const CycNumber rp = rep.k_eigenvalue(i) * rep.k_eigenvalue(j).inverse() - q.pow(2);
    const CycNumber rm = rep.k_eigenvalue(j) * rep.k_eigenvalue(i).inverse() - q.pow(-2);
    conj_plus.pass = conj_plus.pass && rp.is_zero();
    conj_minus.pass = conj_minus.pass && rm.is_zero();
    conj_plus.residuals.push_back(rp);
    conj_minus.residuals.push_back(rm);
  }

  // [E+,E-] diagonal is |a_i|^2 - |a_(i-2)|^2 and must equal the slot
  // entry of (K - K^-1)/(q - q^-1), which is -[i]_q once lambda = 1.
  VerifyCheck comm{"commutator", true, true, {}, 0.0};
  const CycNumber qdiff_inv = (q - q.pow(-1)).inverse();
  for (long i = 1; i <= n; ++i) {
    const long prev = rep.wrap(i - 2);
    const CycNumber ev = rep.k_eigenvalue(i);
    const CycNumber required = (ev - ev.inverse()) * qdiff_inv;
    const CycNumber residual =
        (rep.sq_magnitudes[i - 1] - rep.sq_magnitudes[prev - 1]) - required;
    comm.pass = comm.pass && residual.is_zero();
    comm.residuals.push_back(residual);
  }

  // Float cross-check on the rendered matrices.
  const Eigen::MatrixXcd K = rep.matrix_K();
  const Eigen::MatrixXcd Kinv = rep.matrix_K_inverse();
  const Eigen::MatrixXcd Ep = rep.matrix_Eplus();
  const Eigen::MatrixXcd Em = rep.matrix_Eminus();
  const std::complex<double> q2 = q.pow(2).embed();
  const std::complex<double> qm2 = q.pow(-2).embed();
  const std::complex<double> qdiff = (q - q.pow(-1)).embed();
  double r = max_abs(K * Ep * Kinv - q2 * Ep);
  r = std::max(r, max_abs(K * Em * Kinv - qm2 * Em));
  r = std::max(r, max_abs((Ep * Em - Em * Ep) * qdiff - (K - Kinv)));
  VerifyCheck cross{"float_cross_check", false, r <= kMatrixTol, {}, r};

  report.checks = {conj_plus, conj_minus, comm, cross};
  report.pass = conj_plus.pass && conj_minus.pass && comm.pass && cross.pass;
  return report;
}

VerifyReport verify_unitarity(const CyclicRep& rep) {
  const long n = rep.dim();
  VerifyReport report;

  VerifyCheck kk{"k_unitary", true, true, {}, 0.0};
  for (long i = 1; i <= n; ++i) {
    const CycNumber ev = rep.k_eigenvalue(i);
    const CycNumber residual = ev * ev.conjugate() - Rational(1);
    kk.pass = kk.pass && residual.is_zero();
    kk.residuals.push_back(residual);
  }

  const Eigen::MatrixXcd K = rep.matrix_K();
  const double rk = max_abs(K.adjoint() * K - Eigen::MatrixXcd::Identity(n, n));
  VerifyCheck kf{"k_unitary_float", false, rk <= kMatrixTol, {}, rk};

  const double ra = max_abs(rep.matrix_Eplus().adjoint() - rep.matrix_Eminus());
  VerifyCheck adj{"ladder_adjoint", false, ra <= kMatrixTol, {}, ra};

  report.checks = {kk, kf, adj};
  report.pass = kk.pass && kf.pass && adj.pass;
  return report;
}

CasimirScalars casimirs(const CyclicRep& rep) {
  const long n = rep.dim();
  CasimirScalars out{CycNumber::one(n), {0, 0}, {0, 0}, {}};

  out.k_scalar = rep.lambda.pow(n);
  VerifyCheck kc{"k_casimir", true, true, {}, 0.0};
  for (long i = 1; i <= n; ++i) {
    const CycNumber residual = rep.k_eigenvalue(i).pow(n) - out.k_scalar;
    kc.pass = kc.pass && residual.is_zero();
    kc.residuals.push_back(residual);
  }

  // E+ advances every slot by the same cycle, so its n-th power is exactly
  // diagonal in floats too; the content check is diagonal constancy.
  const auto power = [n](const Eigen::MatrixXcd& m) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(n, n);
    for (long k = 0; k < n; ++k) acc = acc * m;
    return acc;
  };
  const Eigen::MatrixXcd Epn = power(rep.matrix_Eplus());
  const Eigen::MatrixXcd Emn = power(rep.matrix_Eminus());

  const auto proportionality = [&](const Eigen::MatrixXcd& m, const char* name,
                                   std::complex<double>& scalar) {
    const std::complex<double> c = m.diagonal().mean();
    double off = 0.0;
    double diag = 0.0;
    for (long r = 0; r < n; ++r) {
      for (long col = 0; col < n; ++col) {
        if (r == col) {
          diag = std::max(diag, std::abs(m(r, col) - c));
        } else {
          off = std::max(off, std::abs(m(r, col)));
        }
      }
    }
    scalar = c;
    const double scale = std::max(1.0, std::abs(c));
    const bool ok = off <= kMatrixTol && diag <= kMatrixTol * scale;
    return VerifyCheck{name, false, ok, {}, std::max(off, diag / scale)};
  };
  VerifyCheck ep = proportionality(Epn, "eplus_casimir_proportional", out.eplus_scalar);
  VerifyCheck em = proportionality(Emn, "eminus_casimir_proportional", out.eminus_scalar);

  // |c+|^2 against the product of the magnitudes; relative tolerance, the
  // product grows past 1e11 by p = 12. Embedding factor by factor keeps
  // the evaluation well conditioned (the expanded power-basis coefficients
  // of the full product cancel catastrophically at double precision).
  double expected = 1.0;
  for (const auto& m : rep.sq_magnitudes) expected *= m.embed().real();
  const double got = std::norm(out.eplus_scalar);
  const double rel = std::abs(got - expected) / std::max(1.0, std::abs(expected));
  VerifyCheck mag{"eplus_casimir_magnitude", false, rel <= kCasimirMagnitudeTol, {}, rel};

  const double conj_res = std::abs(out.eminus_scalar - std::conj(out.eplus_scalar)) /
                          std::max(1.0, std::abs(out.eplus_scalar));
  VerifyCheck cc{"eminus_conjugate_scalar", false, conj_res <= kMatrixTol, {}, conj_res};

  out.report.checks = {kc, ep, em, mag, cc};
  out.report.pass = kc.pass && ep.pass && em.pass && mag.pass && cc.pass;
  return out;
}

bool verify_cyclic(const CyclicRep& rep) {
  for (const auto& m : rep.sq_magnitudes) {
    if (m.is_zero()) return false;
  }
  return true;
}

RepVerification verify_rep(const CyclicRep& rep) {
  RepVerification v;
  v.algebra = verify_algebra(rep);
  v.unitarity = verify_unitarity(rep);
  v.casimir = casimirs(rep);
  v.cyclic = verify_cyclic(rep);
  v.pass = v.algebra.pass && v.unitarity.pass && v.casimir.report.pass && v.cyclic;
  return v;
}

}  // namespace qhrep
