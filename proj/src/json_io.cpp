#include "qhrep/json_io.hpp"

#include <stdexcept>

namespace qhrep::io {

Json rational_pair(const Rational& r) {
  return Json::array({r.get_num().get_str(), r.get_den().get_str()});
}

Rational rational_from_pair(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("expected [num, den] pair");
  }
  return make_rational(Integer(j[0].get<std::string>()),
                       Integer(j[1].get<std::string>()));
}

Json to_json(const CycNumber& a) {
  Json coeffs = Json::array();
  for (const auto& c : a.coeffs()) coeffs.push_back(rational_pair(c));
  return Json{{"order", a.order()}, {"coeffs", std::move(coeffs)}};
}

CycNumber cycnumber_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_pair(c));
  return CycNumber::from_coeffs(j.at("order").get<long>(), std::move(coeffs));
}

Json to_json(const std::complex<double>& z) {
  return Json::array({z.real(), z.imag()});
}

namespace {
Json matrix_row_major(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) rows.push_back(to_json(m(r, c)));
  }
  return rows;
}
}  // namespace

Json to_json(const CyclicRep& rep) {
  Json mags = Json::array();
  for (const auto& m : rep.sq_magnitudes) mags.push_back(to_json(m));
  Json phases = Json::array();
  for (const auto& ph : rep.phases) phases.push_back(to_json(ph));
  return Json{{"p", rep.p},
              {"q", to_json(rep.q)},
              {"lambda", to_json(rep.lambda)},
              {"sq_magnitudes", std::move(mags)},
              {"phases", std::move(phases)},
              {"matrices",
               Json{{"K", matrix_row_major(rep.matrix_K())},
                    {"Eplus", matrix_row_major(rep.matrix_Eplus())},
                    {"Eminus", matrix_row_major(rep.matrix_Eminus())}}}};
}

Json to_json(const VerifyReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry{{"name", c.name},
               {"kind", c.exact ? "exact" : "float"},
               {"pass", c.pass}};
    if (c.exact) {
      Json residuals = Json::array();
      for (const auto& r : c.residuals) residuals.push_back(to_json(r));
      entry["residuals"] = std::move(residuals);
    } else {
      entry["max_residual"] = c.max_residual;
    }
    checks.push_back(std::move(entry));
  }
  return Json{{"pass", report.pass}, {"checks", std::move(checks)}};
}

Json to_json(const CasimirScalars& cas) {
  return Json{{"k_scalar", to_json(cas.k_scalar)},
              {"eplus_scalar", to_json(cas.eplus_scalar)},
              {"eminus_scalar", to_json(cas.eminus_scalar)},
              {"report", to_json(cas.report)}};
}

Json to_json(const RepVerification& v) {
  return Json{{"pass", v.pass},
              {"algebra", to_json(v.algebra)},
              {"unitarity", to_json(v.unitarity)},
              {"casimirs", to_json(v.casimir)},
              {"cyclic", v.cyclic}};
}

Json to_json(const HierarchyChain& chain) {
  return Json{{"convention", convention_name(chain.convention)},
              {"chain", chain.coeffs}};
}

Json to_json(const BWParams& params) {
  Json theta = Json::array();
  for (const auto& t : params.theta) theta.push_back(to_string(t));
  Json qw = Json::array();
  for (const auto& t : params.qweights) qw.push_back(to_string(t));
  return Json{{"theta", std::move(theta)},
              {"qweights", std::move(qw)},
              {"signs", params.signs}};
}

Json to_json(const SymPoly& poly) {
  Json terms = Json::array();
  for (const auto& [e, c] : poly.terms()) {
    terms.push_back(Json{{"exps", e}, {"coeff", rational_pair(c)}});
  }
  return Json{{"vars", poly.var_names()}, {"terms", std::move(terms)}};
}

SymPoly sympoly_from_json(const Json& j) {
  int nz = 0, nw = 0;
  for (const auto& v : j.at("vars")) {
    const std::string name = v.get<std::string>();
    if (name.rfind("wb", 0) == 0) {
      ++nw;
    } else {
      ++nz;
    }
  }
  SymPoly poly(nz, nw);
  for (const auto& t : j.at("terms")) {
    poly.add_term(t.at("exps").get<SymPoly::Exps>(), rational_from_pair(t.at("coeff")));
  }
  return poly;
}

Json to_json(const WaveState& state) {
  Json j{{"tag", state.tag}, {"nu", state.nu.str()}, {"n", state.N}};
  if (state.M) j["m_aux"] = *state.M;
  j["weight_s"] = to_string(state.weight_s);
  long deg = 0;
  if (state.poly.is_homogeneous(&deg)) j["degree"] = deg;
  if (state.norm_const) j["norm"] = to_json(*state.norm_const);
  j["poly"] = to_json(state.poly);
  return j;
}

Json to_json(const PiScaled& v) {
  return Json{{"rational", rational_pair(v.coeff)}, {"pi_power", v.pi_power}};
}

Json to_json(const GramResult& gram) {
  Json matrix = Json::array();
  for (const auto& row : gram.matrix) {
    Json r = Json::array();
    for (const auto& entry : row) r.push_back(to_json(entry));
    matrix.push_back(std::move(r));
  }
  Json normalized = Json::array();
  for (const auto& row : gram.normalized) normalized.push_back(row);
  return Json{{"labels", gram.labels},
              {"matrix", std::move(matrix)},
              {"normalized", std::move(normalized)},
              {"orthogonal", gram.orthogonal}};
}

Json to_json(const Classification& c) {
  return Json{{"nu", c.nu.str()},
              {"p", c.p},
              {"slot", c.slot},
              {"chains",
               Json{{"minus", c.minus_chain.coeffs}, {"plus", c.plus_chain.coeffs}}},
              {"verify",
               Json{{"algebra", c.verification.algebra.pass},
                    {"unitarity", c.verification.unitarity.pass},
                    {"casimirs", c.verification.casimir.report.pass},
                    {"cyclic", c.verification.cyclic}}},
              {"casimir_scalars",
               Json{{"k", to_json(c.verification.casimir.k_scalar)},
                    {"eplus", to_json(c.verification.casimir.eplus_scalar)},
                    {"eminus", to_json(c.verification.casimir.eminus_scalar)}}}};
}

}  // namespace qhrep::io
