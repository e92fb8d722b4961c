#include "qhrep/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qhrep/classify.hpp"
#include "qhrep/json_io.hpp"

namespace qhrep {

namespace {

using io::Json;

std::vector<long> parse_chain_coeffs(const std::string& text) {
  std::vector<long> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty chain coefficient");
    size_t used = 0;
    const long v = std::stol(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad chain coefficient: " + item);
    coeffs.push_back(v);
  }
  if (coeffs.empty()) throw std::invalid_argument("empty chain");
  return coeffs;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

WaveState state_for(const FillingFactor& nu, long N) {
  if (nu.value() == 1) return laughlin(N, 1);
  if (nu.P() == 1 && nu.Q() % 2 == 1) return laughlin(N, nu.Q().get_si());
  if (nu.value() == make_rational(2, 3)) return daughter(N);
  throw std::domain_error("no trial construction for nu = " + nu.str() +
                          " (supported: 1, 1/m with m odd, 2/3)");
}

std::string join(const std::vector<long>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

template <typename T>
std::string join_str(const std::vector<T>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s;
}

const char* pass_str(bool b) { return b ? "pass" : "FAIL"; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic U_q(sl(2)) representations of quantum Hall filling factors"};
  app.require_subcommand(1);
  app.fallthrough();  // --format may follow the subcommand

  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  long rep_p = 0;
  std::string rep_floor = "1";
  auto* rep = app.add_subcommand("rep", "cyclic representation construction");
  rep->require_subcommand(1);
  auto* rep_build = rep->add_subcommand("build", "solve magnitudes and render matrices");
  rep_build->add_option("--p", rep_p, "representation index, dimension 2p+1")
      ->required()
      ->check(CLI::PositiveNumber);
  rep_build->add_option("--floor", rep_floor, "minimum |a_i|^2 (positive rational)");
  auto* rep_verify = rep->add_subcommand("verify", "verify algebra, unitarity, Casimirs");
  rep_verify->add_option("--p", rep_p, "representation index")
      ->required()
      ->check(CLI::PositiveNumber);
  rep_verify->add_option("--floor", rep_floor, "minimum |a_i|^2 (positive rational)");

  std::string ff_conv = "minus";
  std::string ff_chain;
  std::string ff_nu;
  auto* ff = app.add_subcommand("ff", "filling-factor continued fractions");
  ff->require_subcommand(1);
  auto* ff_eval = ff->add_subcommand("eval", "evaluate a parity chain");
  ff_eval->add_option("--conv", ff_conv, "convention")
      ->check(CLI::IsMember({"minus", "plus"}));
  ff_eval->add_option("--chain", ff_chain, "comma-separated coefficients")->required();
  auto* ff_dec = ff->add_subcommand("decompose", "expand nu into a parity chain");
  ff_dec->add_option("--nu", ff_nu, "filling factor P/Q")->required();
  ff_dec->add_option("--conv", ff_conv, "convention")
      ->check(CLI::IsMember({"minus", "plus"}));
  auto* ff_bw = ff->add_subcommand("bw", "level parameters of a plus chain");
  ff_bw->add_option("--chain", ff_chain, "comma-separated plus-convention coefficients")
      ->required();

  long wf_n = 0;
  long wf_m = 1;
  std::string wf_states;
  auto* wf = app.add_subcommand("wf", "trial wave functions");
  wf->require_subcommand(1);
  auto* wf_laughlin = wf->add_subcommand("laughlin", "expanded Jastrow^m state");
  wf_laughlin->add_option("--n", wf_n, "particle count")->required()->check(CLI::PositiveNumber);
  wf_laughlin->add_option("--m", wf_m, "odd Jastrow exponent")->required();
  auto* wf_daughter = wf->add_subcommand("daughter", "nu = 2/3 state, M = N/2 integrated out");
  wf_daughter->add_option("--n", wf_n, "particle count (even)")->required()->check(CLI::PositiveNumber);
  auto* wf_gram = wf->add_subcommand("gram", "exact Gram matrix of labeled states");
  wf_gram->add_option("--n", wf_n, "particle count")->required()->check(CLI::PositiveNumber);
  wf_gram->add_option("--states", wf_states, "comma-separated fillings, e.g. 1,1/3,2/3")
      ->required();

  std::string classify_nu_text;
  auto* classify_cmd = app.add_subcommand("classify", "classify nu into its representation");
  classify_cmd->add_option("--nu", classify_nu_text, "filling factor P/Q")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  const bool json = format == "json";
  try {
    if (rep_build->parsed() || rep_verify->parsed()) {
      const Rational floor_value = parse_rational(rep_floor);
      const CyclicRep r = build_rep(rep_p, solve_coefficients(rep_p, floor_value));
      if (rep_build->parsed()) {
        if (json) {
          out << io::to_json(r).dump() << "\n";
        } else {
          out << "p = " << r.p << " (dimension " << r.dim() << ")\n";
          for (long i = 1; i <= r.dim(); ++i) {
            out << "|a_" << i << "|^2 = " << r.sq_magnitudes[i - 1].str()
                << "  ~ " << r.sq_magnitudes[i - 1].embed().real() << "\n";
          }
        }
        return 0;
      }
      const RepVerification v = verify_rep(r);
      if (json) {
        Json j = io::to_json(v);
        j["p"] = r.p;
        out << j.dump() << "\n";
      } else {
        out << "p = " << r.p << "\n"
            << "algebra: " << pass_str(v.algebra.pass) << "\n"
            << "unitarity: " << pass_str(v.unitarity.pass) << "\n"
            << "casimirs: " << pass_str(v.casimir.report.pass) << "\n"
            << "cyclic: " << pass_str(v.cyclic) << "\n"
            << "overall: " << pass_str(v.pass) << "\n";
      }
      return v.pass ? 0 : 1;
    }

    if (ff_eval->parsed()) {
      const HierarchyChain chain{parse_convention(ff_conv), parse_chain_coeffs(ff_chain)};
      const FillingFactor nu = eval_chain(chain);
      if (json) {
        out << Json{{"nu", nu.str()}}.dump() << "\n";
      } else {
        out << "nu = " << nu.str() << "\n";
      }
      return 0;
    }

    if (ff_dec->parsed()) {
      const FillingFactor nu = FillingFactor::parse(ff_nu);
      const Convention conv = parse_convention(ff_conv);
      const HierarchyChain chain = decompose(nu, conv);
      if (json) {
        Json j{{"nu", nu.str()}};
        j.update(io::to_json(chain));
        out << j.dump() << "\n";
      } else {
        out << "nu = " << nu.str() << "\nconvention = " << convention_name(conv)
            << "\nchain = " << join(chain.coeffs) << "\n";
      }
      return 0;
    }

    if (ff_bw->parsed()) {
      const HierarchyChain chain{Convention::Plus, parse_chain_coeffs(ff_chain)};
      const BWParams params = bw_parameters(chain);
      const FillingFactor nu = eval_chain(chain);
      if (json) {
        Json j{{"nu", nu.str()}, {"convention", "plus"}, {"chain", chain.coeffs}};
        j.update(io::to_json(params));
        out << j.dump() << "\n";
      } else {
        out << "nu = " << nu.str() << "\nchain = " << join(chain.coeffs)
            << "\ntheta = " << join_str(params.theta)
            << "\nqweights = " << join_str(params.qweights) << "\n";
      }
      return 0;
    }

    if (wf_laughlin->parsed() || wf_daughter->parsed()) {
      const WaveState state =
          with_norm(wf_laughlin->parsed() ? laughlin(wf_n, wf_m) : daughter(wf_n));
      if (json) {
        out << io::to_json(state).dump() << "\n";
      } else {
        out << "tag = " << state.tag << "\nnu = " << state.nu.str()
            << "\nN = " << state.N << "\ndegree = " << angular_momentum(state)
            << "\nterms = " << state.poly.term_count()
            << "\nnorm = " << state.norm_const->str() << "\n";
      }
      return 0;
    }

    if (wf_gram->parsed()) {
      std::vector<WaveState> states;
      for (const auto& token : split_commas(wf_states)) {
        states.push_back(state_for(FillingFactor::parse(token), wf_n));
      }
      const GramResult g = gram(states);
      if (json) {
        out << io::to_json(g).dump() << "\n";
      } else {
        for (size_t i = 0; i < g.labels.size(); ++i) {
          for (size_t j = 0; j < g.labels.size(); ++j) {
            out << "<" << g.labels[i] << "|" << g.labels[j]
                << "> = " << g.matrix[i][j].str() << "\n";
          }
        }
        out << "orthogonal = " << (g.orthogonal ? "yes" : "no") << "\n";
      }
      return 0;
    }

    if (classify_cmd->parsed()) {
      const Classification c = classify_nu(FillingFactor::parse(classify_nu_text));
      if (json) {
        out << io::to_json(c).dump() << "\n";
      } else {
        out << "nu = " << c.nu.str() << "\np = " << c.p << "\nslot = " << c.slot
            << "\nminus chain = " << join(c.minus_chain.coeffs)
            << "\nplus chain = " << join(c.plus_chain.coeffs)
            << "\nverify = " << pass_str(c.verification.pass) << "\n";
      }
      return c.verification.pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  err << "no subcommand\n";
  return 2;
}

}  // namespace qhrep
