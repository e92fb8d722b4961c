#include "qhrep/wavefn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace qhrep {

namespace {

struct ExpsHash {
  size_t operator()(const SymPoly::Exps& e) const {
    size_t h = 1469598103934665603ull;
    for (int v : e) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using Accum = std::unordered_map<SymPoly::Exps, Rational, ExpsHash>;

void accum_add(Accum& acc, const SymPoly::Exps& e, const Rational& c) {
  auto [it, fresh] = acc.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  } else if (c == 0) {
    acc.erase(it);
  }
}

SymPoly from_accum(int nz, int nw, Accum&& acc) {
  SymPoly r(nz, nw);
  for (auto& [e, c] : acc) r.add_term(e, c);
  return r;
}

}  // namespace

SymPoly::SymPoly(int num_z, int num_w) : num_z_(num_z), num_w_(num_w) {
  if (num_z < 0 || num_w < 0) throw std::invalid_argument("negative variable count");
}

SymPoly SymPoly::constant(int num_z, int num_w, const Rational& value) {
  SymPoly p(num_z, num_w);
  p.add_term(Exps(num_z + num_w, 0), value);
  return p;
}

void SymPoly::add_term(const Exps& exps, const Rational& coeff) {
  if (static_cast<int>(exps.size()) != num_vars()) {
    throw std::invalid_argument("exponent vector length mismatch");
  }
  for (int e : exps) {
    if (e < 0) throw std::invalid_argument("negative exponent");
  }
  if (coeff == 0) return;
  auto [it, fresh] = terms_.try_emplace(exps, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly SymPoly::operator+(const SymPoly& other) const {
  if (num_z_ != other.num_z_ || num_w_ != other.num_w_) {
    throw std::invalid_argument("variable set mismatch");
  }
  SymPoly r = *this;
  for (const auto& [e, c] : other.terms_) r.add_term(e, c);
  return r;
}

SymPoly SymPoly::operator-(const SymPoly& other) const {
  return *this + other * Rational(-1);
}

SymPoly SymPoly::operator*(const SymPoly& other) const {
  if (num_z_ != other.num_z_ || num_w_ != other.num_w_) {
    throw std::invalid_argument("variable set mismatch");
  }
  Accum acc;
  acc.reserve(terms_.size() * 2);
  Exps e(num_vars());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (int k = 0; k < num_vars(); ++k) e[k] = ea[k] + eb[k];
      accum_add(acc, e, ca * cb);
    }
  }
  return from_accum(num_z_, num_w_, std::move(acc));
}

SymPoly SymPoly::operator*(const Rational& scale) const {
  SymPoly r(num_z_, num_w_);
  if (scale == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * scale);
  return r;
}

bool SymPoly::operator==(const SymPoly& other) const {
  return num_z_ == other.num_z_ && num_w_ == other.num_w_ && terms_ == other.terms_;
}

bool SymPoly::is_homogeneous(long* degree_out) const {
  if (terms_.empty()) return false;
  long deg = -1;
  for (const auto& [e, c] : terms_) {
    const long d = std::accumulate(e.begin(), e.end(), 0L);
    if (deg < 0) deg = d;
    if (d != deg) return false;
  }
  if (degree_out) *degree_out = deg;
  return true;
}

SymPoly SymPoly::swapped_z(int i, int j) const {
  if (i < 0 || j < 0 || i >= num_z_ || j >= num_z_) {
    throw std::invalid_argument("z index out of range");
  }
  SymPoly r(num_z_, num_w_);
  for (const auto& [e, c] : terms_) {
    Exps swapped = e;
    std::swap(swapped[i], swapped[j]);
    r.add_term(swapped, c);
  }
  return r;
}

std::vector<std::string> SymPoly::var_names() const {
  std::vector<std::string> names;
  names.reserve(num_vars());
  for (int i = 1; i <= num_z_; ++i) names.push_back("z" + std::to_string(i));
  for (int i = 1; i <= num_w_; ++i) names.push_back("wb" + std::to_string(i));
  return names;
}

SymPoly vandermonde(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("vandermonde expects 1 <= n <= 8");
  // det[z_i^(n-j)]: exponent vectors are permutations of (n-1, ..., 0).
  SymPoly r(n, 0);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    SymPoly::Exps e(n);
    for (int i = 0; i < n; ++i) e[i] = n - 1 - perm[i];
    r.add_term(e, Rational(inversions % 2 == 0 ? 1 : -1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

SymPoly jastrow_power(int n, int m) {
  if (n < 2) throw std::invalid_argument("jastrow_power expects n >= 2");
  if (m < 1) throw std::invalid_argument("jastrow_power expects m >= 1");
  if (m == 1) return vandermonde(n);

  // Binomial coefficients of (z_i - z_j)^m.
  std::vector<Rational> binom(m + 1);
  for (int k = 0; k <= m; ++k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), m, k);
    binom[k] = Rational(b) * ((m - k) % 2 == 0 ? 1 : -1);
  }

  Accum acc;
  acc.emplace(SymPoly::Exps(n, 0), Rational(1));
  Accum next;
  SymPoly::Exps e(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      next.clear();
      next.reserve(acc.size() * 2);
      for (const auto& [ea, ca] : acc) {
        e = ea;
        for (int k = 0; k <= m; ++k) {
          e[i] = ea[i] + k;
          e[j] = ea[j] + (m - k);
          accum_add(next, e, ca * binom[k]);
        }
        e[i] = ea[i];
        e[j] = ea[j];
      }
      std::swap(acc, next);
    }
  }
  return from_accum(n, 0, std::move(acc));
}

double PiScaled::to_double() const {
  return qhrep::to_double(coeff) * std::pow(std::numbers::pi, pi_power);
}

std::string PiScaled::str() const {
  std::ostringstream os;
  os << to_string(coeff);
  if (coeff != 0 && pi_power != 0) {
    os << "*pi";
    if (pi_power != 1) os << "^" << pi_power;
  }
  return os.str();
}

PiScaled gaussian_pair_integral(long m, long n, const Rational& s) {
  if (s <= 0) throw std::domain_error("Gaussian parameter must be positive");
  if (m < 0 || n < 0) throw std::invalid_argument("negative monomial exponent");
  if (m != n) return PiScaled{Rational(0), 0};
  const Rational value =
      Rational(factorial(static_cast<unsigned long>(n))) / rational_pow(s, n + 1);
  return PiScaled{value, 1};
}

WaveState laughlin(long N, long m) {
  if (N < 2) throw std::invalid_argument("laughlin expects N >= 2");
  if (m < 1 || m % 2 == 0) {
    throw std::domain_error("laughlin exponent must be odd and positive");
  }
  return WaveState{"laughlin", FillingFactor(Integer(1), Integer(m)), N, std::nullopt,
                   make_rational(1, 2),
                   jastrow_power(static_cast<int>(N), static_cast<int>(m)),
                   std::nullopt};
}

namespace {

// Integrate the last M holomorphic variables of `holo` against the pure
// wbar polynomial `anti`, pairing wbar^a with w^a; the global pi^M is
// dropped here (normalization constants absorb it).
SymPoly integrate_w_pairs(const SymPoly& anti, const SymPoly& holo, int N, int M,
                          const Rational& s) {
  if (anti.num_z() != 0 || anti.num_w() != M) {
    throw std::invalid_argument("antiholomorphic factor has wrong shape");
  }
  if (holo.num_z() != N + M || holo.num_w() != 0) {
    throw std::invalid_argument("holomorphic factor has wrong shape");
  }
  // Group holo terms by their w-exponent suffix.
  using Suffix = SymPoly::Exps;
  std::unordered_map<Suffix, std::vector<std::pair<SymPoly::Exps, Rational>>, ExpsHash>
      by_suffix;
  for (const auto& [e, c] : holo.terms()) {
    Suffix suffix(e.begin() + N, e.end());
    SymPoly::Exps prefix(e.begin(), e.begin() + N);
    by_suffix[suffix].emplace_back(std::move(prefix), c);
  }

  Accum acc;
  for (const auto& [we, ca] : anti.terms()) {
    const auto it = by_suffix.find(we);
    if (it == by_suffix.end()) continue;
    Rational weight = ca;
    for (int j = 0; j < M; ++j) {
      weight *= Rational(factorial(static_cast<unsigned long>(we[j]))) /
                rational_pow(s, we[j] + 1);
    }
    for (const auto& [prefix, cb] : it->second) {
      accum_add(acc, prefix, weight * cb);
    }
  }
  return from_accum(N, 0, std::move(acc));
}

}  // namespace

WaveState daughter(long N, std::optional<long> M, const Rational& s_int, bool strict) {
  if (N < 2) throw std::invalid_argument("daughter expects N >= 2");
  if (s_int <= 0) throw std::domain_error("Gaussian parameter must be positive");
  long m_aux;
  if (M) {
    m_aux = *M;
    if (m_aux < 0) throw std::invalid_argument("M must be >= 0");
    if (strict && 2 * m_aux != N) {
      throw std::domain_error("strict daughter construction needs M = N/2");
    }
  } else {
    if (N % 2 != 0) {
      throw std::domain_error("daughter needs even N for the default M = N/2");
    }
    m_aux = N / 2;
  }

  std::string tag = "daughter";
  if (2 * m_aux != N) tag = "daughter(nonstandard-M)";

  SymPoly poly(0, 0);
  if (m_aux == 0) {
    poly = vandermonde(static_cast<int>(N));
  } else {
    // conj-Jastrow^3 over the wbar set: same expansion, wbar shape.
    SymPoly anti = SymPoly::constant(0, static_cast<int>(m_aux), Rational(1));
    if (m_aux >= 2) {
      const SymPoly j3 = jastrow_power(static_cast<int>(m_aux), 3);
      SymPoly reshaped(0, static_cast<int>(m_aux));
      for (const auto& [e, c] : j3.terms()) reshaped.add_term(e, c);
      anti = std::move(reshaped);
    }
    const SymPoly mixed = vandermonde(static_cast<int>(N + m_aux));
    poly = integrate_w_pairs(anti, mixed, static_cast<int>(N),
                             static_cast<int>(m_aux), s_int);
  }
  if (poly.is_zero()) throw std::logic_error("daughter state integrated to zero");

  // M = 0 degenerates to the filled level.
  const FillingFactor nu = (m_aux == 0) ? FillingFactor(Integer(1), Integer(1))
                                        : FillingFactor(Integer(2), Integer(3));
  return WaveState{std::move(tag), nu,
                   N, m_aux, make_rational(1, 2), std::move(poly), std::nullopt};
}

PiScaled squared_norm(const WaveState& state) {
  if (state.norm_const) return *state.norm_const;
  return inner_product(state, state);
}

WaveState with_norm(WaveState state) {
  state.norm_const = squared_norm(state);
  return state;
}

long angular_momentum(const WaveState& state) {
  long deg = 0;
  if (!state.poly.is_homogeneous(&deg)) {
    throw std::domain_error("state polynomial is not homogeneous");
  }
  return deg;
}

PiScaled inner_product(const WaveState& a, const WaveState& b) {
  if (a.poly.num_z() != b.poly.num_z() || a.poly.num_w() != 0 || b.poly.num_w() != 0) {
    throw std::invalid_argument("inner product needs matching holomorphic variable sets");
  }
  const Rational s_total = a.weight_s + b.weight_s;
  if (s_total <= 0) throw std::domain_error("combined Gaussian weight must be positive");
  const int n = a.poly.num_z();

  // Coefficients are rational, so conjugation of the bra is a no-op.
  Rational sum(0);
  const auto& bt = b.poly.terms();
  for (const auto& [e, ca] : a.poly.terms()) {
    const auto it = bt.find(e);
    if (it == bt.end()) continue;
    Rational w = ca * it->second;
    for (int k = 0; k < n; ++k) {
      w *= Rational(factorial(static_cast<unsigned long>(e[k]))) /
           rational_pow(s_total, e[k] + 1);
    }
    sum += w;
  }
  if (sum == 0) return PiScaled{Rational(0), 0};
  return PiScaled{sum, n};
}

GramResult gram(const std::vector<WaveState>& states) {
  if (states.empty()) throw std::invalid_argument("gram of empty state list");
  const size_t n = states.size();
  GramResult out;
  out.labels.reserve(n);
  for (const auto& s : states) out.labels.push_back(s.label());

  out.matrix.assign(n, std::vector<PiScaled>(n, PiScaled{Rational(0), 0}));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i; j < n; ++j) {
      const PiScaled v = (i == j) ? squared_norm(states[i])
                                  : inner_product(states[i], states[j]);
      out.matrix[i][j] = v;
      out.matrix[j][i] = v;  // rational coefficients: conjugate-symmetric
    }
  }
  for (size_t i = 0; i < n; ++i) {
    if (out.matrix[i][i].is_zero()) {
      throw std::domain_error("zero-norm state: " + out.labels[i]);
    }
    if (out.matrix[i][i].coeff < 0) {
      throw std::logic_error("negative squared norm: " + out.labels[i]);
    }
  }

  out.orthogonal = true;
  out.normalized.assign(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (i == j) {
        out.normalized[i][j] = 1.0;
      } else if (out.matrix[i][j].is_zero()) {
        out.normalized[i][j] = 0.0;
      } else {
        out.orthogonal = false;
        out.normalized[i][j] =
            out.matrix[i][j].to_double() /
            std::sqrt(out.matrix[i][i].to_double() * out.matrix[j][j].to_double());
      }
    }
  }
  return out;
}

}  // namespace qhrep
