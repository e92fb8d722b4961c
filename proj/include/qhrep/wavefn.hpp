#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qhrep/filling.hpp"
#include "qhrep/rational.hpp"

namespace qhrep {

/// Sparse exact polynomial over a holomorphic set z1..z_nz and an
/// antiholomorphic set wb1..wb_nw. Exponent vectors are z-part first;
/// terms are kept in canonical (lexicographic) order with no zero
/// coefficients stored.
class SymPoly {
 public:
  using Exps = std::vector<int>;
  using Terms = std::map<Exps, Rational>;

  SymPoly(int num_z, int num_w);
  static SymPoly constant(int num_z, int num_w, const Rational& value);

  int num_z() const { return num_z_; }
  int num_w() const { return num_w_; }
  int num_vars() const { return num_z_ + num_w_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  void add_term(const Exps& exps, const Rational& coeff);

  SymPoly operator+(const SymPoly& other) const;
  SymPoly operator-(const SymPoly& other) const;
  SymPoly operator*(const SymPoly& other) const;
  SymPoly operator*(const Rational& scale) const;
  bool operator==(const SymPoly& other) const;

  // Total degree of every term when homogeneous.
  bool is_homogeneous(long* degree_out = nullptr) const;

  // Exchange two z variables.
  SymPoly swapped_z(int i, int j) const;

  std::vector<std::string> var_names() const;

 private:
  int num_z_;
  int num_w_;
  Terms terms_;
};

/// Vandermonde prod_{i<j}(z_i - z_j) over n holomorphic variables, as the
/// signed sum over permutations (n <= 8).
SymPoly vandermonde(int n);

/// prod_{i<j}(z_i - z_j)^m by sequential binomial-factor products.
SymPoly jastrow_power(int n, int m);

/// delta_{m,n} * pi * n! / s^(n+1): the Gaussian pair integral
/// of zbar^m z^n with weight exp(-s |z|^2). Values are a rational
/// multiple of a power of pi.
struct PiScaled {
  Rational coeff;
  int pi_power = 0;
  bool is_zero() const { return coeff == 0; }
  bool operator==(const PiScaled& other) const {
    if (coeff == 0 && other.coeff == 0) return true;
    return coeff == other.coeff && pi_power == other.pi_power;
  }
  double to_double() const;
  std::string str() const;
};

PiScaled gaussian_pair_integral(long m, long n, const Rational& s);

/// One constructed lowest-Landau-level state: a homogeneous z-polynomial
/// carrying the Gaussian weight parameter s per variable (1/2 for the
/// states built here, giving s_total = 1 in inner products).
struct WaveState {
  std::string tag;
  FillingFactor nu;
  long N = 0;
  std::optional<long> M;  // integrated-out auxiliary variables, when used
  Rational weight_s;
  SymPoly poly;
  std::optional<PiScaled> norm_const;  // exact squared norm, once computed

  std::string label() const { return nu.str(); }
};

/// Exact squared norm <s, s>; also caches it on the returned copy.
PiScaled squared_norm(const WaveState& state);
WaveState with_norm(WaveState state);

/// Laughlin state at nu = 1/m: the expanded prod_{i<j}(z_i - z_j)^m.
/// Even m is rejected (fermionic statistics).
WaveState laughlin(long N, long m);

/// The one-level daughter construction at nu = 2/3: integrate M auxiliary
/// variables out of conj-Jastrow^3(wbar) * Vandermonde(z, w) against the
/// Gaussian pair rule with parameter s_int. M defaults to N/2 (N even);
/// strict mode insists on that value. The constant pi^M from the
/// integrated pairs is absorbed into the normalization; the per-term
/// factorial / s factors are kept exactly.
WaveState daughter(long N, std::optional<long> M = std::nullopt,
                   const Rational& s_int = make_rational(1, 2), bool strict = true);

/// Homogeneous total degree; throws on non-homogeneous or zero input.
long angular_momentum(const WaveState& state);

/// Exact (a, b) = integral with total weight s_a + s_b: matching exponent
/// vectors contribute coeff_a * coeff_b * prod_k k!/s^(k+1), times pi^N.
PiScaled inner_product(const WaveState& a, const WaveState& b);

struct GramResult {
  std::vector<std::string> labels;
  std::vector<std::vector<PiScaled>> matrix;
  // Entries g_ij / sqrt(g_ii g_jj); exactly 0/1 entries stay exact so the
  // orthogonal case renders the identity.
  std::vector<std::vector<double>> normalized;
  bool orthogonal = false;  // all off-diagonal entries exactly zero
};

/// Pairwise exact inner products; throws on a zero-norm state.
GramResult gram(const std::vector<WaveState>& states);

}  // namespace qhrep
