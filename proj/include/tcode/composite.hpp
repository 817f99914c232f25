#pragma once

// Codes from F = (f, G) with f scalar and G vectorial, and the AB-violating family built
// from an indicator-quadratic f and a dummy-extended bent G.

#include <array>
#include <cstdint>
#include <optional>

#include "tcode/analysis.hpp"
#include "tcode/function_table.hpp"
#include "tcode/minimality.hpp"
#include "tcode/subspace.hpp"
#include "tcode/walsh.hpp"

namespace tcode {

struct CompositeSpec {
  FunctionTable f;
  FunctionTable G;
  std::optional<SubspaceSpec> E;
  std::optional<TernaryVector> a;
  std::optional<TernaryVector> b;
  int r = 0;
  int s = 0;

  [[nodiscard]] int n() const { return f.n(); }
  /// Output dimension of F = (f, G).
  [[nodiscard]] int m() const { return 1 + G.m(); }
};

struct Construction2Report {
  /// Re(W_f(nu) + W_f(nu') + theta W_f(nu'')) != 3^n throughout.
  bool cond_a = false;
  /// 3 max Re W_f - 2 min Re W_f >= 3^n with max Re >= 0 >= min Re.
  bool cond_b = false;
  bool G_minimal = false;
  /// mu1 f + mu~ . G is non-affine for every nonzero (mu1, mu~).
  bool components_nonaffine = false;
  std::array<bool, 3> theorem5_conditions = {false, false, false};
  bool ab_violated = false;

  std::int64_t f_max_two_re = 0;
  std::int64_t f_min_two_re = 0;
  std::optional<Witness> cond_a_witness;

  [[nodiscard]] bool premises_hold() const { return cond_a && cond_b && G_minimal && components_nonaffine; }
  [[nodiscard]] bool valid() const {
    return premises_hold() && theorem5_conditions[0] && theorem5_conditions[1] && theorem5_conditions[2];
  }
};

/// Evaluates every field except theorem5_conditions. Requires f(0) = 0 and G(0) = 0.
[[nodiscard]] Construction2Report construction2_premises(const CompositeSpec& spec, SpectrumCache& cache, unsigned threads = 0);

struct Theorem5Result {
  MinimalityVerdict verdict;
  /// Per condition: true when it holds (a vacuous condition holds).
  std::array<bool, 3> conditions = {false, false, false};
  bool condition3_vacuous = false;
};

/// Conditions over A_mu~ = f + mu~ . G:
///   (1) the single-row condition on every A_mu~, mu~ != 0;
///   (2) lambda . (W_f(nu), W_G(mu~,nu'), W_{A_mu~}(nu+nu'), W_{A_2mu~}(nu-nu')) != 3^n in real part;
///   (3) lambda . (W_{A_mu~}(nu), W_G(mu~',nu'), W_{A_{mu~+mu~'}}(nu+nu'), W_{A_{mu~-mu~'}}(nu-nu')),
///       mu~, mu~', mu~ +- mu~' nonzero; empty when G has one output.
/// lambda runs over the four patterns with a single -2. Every condition is evaluated; the witness
/// comes from the lowest failing one. Throws PreconditionError when `premises` (computed if null)
/// do not hold.
[[nodiscard]] Theorem5Result theorem5_check(const CompositeSpec& spec, SpectrumCache& cache, unsigned threads = 0,
                                            const Construction2Report* premises = nullptr);

struct Prop3Mismatch {
  Rank mu;
  Rank nu;
};

/// Checks the five block equalities between W_(f,G) and the spectra of f, G and A_mu~.
/// Returns the first (mu, nu) where one fails.
[[nodiscard]] std::optional<Prop3Mismatch> prop3_blocks(const FunctionTable& f, const FunctionTable& G, SpectrumCache& cache,
                                                        unsigned threads = 0);

/// 3 W_f(nu) against the nine-term combination for f = p1 + (p2 - p1)(p3 - p1); returns the first
/// nu where they differ.
[[nodiscard]] std::optional<Rank> three_function_identity_mismatch(const FunctionTable& p1, const FunctionTable& p2,
                                                                   const FunctionTable& p3);

/// phi = g + 1_E + 2 for a regular s-plateaued g with g(0) = 0: checks
/// |W_phi(nu)|^2 <= (3^((n+s)/2) + 2 * 3^dim(E))^2 for all nu. Throws if n + s is odd.
[[nodiscard]] bool plateau_indicator_bound_holds(const FunctionTable& g, const SubspaceSpec& E, int s);

struct Theorem6Options {
  unsigned threads = 0;
  /// 0 skips the sampled covering check.
  std::uint64_t covering_samples = 0;
  std::uint64_t seed = 1;
};

struct Theorem6Result {
  CompositeSpec spec;
  FunctionTable F;
  CodeAnalysis analysis;
  Construction2Report construction2;
  Theorem5Result theorem5;
  std::int64_t expected_d = 0;

  [[nodiscard]] bool distance_matches() const { return analysis.ab.w_min == expected_d; }
  [[nodiscard]] bool dimension_matches() const { return analysis.dimension == spec.n() + spec.m(); }
};

/// Builds f (E = span(e_0..e_{r-1}), a = e_0, b = e_1), G (field-mult bent on (n-s)/2 + (n-s)/2
/// coordinates with m - 1 outputs, dummy-extended by s) and F = (f, G), then analyzes C_F with
/// the Walsh characterization, the composite conditions and optionally sampled covering.
/// Throws ConstructionError for parameters outside n > 6, m >= 2, r >= 2, n - r > 3,
/// 0 <= s <= n - 6, n + s even, m - 1 <= (n - s) / 2.
[[nodiscard]] Theorem6Result theorem6_build_and_verify(int n, int r, int s, int m, const Theorem6Options& options = {});

}  // namespace tcode
