#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "tcode/function_table.hpp"
#include "tcode/subspace.hpp"

namespace tcode {

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// f(x) = 1_E(x) + (a.x)(b.x) + 2 as an m = 1 table. Requires a, b independent, none of
/// a, b, a+b, a-b in E^perp, and n - dim(E) > 2; the error names the violated constraint.
[[nodiscard]] FunctionTable make_indicator_quadratic(const SubspaceSpec& E, const TernaryVector& a, const TernaryVector& b);

/// Deterministic instance used by the AB-violating family: E = span{e_0..e_{r-1}},
/// a = e_0, b = e_1 (so a, b, a+-b have independent images in F_3^n / E^perp). Needs r >= 2.
struct IndicatorQuadraticParams {
  SubspaceSpec E;
  TernaryVector a;
  TernaryVector b;
};
[[nodiscard]] IndicatorQuadraticParams default_indicator_quadratic_params(int n, int r);
[[nodiscard]] FunctionTable make_indicator_quadratic(int n, int r);

/// F(x, y) = (tr(X^j * x * y))_{j < m} on F_3^{2k} = GF(3^k)^2, x = coordinates [0, k),
/// y = coordinates [k, 2k). Requires 1 <= m <= k.
[[nodiscard]] FunctionTable make_field_mult_bent(int k, int m);

/// G'(x, z) = G(x) on F_3^{n + extra}; the extra coordinates are the high ones.
[[nodiscard]] FunctionTable extend_with_dummy(const FunctionTable& G, int extra);

/// F(x) = (f(x), G(x)): f is output coordinate 0, G occupies coordinates 1..m_G.
[[nodiscard]] FunctionTable compose(const FunctionTable& f, const FunctionTable& G);

/// A(x) = f(x) + mu~ . G(x), the scalar function behind the (1, mu~) component of (f, G).
[[nodiscard]] FunctionTable shifted_component(const FunctionTable& f, const FunctionTable& G, Rank mu_tilde);

/// Uniform random table; with `zero_at_origin` F(0) is forced to 0.
[[nodiscard]] FunctionTable random_function(int n, int m, std::mt19937_64& rng, bool zero_at_origin = true);

}  // namespace tcode
