#include "tcode/constructions.hpp"

#include "tcode/ext_field.hpp"

namespace tcode {

FunctionTable make_indicator_quadratic(const SubspaceSpec& E, const TernaryVector& a, const TernaryVector& b) {
  const int n = E.ambient_n();
  if (a.size() != n || b.size() != n) throw ConstructionError("indicator-quadratic: a and b must lie in F_3^n");
  if (n - E.dim() <= 2) throw ConstructionError("indicator-quadratic: requires n - dim(E) > 2");
  if (!linearly_independent({a, b})) throw ConstructionError("indicator-quadratic: a and b are linearly dependent");
  const SubspaceSpec dual = dual_subspace(E);
  const struct {
    const char* name;
    TernaryVector v;
  } probes[] = {{"a", a}, {"b", b}, {"a+b", a + b}, {"a-b", a - b}};
  for (const auto& p : probes)
    if (dual.contains(p.v)) throw ConstructionError(std::string("indicator-quadratic: ") + p.name + " lies in the dual of E");

  const std::vector<std::uint8_t> in_e = E.indicator();
  const std::vector<std::uint8_t> da = dot_table(a);
  const std::vector<std::uint8_t> db = dot_table(b);
  std::vector<std::uint8_t> values(in_e.size());
  for (std::size_t x = 0; x < values.size(); ++x) values[x] = static_cast<std::uint8_t>((in_e[x] + da[x] * db[x] + 2) % 3);
  return FunctionTable::scalar(n, std::move(values));
}

IndicatorQuadraticParams default_indicator_quadratic_params(int n, int r) {
  if (r < 2) throw ConstructionError("indicator-quadratic: r must be at least 2 so that a, b are independent modulo E^perp");
  if (r > n) throw ConstructionError("indicator-quadratic: r exceeds n");
  return {SubspaceSpec::coordinate(n, 0, r), TernaryVector::unit(n, 0), TernaryVector::unit(n, 1)};
}

FunctionTable make_indicator_quadratic(int n, int r) {
  const auto p = default_indicator_quadratic_params(n, r);
  return make_indicator_quadratic(p.E, p.a, p.b);
}

FunctionTable make_field_mult_bent(int k, int m) {
  if (k < 1 || 2 * k > kMaxInputDim) throw ConstructionError("field-mult-bent: k must be in [1, 8]");
  if (m < 1 || m > k) throw ConstructionError("field-mult-bent: requires 1 <= m <= k");
  const ExtField field(k);
  const Rank q = field.order();
  FunctionTable F(2 * k, m);
  for (Rank y = 0; y < q; ++y) {
    for (Rank x = 0; x < q; ++x) {
      const Rank z = field.mul(x, y);
      Rank out = 0;
      for (int j = m - 1; j >= 0; --j) out = out * 3 + static_cast<Rank>(field.trace_coordinate(j, z).value());
      F.set(x + q * y, static_cast<std::uint32_t>(out));
    }
  }
  return F;
}

FunctionTable extend_with_dummy(const FunctionTable& G, int extra) {
  if (extra < 1) throw ConstructionError("dummy-extend: extra must be at least 1");
  if (G.n() + extra > kMaxInputDim) throw ConstructionError("dummy-extend: input dimension cap exceeded");
  const Rank inner = G.domain_size();
  const Rank copies = pow3(extra);
  std::vector<std::uint32_t> t(inner * copies);
  for (Rank z = 0; z < copies; ++z)
    for (Rank x = 0; x < inner; ++x) t[x + inner * z] = G[x];
  return FunctionTable(G.n() + extra, G.m(), std::move(t));
}

FunctionTable compose(const FunctionTable& f, const FunctionTable& G) {
  if (f.m() != 1) throw ConstructionError("compose: f must be scalar (m = 1)");
  if (f.n() != G.n()) throw ConstructionError("compose: f and G have different input dimensions");
  if (1 + G.m() > kMaxOutputDim) throw ConstructionError("compose: output dimension cap exceeded");
  std::vector<std::uint32_t> t(f.domain_size());
  for (Rank x = 0; x < t.size(); ++x) t[x] = f[x] + 3 * G[x];
  return FunctionTable(f.n(), 1 + G.m(), std::move(t));
}

FunctionTable shifted_component(const FunctionTable& f, const FunctionTable& G, Rank mu_tilde) {
  if (f.m() != 1 || f.n() != G.n()) throw ConstructionError("shifted_component: shape mismatch");
  const std::vector<std::uint8_t> g = G.component(mu_tilde);
  std::vector<std::uint8_t> values(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) values[x] = static_cast<std::uint8_t>((f[x] + g[x]) % 3);
  return FunctionTable::scalar(f.n(), std::move(values));
}

FunctionTable random_function(int n, int m, std::mt19937_64& rng, bool zero_at_origin) {
  FunctionTable F(n, m);
  std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(pow3(m) - 1));
  for (Rank x = 0; x < F.domain_size(); ++x) F.set(x, dist(rng));
  if (zero_at_origin) F.set(0, 0);
  return F;
}

}  // namespace tcode
