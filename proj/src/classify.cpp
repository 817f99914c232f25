#include "tcode/classify.hpp"

#include <stdexcept>

namespace tcode {

ComponentClass classify_row(const WalshRow& row, int n) {
  ComponentClass c;
  std::int64_t level = 0;
  for (const auto& w : row) {
    const std::int64_t nn = w.norm();
    if (nn == 0) continue;
    if (level == 0) {
      level = nn;
    } else if (nn != level) {
      return c;
    }
  }
  int s = -1;
  for (int e = 0; e <= n; ++e) {
    if (ipow3(n + e) == level) {
      s = e;
      break;
    }
  }
  if (s < 0) return c;
  c.plateaued = true;
  c.s = s;
  c.parity_compatible = (n + s) % 2 == 0;
  if (!c.parity_compatible) return c;
  const std::int64_t amp = ipow3((n + s) / 2);
  c.regular = true;
  for (const auto& w : row) {
    int j = 0;
    if (!w.is_zero() && !unit_shaped(w, amp, j)) {
      c.regular = false;
      break;
    }
  }
  return c;
}

PlateauClassification classify(const WalshSpectrum& spectrum) {
  PlateauClassification out;
  out.n = spectrum.n();
  out.m = spectrum.m();
  bool all_regular = true;
  bool same_s = true;
  int common = -2;
  for (Rank mu = 1; mu < spectrum.num_rows(); ++mu) {
    const ComponentClass c = classify_row(spectrum.row(mu), spectrum.n());
    out.per_component.emplace(mu, c);
    all_regular = all_regular && c.regular;
    if (!c.plateaued) {
      same_s = false;
    } else if (common == -2) {
      common = c.s;
    } else if (common != c.s) {
      same_s = false;
    }
    for (auto v : spectrum.two_re(mu)) out.two_re_values.insert(v);
  }
  if (same_s && common >= 0) out.uniform_s = common;
  out.vectorial_regular = all_regular && out.uniform_s.has_value();
  return out;
}

PlateauClassification classify(const FunctionTable& F, unsigned threads) { return classify(walsh_fast(F, threads)); }

bool is_row_affine(const WalshRow& row, int n) {
  const std::int64_t full = ipow3(2 * n);
  for (const auto& w : row)
    if (w.norm() == full) return true;
  return false;
}

bool is_component_affine(const FunctionTable& F, const TernaryVector& mu) {
  if (mu.size() != F.m()) throw std::invalid_argument("is_component_affine: mu dimension mismatch");
  if (mu.is_zero()) throw std::invalid_argument("is_component_affine: mu must be nonzero");
  return is_row_affine(walsh_fast_row(F, mu.rank()), F.n());
}

std::optional<Rank> first_affine_component(const WalshSpectrum& spectrum) {
  for (Rank mu = 1; mu < spectrum.num_rows(); ++mu)
    if (is_row_affine(spectrum.row(mu), spectrum.n())) return mu;
  return std::nullopt;
}

}  // namespace tcode
