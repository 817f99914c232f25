#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "tcode/function_table.hpp"
#include "tcode/walsh.hpp"

namespace tcode {

struct ComponentClass {
  bool plateaued = false;
  /// Amplitude exponent: every nonzero |W|^2 equals 3^(n+s). Meaningful only when plateaued.
  int s = -1;
  /// n + s even; otherwise 3^((n+s)/2) is irrational and the component cannot be regular.
  bool parity_compatible = false;
  /// Every nonzero value is 3^((n+s)/2) * w^j.
  bool regular = false;

  friend bool operator==(const ComponentClass&, const ComponentClass&) = default;
};

struct PlateauClassification {
  int n = 0;
  int m = 0;
  /// Keyed by rank(mu), mu != 0.
  std::map<Rank, ComponentClass> per_component;
  /// Common s when every component is plateaued with the same s.
  std::optional<int> uniform_s;
  bool vectorial_regular = false;
  /// Distinct 2*Re(W(mu, nu)) over mu != 0.
  std::set<std::int64_t> two_re_values;
};

[[nodiscard]] ComponentClass classify_row(const WalshRow& row, int n);
[[nodiscard]] PlateauClassification classify(const WalshSpectrum& spectrum);
[[nodiscard]] PlateauClassification classify(const FunctionTable& F, unsigned threads = 0);

/// A component mu . F is affine iff its spectrum is a single nonzero value of norm 3^(2n).
[[nodiscard]] bool is_row_affine(const WalshRow& row, int n);
[[nodiscard]] bool is_component_affine(const FunctionTable& F, const TernaryVector& mu);
/// Smallest rank(mu) != 0 whose component is affine.
[[nodiscard]] std::optional<Rank> first_affine_component(const WalshSpectrum& spectrum);

}  // namespace tcode
