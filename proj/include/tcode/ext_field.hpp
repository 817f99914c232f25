#pragma once

// GF(3^k) for 1 <= k <= 8 in a polynomial basis over F_3.
//
// Elements are stored by rank: coefficient of X^i is base-3 digit i. Each degree
// uses the Conway polynomial for p = 3:
//
//   k=1  X + 1
//   k=2  X^2 + 2X + 2
//   k=3  X^3 + 2X + 1
//   k=4  X^4 + 2X^3 + 2
//   k=5  X^5 + 2X + 1
//   k=6  X^6 + 2X^4 + X^2 + 2X + 2
//   k=7  X^7 + 2X^2 + 1
//   k=8  X^8 + 2X^5 + X^4 + 2X^2 + 2X + 2

#include <array>
#include <cstdint>
#include <vector>

#include "tcode/gf3.hpp"

namespace tcode {

class ExtField {
 public:
  static constexpr int kMaxDegree = 8;

  explicit ExtField(int k);

  [[nodiscard]] int degree() const { return k_; }
  [[nodiscard]] Rank order() const { return pow3(k_); }
  /// Coefficients c_0..c_{k-1} of the monic modulus X^k + sum c_i X^i.
  [[nodiscard]] const std::vector<std::uint8_t>& modulus_low() const { return modulus_; }

  [[nodiscard]] Rank add(Rank x, Rank y) const { return rank_add(x, y, k_); }
  [[nodiscard]] Rank mul(Rank x, Rank y) const;
  [[nodiscard]] Rank pow(Rank x, std::uint64_t e) const;
  /// tr(x) = x + x^3 + ... + x^(3^(k-1)), computed by repeated Frobenius.
  [[nodiscard]] Trit trace(Rank x) const;
  /// Same value as trace(x) via the precomputed linear functional.
  [[nodiscard]] Trit trace_linear(Rank x) const;
  /// tr(X^j * z), the j-th trace coordinate of z.
  [[nodiscard]] Trit trace_coordinate(int j, Rank z) const;

 private:
  int k_;
  std::vector<std::uint8_t> modulus_;
  std::array<std::uint8_t, kMaxDegree> trace_of_basis_{};
  // trace_matrix_[j][i] = tr(X^j * X^i)
  std::array<std::array<std::uint8_t, kMaxDegree>, kMaxDegree> trace_matrix_{};
};

/// Element wrapper for callers that prefer value semantics over raw ranks.
struct ExtFieldElem {
  const ExtField* field;
  Rank value;

  friend ExtFieldElem operator+(ExtFieldElem a, ExtFieldElem b) { return {a.field, a.field->add(a.value, b.value)}; }
  friend ExtFieldElem operator*(ExtFieldElem a, ExtFieldElem b) { return {a.field, a.field->mul(a.value, b.value)}; }
  friend bool operator==(ExtFieldElem a, ExtFieldElem b) { return a.value == b.value; }
};

[[nodiscard]] inline Trit field_trace(const ExtFieldElem& x) { return x.field->trace(x.value); }

}  // namespace tcode
