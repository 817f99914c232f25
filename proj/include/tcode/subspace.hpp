#pragma once

#include <vector>

#include "tcode/gf3.hpp"

namespace tcode {

/// A linear subspace of F_3^n given by a basis.
class SubspaceSpec {
 public:
  /// The zero subspace of F_3^n.
  explicit SubspaceSpec(int ambient_n);
  /// Throws std::invalid_argument if the vectors are dependent or have the wrong dimension.
  SubspaceSpec(int ambient_n, std::vector<TernaryVector> basis);

  /// span{e_first, ..., e_{first+count-1}}.
  static SubspaceSpec coordinate(int ambient_n, int first, int count);
  static SubspaceSpec full(int ambient_n) { return coordinate(ambient_n, 0, ambient_n); }

  [[nodiscard]] int ambient_n() const { return n_; }
  [[nodiscard]] int dim() const { return static_cast<int>(basis_.size()); }
  [[nodiscard]] const std::vector<TernaryVector>& basis() const { return basis_; }

  [[nodiscard]] bool contains(const TernaryVector& v) const;
  /// Membership flags for every rank in F_3^n (3^n bytes).
  [[nodiscard]] std::vector<std::uint8_t> indicator() const;
  /// All 3^dim elements, as ranks, in no particular order.
  [[nodiscard]] std::vector<Rank> elements() const;

 private:
  int n_;
  std::vector<TernaryVector> basis_;
  // Row-reduced copy of the basis with pivot columns, used for membership.
  std::vector<TernaryVector> echelon_;
  std::vector<int> pivots_;
};

/// {x : x . y = 0 for all y in E}; dim(E^perp) = n - dim(E).
[[nodiscard]] SubspaceSpec dual_subspace(const SubspaceSpec& E);

/// True iff the vectors are linearly independent over F_3.
[[nodiscard]] bool linearly_independent(const std::vector<TernaryVector>& vs);

}  // namespace tcode
