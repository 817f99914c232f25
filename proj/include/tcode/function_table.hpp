#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tcode/gf3.hpp"

namespace tcode {

/// Exhaustive value table of F: F_3^n -> F_3^m. Entry x holds rank(F(x)).
class FunctionTable {
 public:
  FunctionTable(int n, int m);
  FunctionTable(int n, int m, std::vector<std::uint32_t> table);

  static FunctionTable from_function(int n, int m, const std::function<TernaryVector(const TernaryVector&)>& fn);
  /// m = 1 table from component values in {0,1,2}.
  static FunctionTable scalar(int n, std::vector<std::uint8_t> values);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] Rank domain_size() const { return pow3(n_); }
  [[nodiscard]] std::uint32_t operator[](Rank x) const { return table_[x]; }
  [[nodiscard]] TernaryVector value(const TernaryVector& x) const;
  [[nodiscard]] const std::vector<std::uint32_t>& data() const { return table_; }
  void set(Rank x, std::uint32_t value);

  /// (mu . F)(x) for every x.
  [[nodiscard]] std::vector<std::uint8_t> component(Rank mu) const;
  /// Output coordinate j as an m = 1 table.
  [[nodiscard]] FunctionTable coordinate(int j) const;
  /// Output coordinates [first, first + count) as a table with m = count.
  [[nodiscard]] FunctionTable project(int first, int count) const;

  [[nodiscard]] bool zero_at_origin() const { return table_[0] == 0; }
  [[nodiscard]] std::uint64_t fingerprint() const;

  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

 private:
  int n_;
  int m_;
  std::vector<std::uint32_t> table_;
};

}  // namespace tcode
