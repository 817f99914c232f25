#include "tcode/ext_field.hpp"

#include <stdexcept>

namespace tcode {

namespace {

const std::vector<std::vector<std::uint8_t>>& conway_low_coeffs() {
  static const std::vector<std::vector<std::uint8_t>> table = {
      {},
      {1},
      {2, 2},
      {1, 2, 0},
      {2, 0, 0, 2},
      {1, 2, 0, 0, 0},
      {2, 2, 1, 0, 2, 0},
      {1, 0, 2, 0, 0, 0, 0},
      {2, 2, 2, 0, 1, 2, 0, 0},
  };
  return table;
}

}  // namespace

ExtField::ExtField(int k) : k_(k) {
  if (k < 1 || k > kMaxDegree) throw std::invalid_argument("ExtField: degree must be in [1, 8]");
  modulus_ = conway_low_coeffs()[static_cast<std::size_t>(k)];
  // X^i has rank 3^i in the polynomial basis.
  for (int i = 0; i < k_; ++i) trace_of_basis_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(trace(pow3(i)).value());
  for (int j = 0; j < k_; ++j)
    for (int i = 0; i < k_; ++i)
      trace_matrix_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>(trace(mul(pow3(j), pow3(i))).value());
}

Rank ExtField::mul(Rank x, Rank y) const {
  std::array<int, 2 * kMaxDegree> prod{};
  std::array<int, kMaxDegree> xd{}, yd{};
  for (int i = 0; i < k_; ++i, x /= 3, y /= 3) {
    xd[static_cast<std::size_t>(i)] = static_cast<int>(x % 3);
    yd[static_cast<std::size_t>(i)] = static_cast<int>(y % 3);
  }
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) prod[static_cast<std::size_t>(i + j)] += xd[static_cast<std::size_t>(i)] * yd[static_cast<std::size_t>(j)];
  // X^k = -sum c_i X^i
  for (int d = 2 * k_ - 2; d >= k_; --d) {
    const int c = prod[static_cast<std::size_t>(d)] % 3;
    if (c == 0) continue;
    prod[static_cast<std::size_t>(d)] = 0;
    for (int i = 0; i < k_; ++i) prod[static_cast<std::size_t>(d - k_ + i)] += (3 - modulus_[static_cast<std::size_t>(i)]) * c;
  }
  Rank r = 0;
  for (int i = k_ - 1; i >= 0; --i) r = r * 3 + static_cast<Rank>(prod[static_cast<std::size_t>(i)] % 3);
  return r;
}

Rank ExtField::pow(Rank x, std::uint64_t e) const {
  Rank result = 1;
  while (e) {
    if (e & 1) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

Trit ExtField::trace(Rank x) const {
  Rank acc = 0;
  Rank term = x;
  for (int i = 0; i < k_; ++i) {
    acc = add(acc, term);
    term = pow(term, 3);
  }
  // The trace lies in the prime field, i.e. has rank < 3.
  if (acc >= 3) throw std::logic_error("ExtField: trace left the prime field; modulus is not irreducible");
  return Trit(static_cast<int>(acc));
}

Trit ExtField::trace_linear(Rank x) const {
  int acc = 0;
  for (int i = 0; i < k_; ++i, x /= 3) acc += static_cast<int>(x % 3) * trace_of_basis_[static_cast<std::size_t>(i)];
  return Trit(acc);
}

Trit ExtField::trace_coordinate(int j, Rank z) const {
  int acc = 0;
  const auto& row = trace_matrix_[static_cast<std::size_t>(j)];
  for (int i = 0; i < k_; ++i, z /= 3) acc += static_cast<int>(z % 3) * row[static_cast<std::size_t>(i)];
  return Trit(acc);
}

}  // namespace tcode
