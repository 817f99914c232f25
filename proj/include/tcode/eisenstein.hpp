#pragma once

// Exact Eisenstein integers a + b*w with w = exp(2*pi*i/3), w^2 = -1 - w.
// Every arithmetic operation is overflow-checked and throws std::overflow_error
// instead of wrapping.

#include <cstdint>
#include <ostream>
#include <string>

namespace tcode {

class EisensteinInt {
 public:
  constexpr EisensteinInt() = default;
  constexpr EisensteinInt(std::int64_t re_unit, std::int64_t om_unit) : a_(re_unit), b_(om_unit) {}

  /// w^j for j taken mod 3.
  static constexpr EisensteinInt zeta_pow(int j) {
    switch (((j % 3) + 3) % 3) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      default: return {-1, -1};
    }
  }

  [[nodiscard]] constexpr std::int64_t re_unit() const { return a_; }
  [[nodiscard]] constexpr std::int64_t om_unit() const { return b_; }
  [[nodiscard]] constexpr bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// 2 * Re(z) = 2a - b; Re itself may be half-integral.
  [[nodiscard]] std::int64_t two_re() const;
  /// |z|^2 = a^2 - ab + b^2.
  [[nodiscard]] std::int64_t norm() const;
  [[nodiscard]] EisensteinInt conj() const;
  /// z * w^j.
  [[nodiscard]] EisensteinInt rotate(int j) const;

  EisensteinInt& operator+=(const EisensteinInt& o);
  EisensteinInt& operator-=(const EisensteinInt& o);
  EisensteinInt& operator*=(const EisensteinInt& o);

  friend EisensteinInt operator+(EisensteinInt x, const EisensteinInt& y) { return x += y; }
  friend EisensteinInt operator-(EisensteinInt x, const EisensteinInt& y) { return x -= y; }
  friend EisensteinInt operator*(EisensteinInt x, const EisensteinInt& y) { return x *= y; }
  friend EisensteinInt operator*(std::int64_t k, const EisensteinInt& z);
  EisensteinInt operator-() const;

  friend constexpr bool operator==(const EisensteinInt&, const EisensteinInt&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
};

[[nodiscard]] inline EisensteinInt eis_mul(const EisensteinInt& x, const EisensteinInt& y) { return x * y; }

/// If z == k * w^j for some integer k >= 0 returns true and sets exponent j.
/// Zero is reported as not unit-shaped.
[[nodiscard]] bool unit_shaped(const EisensteinInt& z, std::int64_t k, int& exponent);

std::ostream& operator<<(std::ostream& os, const EisensteinInt& z);

}  // namespace tcode
