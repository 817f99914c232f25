#pragma once

// Scalars and vectors over F_3.
//
// Index convention used everywhere in this library: a vector v in F_3^n is
// identified with its rank sum_i v[i] * 3^i, i.e. coordinate 0 is the least
// significant base-3 digit.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcode {

/// Largest vector dimension handled anywhere (input or output side).
inline constexpr int kMaxDim = 24;
/// Caps on the (n, m) of functions F: F_3^n -> F_3^m.
inline constexpr int kMaxInputDim = 16;
inline constexpr int kMaxOutputDim = 8;

using Rank = std::uint64_t;

class Trit {
 public:
  constexpr Trit() = default;
  constexpr explicit Trit(int v) : v_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

  [[nodiscard]] constexpr int value() const { return v_; }
  [[nodiscard]] constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr Trit operator+(Trit a, Trit b) { return Trit(a.v_ + b.v_); }
  friend constexpr Trit operator-(Trit a, Trit b) { return Trit(a.v_ + 3 - b.v_); }
  friend constexpr Trit operator*(Trit a, Trit b) { return Trit(a.v_ * b.v_); }
  constexpr Trit operator-() const { return Trit(3 - v_); }
  friend constexpr bool operator==(Trit, Trit) = default;

 private:
  std::uint8_t v_ = 0;
};

/// 3^e for 0 <= e <= 39 (fits in 64 bits).
[[nodiscard]] constexpr std::uint64_t pow3(int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= 3;
  return r;
}

[[nodiscard]] constexpr std::int64_t ipow3(int e) { return static_cast<std::int64_t>(pow3(e)); }

/// Reduces an integer into {0,1,2}.
[[nodiscard]] constexpr std::uint8_t mod3(std::int64_t v) {
  return static_cast<std::uint8_t>(((v % 3) + 3) % 3);
}

class TernaryVector {
 public:
  TernaryVector() = default;
  explicit TernaryVector(int n);
  TernaryVector(std::initializer_list<int> coords);

  /// Little-endian base-3 digits of `rank`. Throws std::out_of_range when rank >= 3^n.
  static TernaryVector from_rank(Rank rank, int n);
  static TernaryVector unit(int n, int i);

  [[nodiscard]] Rank rank() const;
  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] Trit operator[](int i) const { return Trit(c_[static_cast<std::size_t>(i)]); }
  [[nodiscard]] std::uint8_t digit(int i) const { return c_[static_cast<std::size_t>(i)]; }
  void set(int i, Trit t) { c_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(t.value()); }
  [[nodiscard]] bool is_zero() const;

  TernaryVector operator-() const;
  friend TernaryVector operator+(const TernaryVector& a, const TernaryVector& b);
  friend TernaryVector operator-(const TernaryVector& a, const TernaryVector& b);
  friend TernaryVector operator*(Trit s, const TernaryVector& v);
  friend bool operator==(const TernaryVector& a, const TernaryVector& b);

  /// Concatenation (this, tail): coordinates of `tail` follow those of *this.
  [[nodiscard]] TernaryVector concat(const TernaryVector& tail) const;
  [[nodiscard]] TernaryVector slice(int first, int count) const;

  [[nodiscard]] std::string to_string() const;

 private:
  int n_ = 0;
  std::array<std::uint8_t, kMaxDim> c_{};
};

inline TernaryVector rank_to_vec(Rank rank, int n) { return TernaryVector::from_rank(rank, n); }
inline Rank vec_to_rank(const TernaryVector& v) { return v.rank(); }

/// Standard inner product over F_3. Throws std::invalid_argument on a dimension mismatch.
[[nodiscard]] Trit dot(const TernaryVector& u, const TernaryVector& v);

/// Rank-level helpers; all operate digitwise in O(n).
[[nodiscard]] Rank rank_add(Rank a, Rank b, int n);
[[nodiscard]] Rank rank_sub(Rank a, Rank b, int n);
[[nodiscard]] Rank rank_neg(Rank a, int n);
[[nodiscard]] Rank rank_scale(Rank a, int s, int n);
[[nodiscard]] std::uint8_t rank_dot(Rank a, Rank b, int n);

/// Table d[x] = (v . x) for every x in F_3^n, built in O(3^n).
[[nodiscard]] std::vector<std::uint8_t> dot_table(const TernaryVector& v);

/// Walks a through F_3^n in rank order while tracking rank(alpha * a + beta * b)
/// for a fixed b and a small set of (alpha, beta) coefficient pairs.
class LinearFormWalker {
 public:
  struct Form {
    int alpha;
    int beta;
  };

  LinearFormWalker(int n, Rank b, std::span<const Form> forms);

  [[nodiscard]] Rank a() const { return a_rank_; }
  [[nodiscard]] Rank form(std::size_t k) const { return ranks_[k]; }
  /// Advances a by one; returns false once a wraps past 3^n - 1.
  bool next();

 private:
  static constexpr std::size_t kMaxForms = 4;
  int n_;
  Rank a_rank_ = 0;
  std::size_t nforms_;
  std::array<std::uint8_t, kMaxDim> a_{};
  std::array<std::uint8_t, kMaxDim> b_{};
  std::array<Form, kMaxForms> forms_{};
  std::array<Rank, kMaxForms> ranks_{};
  std::array<std::array<std::uint8_t, kMaxDim>, kMaxForms> digits_{};
};

}  // namespace tcode
