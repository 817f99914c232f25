#pragma once

// Codes C_F = { c(mu, nu) = (mu . F(x) + nu . x) for x in F_3^n \ {0} }.
//
// The code is virtual: codewords are produced on demand from (mu, nu). Coordinate i of a
// codeword corresponds to the input of rank i + 1.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tcode/function_table.hpp"
#include "tcode/walsh.hpp"

namespace tcode {

/// Packed bitset over the 3^n - 1 codeword coordinates.
class CodewordSupport {
 public:
  CodewordSupport() = default;
  explicit CodewordSupport(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

  [[nodiscard]] std::size_t length() const { return length_; }
  [[nodiscard]] bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  [[nodiscard]] std::size_t popcount() const;
  /// suppt(*this) is a subset of suppt(other).
  [[nodiscard]] bool covered_by(const CodewordSupport& other) const;
  [[nodiscard]] const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const CodewordSupport&, const CodewordSupport&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A codeword stored as two bit planes: nonzero positions and positions equal to 2.
struct Codeword {
  CodewordSupport nonzero;
  CodewordSupport twos;

  [[nodiscard]] std::size_t weight() const { return nonzero.popcount(); }
  [[nodiscard]] int value(std::size_t i) const { return nonzero.test(i) ? (twos.test(i) ? 2 : 1) : 0; }
  /// True iff *this == lambda * other for lambda in {1, 2}.
  [[nodiscard]] bool is_nonzero_multiple_of(const Codeword& other) const;
  friend bool operator==(const Codeword&, const Codeword&) = default;
};

/// Cached component tables for generating codewords of C_F repeatedly.
class CodeFamily {
 public:
  explicit CodeFamily(FunctionTable F);

  [[nodiscard]] const FunctionTable& function() const { return F_; }
  [[nodiscard]] int n() const { return F_.n(); }
  [[nodiscard]] int m() const { return F_.m(); }
  [[nodiscard]] std::size_t length() const { return F_.domain_size() - 1; }
  [[nodiscard]] Rank num_codewords() const { return pow3(F_.n() + F_.m()); }

  [[nodiscard]] Codeword codeword(Rank mu, Rank nu) const;
  [[nodiscard]] CodewordSupport support(Rank mu, Rank nu) const;
  /// Hamming weight by counting coordinates (test oracle for weight_via_walsh).
  [[nodiscard]] std::size_t weight_direct(Rank mu, Rank nu) const;

 private:
  FunctionTable F_;
  std::vector<std::vector<std::uint8_t>> components_;
};

[[nodiscard]] Codeword codeword(const FunctionTable& F, const TernaryVector& mu, const TernaryVector& nu);

class SpectrumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// wt(c(mu, nu)) from the spectrum: 3^n - 3^(n-1) - 2Re(W(mu, -nu)) / 3 (for mu != 0).
/// Requires F(0) = 0; throws SpectrumError if 2Re(W) is not divisible by 3.
[[nodiscard]] std::int64_t weight_via_walsh(const WalshSpectrum& spectrum, Rank mu, Rank nu);

struct WeightDistribution {
  std::map<std::int64_t, std::uint64_t> freq;

  [[nodiscard]] std::uint64_t total() const;
  [[nodiscard]] std::uint64_t count(std::int64_t w) const;
  [[nodiscard]] std::size_t num_nonzero_weights() const;
  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Exact distribution over all 3^(n+m) pairs, parallel over mu. Requires F(0) = 0.
[[nodiscard]] WeightDistribution weight_distribution(const WalshSpectrum& spectrum, unsigned threads = 0);
[[nodiscard]] WeightDistribution weight_distribution(const FunctionTable& F, unsigned threads = 0);

struct AbStatus {
  std::int64_t w_min = 0;
  std::int64_t w_max = 0;
  /// w_min / w_max > 2/3, decided as 3 * w_min > 2 * w_max.
  bool satisfies_ab = false;
};

/// Throws std::invalid_argument if the distribution has no nonzero weight.
[[nodiscard]] AbStatus ab_status(const WeightDistribution& dist);

/// Extremes of 2*Re(W_F(mu, nu)) over mu != 0.
struct SpectralExtremes {
  std::int64_t max_two_re = 0;
  std::int64_t min_two_re = 0;
  /// max Re >= 0, min Re <= 0 and 3 max Re - 2 min Re >= 3^n (forces an AB violation).
  bool ab_violation_certified = false;
};

[[nodiscard]] SpectralExtremes spectral_extremes(const WalshSpectrum& spectrum);

/// Smallest nonzero weight. Throws std::invalid_argument on an all-zero distribution.
[[nodiscard]] std::int64_t min_distance(const WeightDistribution& dist);

class DimensionError : public std::runtime_error {
 public:
  DimensionError(const std::string& what, Rank mu) : std::runtime_error(what), offending_mu(mu) {}
  Rank offending_mu;
};

/// Returns n + m after confirming (mu, nu) -> c(mu, nu) is injective, i.e. no mu != 0
/// has an affine component (W(mu, nu) = 3^n for some nu). Throws DimensionError naming mu.
[[nodiscard]] int check_dimension(const WalshSpectrum& spectrum);

/// Actual dimension n + m - log3 |{mu : mu . F affine}|; never throws.
[[nodiscard]] int code_dimension(const WalshSpectrum& spectrum);

}  // namespace tcode
