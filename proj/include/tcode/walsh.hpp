#pragma once

// Exact Walsh spectra over Z[w]:
//
//   W_F(mu, nu) = sum_x w^(mu . F(x) - nu . x)
//
// Rows are indexed by rank(mu), entries within a row by rank(nu).

#include <cstdint>
#include <memory>
#include <mutex>
#include <ostream>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "tcode/eisenstein.hpp"
#include "tcode/function_table.hpp"
#include "tcode/gf3.hpp"

namespace tcode {

using WalshRow = std::vector<EisensteinInt>;

class NotASpectrum : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Direct double loop; the reference the fast transform is tested against.
[[nodiscard]] WalshRow walsh_naive(const FunctionTable& F, const TernaryVector& mu);

/// Radix-3 transform of x -> w^(values[x]) for a table of length 3^n,
/// butterflies applied to coordinate 0 first.
[[nodiscard]] WalshRow walsh_fast_component(std::span<const std::uint8_t> values, int n);
[[nodiscard]] WalshRow walsh_fast_row(const FunctionTable& F, Rank mu);

/// 2 * Re of every entry of a row.
[[nodiscard]] std::vector<std::int64_t> two_re_row(const WalshRow& row);

class SpectrumCache;

/// Every row W_F(mu, .) for mu in F_3^m, including the trivial mu = 0 row.
class WalshSpectrum {
 public:
  WalshSpectrum(int n, int m, std::vector<std::shared_ptr<const WalshRow>> rows);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] Rank num_rows() const { return rows_.size(); }
  [[nodiscard]] const WalshRow& row(Rank mu) const { return *rows_.at(mu); }
  [[nodiscard]] const EisensteinInt& at(Rank mu, Rank nu) const { return (*rows_[mu])[nu]; }
  [[nodiscard]] const std::vector<std::int64_t>& two_re(Rank mu) const { return two_re_[mu]; }

 private:
  int n_, m_;
  std::vector<std::shared_ptr<const WalshRow>> rows_;
  std::vector<std::vector<std::int64_t>> two_re_;
};

/// Fast transform of every row, parallel over mu. When a cache is given, rows are read from
/// and inserted into it.
[[nodiscard]] WalshSpectrum walsh_fast(const FunctionTable& F, unsigned threads = 0, SpectrumCache* cache = nullptr);

/// Returns w^f(nu) recovered from a single spectrum row of a scalar function f: computes
/// sum_x W(x) w^(nu . x), checks it equals 3^n times a power of w, and divides.
/// Throws NotASpectrum otherwise.
[[nodiscard]] EisensteinInt walsh_inverse(const WalshRow& row, const TernaryVector& nu);
/// The scalar function whose spectrum `row` is (throws NotASpectrum).
[[nodiscard]] std::vector<std::uint8_t> recover_function(const WalshRow& row, int n);

/// sum_nu W(nu) * conj(W(nu + tau)).
[[nodiscard]] EisensteinInt titsworth_sum(const WalshRow& row, const TernaryVector& tau);
[[nodiscard]] std::int64_t parseval_sum(const WalshRow& row);
[[nodiscard]] EisensteinInt row_sum(const WalshRow& row);

/// Rows keyed by (function content, mu). Thread-safe; entries are immutable once inserted.
class SpectrumCache {
 public:
  [[nodiscard]] std::shared_ptr<const WalshRow> row(const FunctionTable& F, Rank mu);
  [[nodiscard]] std::size_t size() const;
  [[nodiscard]] std::size_t hits() const;

 private:
  struct Key {
    std::uint64_t fingerprint;
    Rank mu;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return static_cast<std::size_t>(k.fingerprint * 31 + k.mu); }
  };
  struct Entry {
    std::shared_ptr<const FunctionTable> table;
    std::shared_ptr<const WalshRow> row;
  };

  mutable std::mutex mu_;
  std::unordered_multimap<Key, Entry, KeyHash> entries_;
  std::size_t hits_ = 0;
};

/// CSV with header "rank_mu,rank_nu,re_unit,om_unit", rows in (mu, nu) rank order.
void write_spectrum_csv(std::ostream& os, const WalshSpectrum& spectrum);

}  // namespace tcode
