#include "tcode/codes.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "tcode/parallel.hpp"

namespace tcode {

std::size_t CodewordSupport::popcount() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool CodewordSupport::covered_by(const CodewordSupport& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool Codeword::is_nonzero_multiple_of(const Codeword& other) const {
  if (nonzero != other.nonzero) return false;
  if (twos == other.twos) return true;
  // lambda = 2 swaps the 1 and 2 positions inside the common support.
  const auto& a = twos.words();
  const auto& b = other.twos.words();
  const auto& s = nonzero.words();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != (s[i] & ~b[i])) return false;
  return true;
}

CodeFamily::CodeFamily(FunctionTable F) : F_(std::move(F)) {
  components_.reserve(pow3(F_.m()));
  for (Rank mu = 0; mu < pow3(F_.m()); ++mu) components_.push_back(F_.component(mu));
}

Codeword CodeFamily::codeword(Rank mu, Rank nu) const {
  const auto& comp = components_.at(mu);
  const std::vector<std::uint8_t> d = dot_table(TernaryVector::from_rank(nu, F_.n()));
  Codeword c{CodewordSupport(length()), CodewordSupport(length())};
  for (std::size_t x = 1; x < comp.size(); ++x) {
    const int v = (comp[x] + d[x]) % 3;
    if (v) {
      c.nonzero.set(x - 1);
      if (v == 2) c.twos.set(x - 1);
    }
  }
  return c;
}

CodewordSupport CodeFamily::support(Rank mu, Rank nu) const {
  const auto& comp = components_.at(mu);
  const std::vector<std::uint8_t> d = dot_table(TernaryVector::from_rank(nu, F_.n()));
  CodewordSupport s(length());
  for (std::size_t x = 1; x < comp.size(); ++x)
    if ((comp[x] + d[x]) % 3) s.set(x - 1);
  return s;
}

std::size_t CodeFamily::weight_direct(Rank mu, Rank nu) const {
  const auto& comp = components_.at(mu);
  std::size_t w = 0;
  for (Rank x = 1; x < comp.size(); ++x) w += (comp[x] + rank_dot(nu, x, F_.n())) % 3 != 0;
  return w;
}

Codeword codeword(const FunctionTable& F, const TernaryVector& mu, const TernaryVector& nu) {
  if (mu.size() != F.m() || nu.size() != F.n()) throw std::invalid_argument("codeword: dimension mismatch");
  return CodeFamily(F).codeword(mu.rank(), nu.rank());
}

std::int64_t weight_via_walsh(const WalshSpectrum& spectrum, Rank mu, Rank nu) {
  const int n = spectrum.n();
  const std::int64_t base = ipow3(n) - ipow3(n - 1);
  if (mu == 0) return nu == 0 ? 0 : base;
  const std::int64_t tr = spectrum.two_re(mu)[rank_neg(nu, n)];
  if (tr % 3 != 0) {
    throw SpectrumError("2Re(W) = " + std::to_string(tr) + " is not divisible by 3 at mu=" + std::to_string(mu) +
                        "; spectrum is corrupt or F(0) != 0");
  }
  return base - tr / 3;
}

std::uint64_t WeightDistribution::total() const {
  std::uint64_t t = 0;
  for (const auto& [w, c] : freq) t += c;
  return t;
}

std::uint64_t WeightDistribution::count(std::int64_t w) const {
  auto it = freq.find(w);
  return it == freq.end() ? 0 : it->second;
}

std::size_t WeightDistribution::num_nonzero_weights() const {
  return freq.size() - (freq.count(0) ? 1 : 0);
}

WeightDistribution weight_distribution(const WalshSpectrum& spectrum, unsigned threads) {
  const int n = spectrum.n();
  const Rank rows = spectrum.num_rows();
  std::vector<std::map<std::int64_t, std::uint64_t>> partial(rows);
  parallel_for(rows, threads, [&](std::size_t mu) {
    auto& local = partial[mu];
    if (mu == 0) {
      local[0] = 1;
      if (pow3(n) > 1) local[ipow3(n) - ipow3(n - 1)] = pow3(n) - 1;
      return;
    }
    // Over all nu, -nu runs over F_3^n as well, so the row can be scanned directly.
    const std::int64_t base = ipow3(n) - ipow3(n - 1);
    for (std::int64_t tr : spectrum.two_re(mu)) {
      if (tr % 3 != 0) throw SpectrumError("2Re(W) not divisible by 3; spectrum is corrupt or F(0) != 0");
      ++local[base - tr / 3];
    }
  });
  WeightDistribution out;
  for (const auto& p : partial)
    for (const auto& [w, c] : p) out.freq[w] += c;
  return out;
}

WeightDistribution weight_distribution(const FunctionTable& F, unsigned threads) {
  if (!F.zero_at_origin()) throw std::invalid_argument("weight_distribution: requires F(0) = 0");
  return weight_distribution(walsh_fast(F, threads), threads);
}

AbStatus ab_status(const WeightDistribution& dist) {
  AbStatus s;
  bool any = false;
  for (const auto& [w, c] : dist.freq) {
    if (w == 0 || c == 0) continue;
    if (!any) {
      s.w_min = s.w_max = w;
      any = true;
    }
    s.w_min = std::min(s.w_min, w);
    s.w_max = std::max(s.w_max, w);
  }
  if (!any) throw std::invalid_argument("ab_status: distribution has no nonzero weight");
  s.satisfies_ab = 3 * s.w_min > 2 * s.w_max;
  return s;
}

SpectralExtremes spectral_extremes(const WalshSpectrum& spectrum) {
  SpectralExtremes e;
  bool first = true;
  for (Rank mu = 1; mu < spectrum.num_rows(); ++mu) {
    for (std::int64_t tr : spectrum.two_re(mu)) {
      if (first) {
        e.max_two_re = e.min_two_re = tr;
        first = false;
      }
      e.max_two_re = std::max(e.max_two_re, tr);
      e.min_two_re = std::min(e.min_two_re, tr);
    }
  }
  e.ab_violation_certified =
      !first && e.max_two_re >= 0 && e.min_two_re <= 0 && 3 * e.max_two_re - 2 * e.min_two_re >= 2 * ipow3(spectrum.n());
  return e;
}

std::int64_t min_distance(const WeightDistribution& dist) { return ab_status(dist).w_min; }

int check_dimension(const WalshSpectrum& spectrum) {
  const EisensteinInt full(ipow3(spectrum.n()), 0);
  for (Rank mu = 1; mu < spectrum.num_rows(); ++mu) {
    const WalshRow& row = spectrum.row(mu);
    if (std::find(row.begin(), row.end(), full) != row.end()) {
      throw DimensionError("component mu=" + TernaryVector::from_rank(mu, spectrum.m()).to_string() +
                               " is affine; C_F has dimension below n + m",
                           mu);
    }
  }
  return spectrum.n() + spectrum.m();
}

int code_dimension(const WalshSpectrum& spectrum) {
  const EisensteinInt full(ipow3(spectrum.n()), 0);
  Rank kernel = 1;
  for (Rank mu = 1; mu < spectrum.num_rows(); ++mu) {
    const WalshRow& row = spectrum.row(mu);
    if (std::find(row.begin(), row.end(), full) != row.end()) ++kernel;
  }
  int k = 0;
  while (kernel > 1) kernel /= 3, ++k;
  return spectrum.n() + spectrum.m() - k;
}

}  // namespace tcode
