#include "tcode/walsh.hpp"

#include <string>

#include "tcode/parallel.hpp"

namespace tcode {

namespace {

// Coefficients stay below 2 * 3^16 in magnitude, far from the int64 limit, so the
// butterflies below use plain arithmetic.
static_assert(pow3(kMaxInputDim) < (std::uint64_t{1} << 40));

struct Pair {
  std::int64_t a, b;
};

// z * w = -b + (a - b) w ;  z * w^2 = (b - a) - a w
inline Pair rot1(Pair z) { return {-z.b, z.a - z.b}; }
inline Pair rot2(Pair z) { return {z.b - z.a, -z.a}; }

void check_row_length(const WalshRow& row, int n) {
  if (row.size() != pow3(n)) throw std::invalid_argument("spectrum row length is not 3^n");
}

int infer_dim(std::size_t len) {
  int n = 0;
  std::size_t p = 1;
  while (p < len) {
    p *= 3;
    ++n;
  }
  if (p != len) throw std::invalid_argument("spectrum row length is not a power of 3");
  return n;
}

}  // namespace

WalshRow walsh_naive(const FunctionTable& F, const TernaryVector& mu) {
  if (mu.size() != F.m()) throw std::invalid_argument("walsh_naive: mu has dimension " + std::to_string(mu.size()) + ", expected " + std::to_string(F.m()));
  const int n = F.n();
  const Rank size = pow3(n);
  const std::vector<std::uint8_t> comp = F.component(mu.rank());
  WalshRow row(size);
  for (Rank nu = 0; nu < size; ++nu) {
    std::array<std::int64_t, 3> count{};
    for (Rank x = 0; x < size; ++x) {
      const int e = comp[x] + 3 - rank_dot(nu, x, n);
      ++count[static_cast<std::size_t>(e % 3)];
    }
    // c0 + c1 w + c2 w^2 = (c0 - c2) + (c1 - c2) w
    row[nu] = EisensteinInt(count[0] - count[2], count[1] - count[2]);
  }
  return row;
}

WalshRow walsh_fast_component(std::span<const std::uint8_t> values, int n) {
  const std::size_t size = pow3(n);
  if (values.size() != size) throw std::invalid_argument("walsh_fast_component: table length is not 3^n");
  std::vector<Pair> v(size);
  for (std::size_t x = 0; x < size; ++x) {
    switch (values[x]) {
      case 0: v[x] = {1, 0}; break;
      case 1: v[x] = {0, 1}; break;
      case 2: v[x] = {-1, -1}; break;
      default: throw std::invalid_argument("walsh_fast_component: value outside F_3");
    }
  }
  for (std::size_t stride = 1; stride < size; stride *= 3) {
    const std::size_t block = 3 * stride;
    for (std::size_t base = 0; base < size; base += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        Pair& p0 = v[base + off];
        Pair& p1 = v[base + off + stride];
        Pair& p2 = v[base + off + 2 * stride];
        const Pair a0 = p0, a1 = p1, a2 = p2;
        const Pair a1r1 = rot1(a1), a1r2 = rot2(a1), a2r1 = rot1(a2), a2r2 = rot2(a2);
        p0 = {a0.a + a1.a + a2.a, a0.b + a1.b + a2.b};
        p1 = {a0.a + a1r2.a + a2r1.a, a0.b + a1r2.b + a2r1.b};
        p2 = {a0.a + a1r1.a + a2r2.a, a0.b + a1r1.b + a2r2.b};
      }
    }
  }
  WalshRow row(size);
  for (std::size_t i = 0; i < size; ++i) row[i] = EisensteinInt(v[i].a, v[i].b);
  return row;
}

WalshRow walsh_fast_row(const FunctionTable& F, Rank mu) {
  const std::vector<std::uint8_t> comp = F.component(mu);
  return walsh_fast_component(comp, F.n());
}

std::vector<std::int64_t> two_re_row(const WalshRow& row) {
  std::vector<std::int64_t> out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) out[i] = row[i].two_re();
  return out;
}

WalshSpectrum::WalshSpectrum(int n, int m, std::vector<std::shared_ptr<const WalshRow>> rows)
    : n_(n), m_(m), rows_(std::move(rows)) {
  if (rows_.size() != pow3(m)) throw std::invalid_argument("WalshSpectrum: expected 3^m rows");
  two_re_.reserve(rows_.size());
  for (const auto& r : rows_) {
    check_row_length(*r, n);
    two_re_.push_back(two_re_row(*r));
  }
}

WalshSpectrum walsh_fast(const FunctionTable& F, unsigned threads, SpectrumCache* cache) {
  std::vector<std::shared_ptr<const WalshRow>> rows(pow3(F.m()));
  parallel_for(rows.size(), threads, [&](std::size_t mu) {
    rows[mu] = cache ? cache->row(F, mu) : std::make_shared<const WalshRow>(walsh_fast_row(F, mu));
  });
  return WalshSpectrum(F.n(), F.m(), std::move(rows));
}

EisensteinInt walsh_inverse(const WalshRow& row, const TernaryVector& nu) {
  const int n = nu.size();
  check_row_length(row, n);
  const std::vector<std::uint8_t> d = dot_table(nu);
  EisensteinInt acc;
  for (std::size_t x = 0; x < row.size(); ++x) acc += row[x].rotate(d[x]);
  const std::int64_t scale = ipow3(n);
  if (acc.re_unit() % scale != 0 || acc.om_unit() % scale != 0) {
    throw NotASpectrum("inverse transform is not divisible by 3^n at " + nu.to_string());
  }
  const EisensteinInt q(acc.re_unit() / scale, acc.om_unit() / scale);
  int j = 0;
  if (!unit_shaped(q, 1, j)) throw NotASpectrum("inverse transform is not a power of w at " + nu.to_string());
  return q;
}

std::vector<std::uint8_t> recover_function(const WalshRow& row, int n) {
  check_row_length(row, n);
  std::vector<std::uint8_t> f(row.size());
  for (Rank x = 0; x < row.size(); ++x) {
    int j = 0;
    (void)unit_shaped(walsh_inverse(row, TernaryVector::from_rank(x, n)), 1, j);
    f[x] = static_cast<std::uint8_t>(j);
  }
  return f;
}

EisensteinInt titsworth_sum(const WalshRow& row, const TernaryVector& tau) {
  const int n = tau.size();
  check_row_length(row, n);
  const Rank t = tau.rank();
  EisensteinInt acc;
  for (Rank nu = 0; nu < row.size(); ++nu) acc += row[nu] * row[rank_add(nu, t, n)].conj();
  return acc;
}

std::int64_t parseval_sum(const WalshRow& row) {
  (void)infer_dim(row.size());
  std::int64_t acc = 0;
  for (const auto& w : row) acc += w.norm();
  return acc;
}

EisensteinInt row_sum(const WalshRow& row) {
  EisensteinInt acc;
  for (const auto& w : row) acc += w;
  return acc;
}

std::shared_ptr<const WalshRow> SpectrumCache::row(const FunctionTable& F, Rank mu) {
  const Key key{F.fingerprint(), mu};
  {
    std::lock_guard lock(mu_);
    auto [lo, hi] = entries_.equal_range(key);
    for (auto it = lo; it != hi; ++it) {
      if (*it->second.table == F) {
        ++hits_;
        return it->second.row;
      }
    }
  }
  auto computed = std::make_shared<const WalshRow>(walsh_fast_row(F, mu));
  std::lock_guard lock(mu_);
  auto [lo, hi] = entries_.equal_range(key);
  for (auto it = lo; it != hi; ++it)
    if (*it->second.table == F) return it->second.row;
  entries_.emplace(key, Entry{std::make_shared<const FunctionTable>(F), computed});
  return computed;
}

std::size_t SpectrumCache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

std::size_t SpectrumCache::hits() const {
  std::lock_guard lock(mu_);
  return hits_;
}

void write_spectrum_csv(std::ostream& os, const WalshSpectrum& spectrum) {
  os << "rank_mu,rank_nu,re_unit,om_unit\n";
  for (Rank mu = 0; mu < spectrum.num_rows(); ++mu) {
    const WalshRow& r = spectrum.row(mu);
    for (Rank nu = 0; nu < r.size(); ++nu) os << mu << ',' << nu << ',' << r[nu].re_unit() << ',' << r[nu].om_unit() << '\n';
  }
}

}  // namespace tcode
