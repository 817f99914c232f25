#include "tcode/minimality.hpp"

#include <algorithm>
#include <string>

#include "tcode/classify.hpp"
#include "tcode/parallel.hpp"

namespace tcode {

const char* to_string(Method m) {
  switch (m) {
    case Method::covering_oracle: return "covering_oracle";
    case Method::weight_identity: return "weight_identity";
    case Method::theorem3: return "theorem3";
    case Method::theorem5: return "theorem5";
    case Method::corollary1_bound: return "corollary1_bound";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::minimal: return "minimal";
    case Verdict::not_minimal: return "not_minimal";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

TwoReRow::TwoReRow(std::vector<std::int64_t> v) : values(std::move(v)) {
  if (!values.empty()) {
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    min = *lo;
    max = *hi;
  }
}

namespace {

struct Range {
  std::int64_t lo, hi;
};

Range scaled(int c, const TwoReRow& r) {
  return c >= 0 ? Range{c * r.min, c * r.max} : Range{c * r.max, c * r.min};
}

bool reachable(std::int64_t base, Range a, Range b, std::int64_t target) {
  return base + a.lo + b.lo <= target && target <= base + a.hi + b.hi;
}

}  // namespace

std::optional<SingleRowHit> search_single_row(int n, const TwoReRow& t, std::int64_t target) {
  const auto& v = t.values;
  const Range other = {t.min, t.max};
  const std::array<Range, 2> third = {scaled(kThetas[0], t), scaled(kThetas[1], t)};
  bool any = false;
  for (const auto& th : third) any |= reachable(0, {t.min, t.max}, {other.lo + th.lo, other.hi + th.hi}, target);
  if (!any) return std::nullopt;
  static constexpr LinearFormWalker::Form kThird[] = {{-1, -1}};
  for (Rank nu = 0; nu < v.size(); ++nu) {
    const std::int64_t base = v[nu];
    const std::array<bool, 2> active = {reachable(base, other, third[0], target), reachable(base, other, third[1], target)};
    if (!active[0] && !active[1]) continue;
    LinearFormWalker w(n, nu, kThird);
    do {
      const Rank nu2 = w.a();
      if (nu2 == nu) continue;
      const Rank nu3 = w.form(0);
      const std::int64_t partial = base + v[nu2];
      for (int th = 0; th < 2; ++th) {
        const std::int64_t value = partial + kThetas[static_cast<std::size_t>(th)] * v[nu3];
        if (active[static_cast<std::size_t>(th)] && value == target) return SingleRowHit{nu, nu2, nu3, th, value};
      }
    } while (w.next());
  }
  return std::nullopt;
}

std::optional<FourTermHit> search_four_term(int n, const TwoReRow& first, std::span<const FourTermBlock> blocks,
                                            std::span<const std::array<int, 4>> patterns, std::int64_t target) {
  const std::size_t np = patterns.size();
  if (np > 8) throw std::invalid_argument("search_four_term: at most 8 patterns");

  // Per block and pattern: range of the three trailing terms.
  struct Tail {
    std::array<Range, 8> range;
  };
  std::vector<Tail> tails(blocks.size());
  std::vector<bool> block_live(blocks.size(), false);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t p = 0; p < np; ++p) {
      const auto& c = patterns[p];
      const Range r2 = scaled(c[1], *blocks[b].second), r3 = scaled(c[2], *blocks[b].sum), r4 = scaled(c[3], *blocks[b].diff);
      tails[b].range[p] = {r2.lo + r3.lo + r4.lo, r2.hi + r3.hi + r4.hi};
      const Range r1 = scaled(c[0], first);
      if (r1.lo + tails[b].range[p].lo <= target && target <= r1.hi + tails[b].range[p].hi) block_live[b] = true;
    }
  }
  if (std::none_of(block_live.begin(), block_live.end(), [](bool x) { return x; })) return std::nullopt;

  static constexpr LinearFormWalker::Form kForms[] = {{1, 1}, {-1, 1}};
  const auto& t1 = first.values;
  for (Rank nu = 0; nu < t1.size(); ++nu) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (!block_live[b]) continue;
      std::array<std::int64_t, 8> head{};
      std::array<std::size_t, 8> live{};
      std::size_t nlive = 0;
      for (std::size_t p = 0; p < np; ++p) {
        head[p] = patterns[p][0] * t1[nu];
        const Range& tr = tails[b].range[p];
        if (head[p] + tr.lo <= target && target <= head[p] + tr.hi) live[nlive++] = p;
      }
      if (nlive == 0) continue;
      const auto& t2 = blocks[b].second->values;
      const auto& t3 = blocks[b].sum->values;
      const auto& t4 = blocks[b].diff->values;
      LinearFormWalker w(n, nu, kForms);
      do {
        const std::int64_t v2 = t2[w.a()], v3 = t3[w.form(0)], v4 = t4[w.form(1)];
        for (std::size_t k = 0; k < nlive; ++k) {
          const std::size_t p = live[k];
          const auto& c = patterns[p];
          const std::int64_t value = head[p] + c[1] * v2 + c[2] * v3 + c[3] * v4;
          if (value == target) return FourTermHit{nu, blocks[b].label, w.a(), static_cast<int>(p), value};
        }
      } while (w.next());
    }
  }
  return std::nullopt;
}

namespace {

void require_zero_at_origin(const WalshSpectrum& s, const char* who) {
  const EisensteinInt full(ipow3(s.n()), 0);
  for (int j = 0; j < s.m(); ++j) {
    if (row_sum(s.row(pow3(j))) != full) throw PreconditionError(std::string(who) + ": requires F(0) = 0");
  }
}

std::vector<TwoReRow> two_re_rows(const WalshSpectrum& s) {
  std::vector<TwoReRow> rows;
  rows.reserve(s.num_rows());
  for (Rank mu = 0; mu < s.num_rows(); ++mu) rows.emplace_back(s.two_re(mu));
  return rows;
}

}  // namespace

MinimalityVerdict theorem3_check(const WalshSpectrum& spectrum, unsigned threads) {
  const int n = spectrum.n(), m = spectrum.m();
  require_zero_at_origin(spectrum, "theorem3_check");
  if (auto mu = first_affine_component(spectrum)) {
    throw PreconditionError("theorem3_check: component mu=" + TernaryVector::from_rank(*mu, m).to_string() + " is affine");
  }
  const std::int64_t target = 2 * ipow3(n);
  const std::vector<TwoReRow> rows = two_re_rows(spectrum);
  const Rank nrows = spectrum.num_rows();

  MinimalityVerdict out;
  out.method = Method::theorem3;

  auto hit1 = first_hit<Witness>(nrows - 1, threads, [&](std::size_t i) -> std::optional<Witness> {
    const Rank mu = i + 1;
    auto h = search_single_row(n, rows[mu], target);
    if (!h) return std::nullopt;
    return Witness{WitnessKind::single_row, 1, mu, h->nu, 0, h->nu2, h->nu3, h->theta_index, h->value};
  });
  if (hit1) {
    out.verdict = Verdict::not_minimal;
    out.witness = hit1;
    return out;
  }

  static constexpr std::array<std::array<int, 4>, 1> kCond2 = {{{1, 1, 1, -2}}};
  auto hit2 = first_hit<Witness>(nrows - 1, threads, [&](std::size_t i) -> std::optional<Witness> {
    const Rank mu = i + 1;
    std::vector<FourTermBlock> blocks;
    for (Rank mu2 = 1; mu2 < nrows; ++mu2) {
      if (mu2 == mu || mu2 == rank_neg(mu, m)) continue;
      blocks.push_back({mu2, &rows[mu2], &rows[rank_add(mu, mu2, m)], &rows[rank_sub(mu, mu2, m)]});
    }
    auto h = search_four_term(n, rows[mu], blocks, kCond2, target);
    if (!h) return std::nullopt;
    return Witness{WitnessKind::four_term, 2, mu, h->nu, h->label, h->nu2, 0, 3, h->value};
  });
  if (hit2) {
    out.verdict = Verdict::not_minimal;
    out.witness = hit2;
    return out;
  }
  out.verdict = Verdict::minimal;
  return out;
}

MinimalityVerdict corollary1_bound(const WalshSpectrum& spectrum) {
  require_zero_at_origin(spectrum, "corollary1_bound");
  const std::int64_t limit = ipow3(2 * spectrum.n());
  MinimalityVerdict out;
  out.method = Method::corollary1_bound;
  out.verdict = Verdict::minimal;
  for (Rank mu = 1; mu < spectrum.num_rows(); ++mu) {
    for (const auto& z : spectrum.row(mu)) {
      if (25 * z.norm() >= limit) {
        out.verdict = Verdict::inconclusive;
        return out;
      }
    }
  }
  return out;
}

}  // namespace tcode
