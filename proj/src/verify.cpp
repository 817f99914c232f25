#include "tcode/verify.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "tcode/analysis.hpp"
#include "tcode/classify.hpp"
#include "tcode/composite.hpp"
#include "tcode/constructions.hpp"
#include "tcode/minimality.hpp"
#include "tcode/walsh.hpp"

namespace tcode {

std::string format_distribution(const std::map<std::int64_t, std::uint64_t>& freq) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [w, c] : freq) {
    os << (first ? "" : ", ") << w << ':' << c;
    first = false;
  }
  os << '}';
  return os.str();
}

WeightDistribution expected_plateaued_distribution(int n, int m, int s) {
  const std::int64_t q = ipow3(m) - 1;
  const std::int64_t h = ipow3((n + s) / 2);
  const std::int64_t k = ipow3((n - s) / 2);
  const std::int64_t w0 = ipow3(n) - ipow3(n - 1);
  WeightDistribution d;
  d.freq[0] = 1;
  d.freq[w0] = static_cast<std::uint64_t>(ipow3(n) - 1 + q * (ipow3(n) - ipow3(n - s)));
  d.freq[w0 - h + h / 3] = static_cast<std::uint64_t>(q * (ipow3(n - s - 1) + k - k / 3));
  d.freq[w0 + h / 3] = static_cast<std::uint64_t>(2 * q * (ipow3(n - s - 1) - k / 3));
  return d;
}

std::map<std::int64_t, std::uint64_t> expected_indicator_quadratic_two_re(int n, int r) {
  // T = span{a, b} meets the dual of E only in 0, so its 9 cosets are distinct.
  const std::int64_t t = ipow3(n - 1), e = ipow3(r), off = ipow3(n - r) - 1;
  std::map<std::int64_t, std::uint64_t> out;
  auto add = [&](std::int64_t v, std::int64_t c) {
    if (c > 0) out[v] += static_cast<std::uint64_t>(c);
  };
  add(-t + e, 5);
  add(2 * t - e, 2);
  add(-t, 2);
  add(e, 5 * off);
  add(-e, 2 * off);
  add(0, ipow3(n) - 9 - 7 * off);
  return out;
}

namespace {

Check check(std::string name, bool ok, std::string observed, std::string expected) {
  return Check{std::move(name), ok, std::move(observed), std::move(expected)};
}

Check check_eq(std::string name, std::int64_t observed, std::int64_t expected) {
  return check(std::move(name), observed == expected, std::to_string(observed), std::to_string(expected));
}

std::string nm(const char* what, int n, int m) {
  return std::string(what) + " n=" + std::to_string(n) + " m=" + std::to_string(m);
}

std::vector<Check> identities(const VerifyOptions& o) {
  std::vector<Check> out;
  std::mt19937_64 rng(o.seed);
  for (int n = 3; n <= std::min(o.max_n, 6); ++n) {
    int fast_ok = 0, parseval_ok = 0, tits_ok = 0;
    constexpr int kCount = 20;
    for (int i = 0; i < kCount; ++i) {
      const FunctionTable F = random_function(n, 2, rng, false);
      const WalshSpectrum s = walsh_fast(F, o.threads);
      bool fast = true, pars = true, tits = true;
      for (Rank mu = 0; mu < s.num_rows(); ++mu) {
        fast &= walsh_naive(F, TernaryVector::from_rank(mu, 2)) == s.row(mu);
        if (mu == 0) continue;
        pars &= parseval_sum(s.row(mu)) == ipow3(2 * n);
        tits &= titsworth_sum(s.row(mu), TernaryVector(n)) == EisensteinInt(ipow3(2 * n), 0);
        const Rank tau = 1 + rng() % (pow3(n) - 1);
        tits &= titsworth_sum(s.row(mu), TernaryVector::from_rank(tau, n)).is_zero();
      }
      fast_ok += fast;
      parseval_ok += pars;
      tits_ok += tits;
    }
    const std::string all = std::to_string(kCount) + "/" + std::to_string(kCount);
    out.push_back(check("fast transform equals direct sums n=" + std::to_string(n), fast_ok == kCount,
                        std::to_string(fast_ok) + "/" + std::to_string(kCount), all));
    out.push_back(check("Parseval n=" + std::to_string(n), parseval_ok == kCount,
                        std::to_string(parseval_ok) + "/" + std::to_string(kCount), all));
    out.push_back(check("Titsworth n=" + std::to_string(n), tits_ok == kCount,
                        std::to_string(tits_ok) + "/" + std::to_string(kCount), all));
  }

  if (o.max_n >= 4) {
    int ok = 0;
    for (int i = 0; i < 20; ++i) {
      const auto p1 = random_function(4, 1, rng, false), p2 = random_function(4, 1, rng, false),
                 p3 = random_function(4, 1, rng, false);
      ok += !three_function_identity_mismatch(p1, p2, p3);
    }
    out.push_back(check("three-function Walsh identity n=4", ok == 20, std::to_string(ok) + "/20", "20/20"));
  }

  if (o.max_n >= 5) {
    int ok = 0;
    for (int i = 0; i < 10; ++i) {
      SpectrumCache cache;
      const auto f = random_function(5, 1, rng, true), G = random_function(5, 2, rng, true);
      ok += !prop3_blocks(f, G, cache, o.threads);
    }
    out.push_back(check("composite block equalities n=5 m=3", ok == 10, std::to_string(ok) + "/10", "10/10"));
  }

  if (o.max_n >= 7) {
    int ok = 0, total = 0;
    const FunctionTable bent = make_field_mult_bent(3, 1);
    const FunctionTable plateau = extend_with_dummy(bent, 1);
    for (int r = 1; r <= 5; ++r) {
      ok += plateau_indicator_bound_holds(bent, SubspaceSpec::coordinate(6, 0, r), 0);
      ok += plateau_indicator_bound_holds(plateau, SubspaceSpec::coordinate(7, 7 - r, r), 1);
      total += 2;
    }
    out.push_back(check("plateaued-plus-indicator norm bound", ok == total, std::to_string(ok) + "/" + std::to_string(total),
                        std::to_string(total) + "/" + std::to_string(total)));
  }
  return out;
}

std::vector<Check> tables(const VerifyOptions& o) {
  std::vector<Check> out;
  if (o.max_n >= 6) {
    for (int m : {2, 3}) {
      const FunctionTable F = make_field_mult_bent(3, m);
      const WalshSpectrum s = walsh_fast(F, o.threads);
      const WeightDistribution d = weight_distribution(s, o.threads);
      const WeightDistribution want = expected_plateaued_distribution(6, m, 0);
      out.push_back(check(nm("bent weight distribution", 6, m), d == want, format_distribution(d.freq), format_distribution(want.freq)));
      out.push_back(check_eq(nm("bent dimension", 6, m), code_dimension(s), 6 + m));
      out.push_back(check(nm("bent AB condition", 6, m), ab_status(d).satisfies_ab, ab_status(d).satisfies_ab ? "true" : "false", "true"));
    }
    const auto f = make_indicator_quadratic(6, 2);
    const auto tr = two_re_row(walsh_fast_row(f, 1));
    std::map<std::int64_t, std::uint64_t> got;
    for (auto v : tr) ++got[v];
    const auto want = expected_indicator_quadratic_two_re(6, 2);
    out.push_back(check("indicator-quadratic spectrum n=6 r=2", got == want, format_distribution(got), format_distribution(want)));
  }
  if (o.max_n >= 7) {
    const FunctionTable F = extend_with_dummy(make_field_mult_bent(3, 2), 1);
    const WeightDistribution d = weight_distribution(F, o.threads);
    const WeightDistribution want = expected_plateaued_distribution(7, 2, 1);
    out.push_back(check("1-plateaued weight distribution n=7 m=2", d == want, format_distribution(d.freq), format_distribution(want.freq)));
    out.push_back(check_eq("1-plateaued minimum distance n=7 m=2", min_distance(d), 1404));

    const auto f = make_indicator_quadratic(7, 3);
    const auto tr = two_re_row(walsh_fast_row(f, 1));
    std::map<std::int64_t, std::uint64_t> got;
    for (auto v : tr) ++got[v];
    const auto wq = expected_indicator_quadratic_two_re(7, 3);
    out.push_back(check("indicator-quadratic spectrum n=7 r=3", got == wq, format_distribution(got), format_distribution(wq)));
  }
  return out;
}

std::vector<Check> differential(const VerifyOptions& o) {
  std::vector<Check> out;
  std::mt19937_64 rng(o.seed);
  const int top = std::min(o.max_n, 4);
  if (top < 3) return out;
  constexpr int kTarget = 50;
  int agree = 0, minimal = 0, witnesses_ok = 0, witnesses = 0, bound_ok = 0, bound_hits = 0;
  for (int i = 0; i < kTarget; ++i) {
    const int n = 3 + i % (top - 2);
    const int m = 1 + (i / 2) % 2;
    FunctionTable F = random_function(n, m, rng, true);
    WalshSpectrum s = walsh_fast(F, o.threads);
    while (first_affine_component(s)) {
      F = random_function(n, m, rng, true);
      s = walsh_fast(F, o.threads);
    }
    const auto t3 = theorem3_check(s, o.threads);
    const auto cov = covering_oracle_exhaustive(F, o.threads);
    const auto wid = weight_identity_check(F, o.threads);
    agree += t3.verdict == cov.verdict && cov.verdict == wid.verdict;
    minimal += cov.minimal();
    if (cov.witness) {
      ++witnesses;
      witnesses_ok += covering_witness_holds(F, *cov.witness);
    }
    if (corollary1_bound(s).minimal()) {
      ++bound_hits;
      bound_ok += t3.minimal();
    }
  }
  out.push_back(check("covering = Walsh characterization = weight criterion", agree == kTarget,
                      std::to_string(agree) + "/" + std::to_string(kTarget) + " (" + std::to_string(minimal) + " minimal)",
                      std::to_string(kTarget) + "/" + std::to_string(kTarget)));
  out.push_back(check("covering witnesses re-verify", witnesses_ok == witnesses,
                      std::to_string(witnesses_ok) + "/" + std::to_string(witnesses),
                      std::to_string(witnesses) + "/" + std::to_string(witnesses)));
  out.push_back(check("bound-minimal implies Walsh-minimal", bound_ok == bound_hits,
                      std::to_string(bound_ok) + "/" + std::to_string(bound_hits),
                      std::to_string(bound_hits) + "/" + std::to_string(bound_hits)));
  return out;
}

std::vector<Check> theorem6(const VerifyOptions& o) {
  std::vector<Check> out;
  if (o.max_n < 7) return out;
  for (int r : {3, 2}) {
    Theorem6Options t;
    t.threads = o.threads;
    t.covering_samples = r == 3 ? o.covering_samples : 0;
    t.seed = o.seed;
    const Theorem6Result res = theorem6_build_and_verify(7, r, 1, 2, t);
    const std::string tag = "(7," + std::to_string(r) + ",1,2) ";
    const auto& a = res.analysis;
    out.push_back(check_eq(tag + "length", static_cast<std::int64_t>(a.length), 2186));
    out.push_back(check_eq(tag + "dimension", a.dimension, 9));
    out.push_back(check_eq(tag + "minimum distance", a.ab.w_min, res.expected_d));
    if (r == 3) out.push_back(check_eq(tag + "maximum weight", a.ab.w_max, 1701));
    out.push_back(check(tag + "AB violated", !a.ab.satisfies_ab, a.ab.satisfies_ab ? "satisfied" : "violated", "violated"));
    out.push_back(check(tag + "premises", res.construction2.valid(), res.construction2.valid() ? "hold" : "fail", "hold"));
    for (const auto& v : a.verdicts) {
      const bool sampled = v.samples.has_value();
      const std::string want = sampled ? "inconclusive" : "minimal";
      out.push_back(check(tag + to_string(v.method) + (sampled ? " (sampled)" : ""), to_string(v.verdict) == want,
                          to_string(v.verdict), want));
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> suite_names() { return {"identities", "tables", "differential", "theorem6"}; }

std::vector<Check> run_suite(std::string_view suite, const VerifyOptions& options) {
  if (suite == "identities") return identities(options);
  if (suite == "tables") return tables(options);
  if (suite == "differential") return differential(options);
  if (suite == "theorem6") return theorem6(options);
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace tcode
