// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tcode/classify.hpp"
#include "tcode/codes.hpp"
#include "tcode/composite.hpp"
#include "tcode/constructions.hpp"
#include "tcode/minimality.hpp"
#include "tcode/walsh.hpp"

using namespace tcode;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

using Dist = std::map<std::int64_t, std::uint64_t>;

std::string show(const Dist& d) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [k, v] : d) {
    os << (first ? "" : ", ") << k << ':' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

// Functions fed to the bound check across all criteria.
std::vector<FunctionTable>& corpus() {
  static std::vector<FunctionTable> c;
  return c;
}

bool has_affine_component(const FunctionTable& F) { return first_affine_component(walsh_fast(F, 1)).has_value(); }

Outcome identities() {
  Outcome o;
  std::mt19937_64 rng(1001);
  int checked = 0;
  for (int n = 3; n <= 6; ++n) {
    for (int i = 0; i < 100; ++i) {
      const FunctionTable F = random_function(n, 2, rng, false);
      const WalshSpectrum s = walsh_fast(F);
      for (Rank mu = 1; mu < 9; ++mu) {
        const WalshRow& row = s.row(mu);
        if (row != walsh_naive(F, TernaryVector::from_rank(mu, 2))) o.require(false, "fast != naive");
        if (parseval_sum(row) != ipow3(2 * n)) o.require(false, "Parseval");
        if (titsworth_sum(row, TernaryVector(n)) != EisensteinInt(ipow3(2 * n), 0)) o.require(false, "Titsworth tau=0");
        for (Rank tau = 1; tau < pow3(n); ++tau)
          if (!titsworth_sum(row, TernaryVector::from_rank(tau, n)).is_zero()) {
            o.require(false, "Titsworth tau!=0");
            break;
          }
      }
      ++checked;
    }
  }
  if (o.passed) o.detail = std::to_string(checked) + " functions, n=3..6";
  return o;
}

Dist plateau_table(int n, int m, int s) {
  const std::int64_t w0 = ipow3(n) - ipow3(n - 1), h = ipow3((n + s) / 2), k = ipow3((n - s) / 2);
  const std::int64_t M = ipow3(m) - 1;
  return {{0, 1},
          {w0, static_cast<std::uint64_t>(ipow3(n) - 1 + M * (ipow3(n) - ipow3(n - s)))},
          {w0 - h + h / 3, static_cast<std::uint64_t>(M * (ipow3(n - s - 1) + k - k / 3))},
          {w0 + h / 3, static_cast<std::uint64_t>(2 * M * (ipow3(n - s - 1) - k / 3))}};
}

Outcome bent_table() {
  Outcome o;
  for (int m : {2, 3}) {
    const FunctionTable F = make_field_mult_bent(3, m);
    corpus().push_back(F);
    const WalshSpectrum s = walsh_fast(F);
    const WeightDistribution d = weight_distribution(s);
    const std::uint64_t M = pow3(m) - 1;
    const Dist want = {{0, 1}, {486, 728}, {468, M * 261}, {495, M * 468}};
    o.require(d.freq == want, "m=" + std::to_string(m) + " got " + show(d.freq));
    o.require(d.freq == plateau_table(6, m, 0), "closed form m=" + std::to_string(m));
    o.require(check_dimension(s) == 6 + m, "dimension");
    o.require(ab_status(d).satisfies_ab, "AB");
    if (m == 2) o.detail = show(d.freq);
  }
  return o;
}

Outcome plateau_table_check() {
  Outcome o;
  const FunctionTable F = extend_with_dummy(make_field_mult_bent(3, 2), 1);
  corpus().push_back(F);
  const PlateauClassification c = classify(F);
  o.require(c.uniform_s == std::optional<int>(1) && c.vectorial_regular, "G not regular 1-plateaued");
  const WeightDistribution d = weight_distribution(F);
  o.require(d.freq == plateau_table(7, 2, 1), "got " + show(d.freq));
  o.require(min_distance(d) == ipow3(7) - ipow3(6) - ipow3(4) + ipow3(3), "d");
  if (o.passed) o.detail = show(d.freq) + ", d=" + std::to_string(min_distance(d));
  return o;
}

Outcome indicator_spectrum() {
  Outcome o;
  for (auto [n, r] : {std::pair{6, 2}, {7, 3}}) {
    const FunctionTable f = make_indicator_quadratic(n, r);
    corpus().push_back(f);
    const std::int64_t t = ipow3(n - 1), e = ipow3(r), off = ipow3(n - r) - 1;
    Dist want;
    want[-t + e] += 5;
    want[2 * t - e] += 2;
    want[-t] += 2;
    want[e] += static_cast<std::uint64_t>(5 * off);
    want[-e] += static_cast<std::uint64_t>(2 * off);
    want[0] += static_cast<std::uint64_t>(ipow3(n) - 9 - 7 * off);
    Dist got;
    for (Rank nu = 0; nu < f.domain_size(); ++nu) ++got[oracle::two_re(f, 1, nu)];
    o.require(got == want, "(" + std::to_string(n) + "," + std::to_string(r) + ") got " + show(got));
    if (n == 6) {
      o.require(got == Dist{{-243, 2}, {-234, 5}, {-9, 160}, {0, 160}, {9, 400}, {477, 2}}, "(6,2) literal");
      o.detail = "(6,2) " + show(got);
    }
  }
  return o;
}

Outcome differential() {
  Outcome o;
  std::mt19937_64 rng(1005);
  int instances = 0, minimal = 0;
  while (instances < 60) {
    const int n = 3 + instances % 2, m = 1 + (instances / 2) % 2;
    const FunctionTable F = random_function(n, m, rng);
    if (has_affine_component(F)) continue;
    corpus().push_back(F);
    ++instances;
    const bool cover = covering_oracle_exhaustive(F).minimal();
    const bool t3 = theorem3_check(walsh_fast(F)).minimal();
    const bool wi = weight_identity_check(F).minimal();
    const bool naive = oracle::minimal_by_covering(F);
    o.require(cover == t3 && t3 == wi && wi == naive, "disagreement at instance " + std::to_string(instances));
    minimal += t3;
  }
  if (o.passed) o.detail = std::to_string(instances) + " instances, " + std::to_string(minimal) + " minimal, 100% agreement";
  return o;
}

Outcome ab_violating() {
  Outcome o;
  Theorem6Options opt;
  opt.covering_samples = 1'000'000;
  opt.seed = 1;
  const Theorem6Result r = theorem6_build_and_verify(7, 3, 1, 2, opt);
  corpus().push_back(r.F);
  const auto& a = r.analysis;
  o.require(a.length == 2186 && a.dimension == 9 && a.ab.w_min == 981, "parameters");
  o.require(a.ab.w_max == 1701, "w_max");
  o.require(3 * a.ab.w_min < 2 * a.ab.w_max && !a.ab.satisfies_ab, "AB not violated");
  o.require(r.theorem5.verdict.verdict == Verdict::minimal, "theorem5");
  bool t3 = false, sampled = false;
  for (const auto& v : a.verdicts) {
    if (v.method == Method::theorem3) t3 = v.verdict == Verdict::minimal;
    if (v.method == Method::covering_oracle) sampled = !v.witness && v.samples == std::optional<std::uint64_t>(1'000'000);
  }
  o.require(t3, "theorem3");
  o.require(sampled, "sampled covering");
  o.require(theorem3_check(walsh_fast(r.F)).minimal(), "theorem3 recheck");
  if (o.passed) o.detail = "[2186, 9, 981], w_max 1701, minimal, 1e6 pairs without covering";
  return o;
}

Outcome cross_checks() {
  Outcome o;
  std::mt19937_64 rng(1007);
  int identity = 0, blocks = 0, bound = 0;
  for (int i = 0; i < 20; ++i) {
    const auto p1 = random_function(4, 1, rng, false), p2 = random_function(4, 1, rng, false),
               p3 = random_function(4, 1, rng, false);
    identity += !three_function_identity_mismatch(p1, p2, p3);
  }
  for (int i = 0; i < 10; ++i) {
    SpectrumCache cache;
    const auto f = random_function(5, 1, rng), G = random_function(5, 2, rng);
    blocks += !prop3_blocks(f, G, cache);
  }
  const FunctionTable bent6 = make_field_mult_bent(3, 1), bent4 = make_field_mult_bent(2, 1);
  const FunctionTable plateau7 = extend_with_dummy(bent6, 1), plateau6 = extend_with_dummy(bent4, 2);
  for (int r = 1; r <= 3; ++r) bound += plateau_indicator_bound_holds(bent6, SubspaceSpec::coordinate(6, 0, r), 0);
  for (int r = 1; r <= 4; ++r) bound += plateau_indicator_bound_holds(plateau7, SubspaceSpec::coordinate(7, 7 - r, r), 1);
  for (int r = 1; r <= 3; ++r) bound += plateau_indicator_bound_holds(plateau6, SubspaceSpec::coordinate(6, 1, r), 2);
  o.require(identity == 20, "nine-term identity " + std::to_string(identity) + "/20");
  o.require(blocks == 10, "block equalities " + std::to_string(blocks) + "/10");
  o.require(bound == 10, "norm bound " + std::to_string(bound) + "/10");
  if (o.passed) o.detail = "20/20 identity, 10/10 block, 10/10 bound";
  return o;
}

Outcome sufficiency() {
  Outcome o;
  // Bent and plateaued functions that pass the bound.
  corpus().push_back(make_field_mult_bent(3, 1));
  corpus().push_back(make_field_mult_bent(4, 2));
  corpus().push_back(extend_with_dummy(make_field_mult_bent(3, 1), 1));
  corpus().push_back(extend_with_dummy(make_field_mult_bent(3, 2), 2));
  std::mt19937_64 rng(1008);
  for (int i = 0; i < 20; ++i) corpus().push_back(random_function(6 + i % 2, 1, rng));
  int holds = 0, checked = 0;
  for (const FunctionTable& F : corpus()) {
    if (has_affine_component(F)) continue;
    ++checked;
    const WalshSpectrum s = walsh_fast(F);
    if (!corollary1_bound(s).minimal()) continue;
    ++holds;
    o.require(theorem3_check(s).minimal(), "counterexample n=" + std::to_string(F.n()));
  }
  o.require(holds > 0, "bound never held");
  if (o.passed) o.detail = std::to_string(holds) + " of " + std::to_string(checked) + " instances meet the bound, all minimal";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"1 spectral identities", 30, identities},
      {"2 bent weight distribution", 60, bent_table},
      {"3 plateaued weight distribution", 120, plateau_table_check},
      {"4 indicator-quadratic spectrum", 60, indicator_spectrum},
      {"5 differential minimality", 600, differential},
      {"6 AB-violating minimal code", 900, ab_violating},
      {"7 identity cross-checks", 60, cross_checks},
      {"8 bound sufficiency", 300, sufficiency},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) o.require(false, "over time limit");
    failed += !o.passed;
    std::printf("%s criterion %s (%.1fs): %s\n", o.passed ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
