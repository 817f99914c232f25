#include "tcode/analysis.hpp"

namespace tcode {

const char* to_string(MinimalityMode mode) {
  switch (mode) {
    case MinimalityMode::walsh: return "walsh";
    case MinimalityMode::brute: return "brute";
    case MinimalityMode::both: return "both";
    case MinimalityMode::bound: return "bound";
  }
  return "?";
}

Verdict CodeAnalysis::overall() const {
  Verdict v = Verdict::inconclusive;
  for (const auto& x : verdicts) {
    if (x.verdict == Verdict::not_minimal) return Verdict::not_minimal;
    if (x.verdict == Verdict::minimal) v = Verdict::minimal;
  }
  return v;
}

CodeAnalysis analyze(const FunctionTable& F, const AnalysisOptions& options, SpectrumCache* cache) {
  if (!F.zero_at_origin()) throw PreconditionError("analyze: requires F(0) = 0");
  const WalshSpectrum spectrum = walsh_fast(F, options.threads, cache);

  CodeAnalysis a;
  a.n = F.n();
  a.m = F.m();
  a.length = F.domain_size() - 1;
  a.dimension = code_dimension(spectrum);
  a.distribution = weight_distribution(spectrum, options.threads);
  a.ab = ab_status(a.distribution);
  a.extremes = spectral_extremes(spectrum);

  auto covering = [&] {
    CoveringMode cm;
    cm.exhaustive = F.n() + F.m() <= kExhaustiveCoveringMaxDim;
    cm.samples = options.covering_samples;
    cm.seed = options.seed;
    return covering_oracle(F, cm, options.threads);
  };
  switch (options.mode) {
    case MinimalityMode::walsh:
      a.verdicts.push_back(theorem3_check(spectrum, options.threads));
      break;
    case MinimalityMode::brute:
      a.verdicts.push_back(covering());
      break;
    case MinimalityMode::both:
      a.verdicts.push_back(theorem3_check(spectrum, options.threads));
      a.verdicts.push_back(covering());
      break;
    case MinimalityMode::bound:
      a.verdicts.push_back(corollary1_bound(spectrum));
      break;
  }

  std::optional<Verdict> seen;
  for (const auto& v : a.verdicts) {
    if (v.verdict == Verdict::inconclusive) continue;
    if (seen && *seen != v.verdict) throw OracleDisagreement("analyze: minimality verdicts disagree");
    seen = v.verdict;
  }
  return a;
}

}  // namespace tcode
