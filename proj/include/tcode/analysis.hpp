#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tcode/classify.hpp"
#include "tcode/codes.hpp"
#include "tcode/function_table.hpp"
#include "tcode/minimality.hpp"

namespace tcode {

enum class MinimalityMode { walsh, brute, both, bound };

[[nodiscard]] const char* to_string(MinimalityMode mode);

struct AnalysisOptions {
  MinimalityMode mode = MinimalityMode::walsh;
  unsigned threads = 0;
  /// Used by brute mode when the code is too large for the exhaustive covering search.
  std::uint64_t covering_samples = 1'000'000;
  std::uint64_t seed = 1;
};

struct CodeAnalysis {
  int n = 0;
  int m = 0;
  std::uint64_t length = 0;
  int dimension = 0;
  WeightDistribution distribution;
  AbStatus ab;
  SpectralExtremes extremes;
  std::vector<MinimalityVerdict> verdicts;

  /// not_minimal if any verdict says so, else minimal if any verdict proves it, else inconclusive.
  [[nodiscard]] Verdict overall() const;
};

class OracleDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Weights, AB status and the minimality verdicts selected by `options.mode`.
/// Requires F(0) = 0. Throws OracleDisagreement if two conclusive verdicts differ.
[[nodiscard]] CodeAnalysis analyze(const FunctionTable& F, const AnalysisOptions& options, SpectrumCache* cache = nullptr);

}  // namespace tcode
