#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tcode/codes.hpp"

namespace tcode {

struct Check {
  std::string name;
  bool passed = false;
  std::string observed;
  std::string expected;
};

struct VerifyOptions {
  int max_n = 7;
  unsigned threads = 0;
  std::uint64_t seed = 20240601;
  std::uint64_t covering_samples = 1'000'000;
};

/// Suites: "identities", "tables", "differential", "theorem6".
[[nodiscard]] std::vector<std::string> suite_names();
/// Throws std::invalid_argument for an unknown suite.
[[nodiscard]] std::vector<Check> run_suite(std::string_view suite, const VerifyOptions& options);

/// Closed-form distribution of C_F for a vectorial regular s-plateaued F with F(0) = 0.
[[nodiscard]] WeightDistribution expected_plateaued_distribution(int n, int m, int s);
/// Closed-form 2*Re spectrum multiset of the indicator-quadratic f with the default (E, a, b).
[[nodiscard]] std::map<std::int64_t, std::uint64_t> expected_indicator_quadratic_two_re(int n, int r);

[[nodiscard]] std::string format_distribution(const std::map<std::int64_t, std::uint64_t>& freq);

}  // namespace tcode
