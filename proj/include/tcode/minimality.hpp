#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tcode/codes.hpp"
#include "tcode/function_table.hpp"
#include "tcode/walsh.hpp"

namespace tcode {

enum class Method { covering_oracle, weight_identity, theorem3, theorem5, corollary1_bound };
enum class Verdict { minimal, not_minimal, inconclusive };

[[nodiscard]] const char* to_string(Method m);
[[nodiscard]] const char* to_string(Verdict v);

enum class WitnessKind {
  /// c(mu, nu) is covered by c(mu2, nu2) but is not a multiple of it.
  covering,
  /// wt(c1 + c2) + wt(c2 - c1) = 2 wt(c2) - wt(c1) for c1 = c(mu, nu), c2 = c(mu2, nu2).
  weight_identity,
  /// Re(W(mu, nu) + W(mu, nu2) + theta W(mu, nu3)) = 3^n, theta = pattern == 0 ? 1 : -2.
  single_row,
  /// Four-term combination over (nu, nu2, nu + nu2, nu - nu2) hit 3^n.
  four_term,
};

struct Witness {
  WitnessKind kind = WitnessKind::covering;
  /// Which condition of the deciding method failed (1-based), 0 for oracles.
  int condition = 0;
  Rank mu = 0;
  Rank nu = 0;
  Rank mu2 = 0;
  Rank nu2 = 0;
  Rank nu3 = 0;
  /// theta index (0: theta = 1, 1: theta = -2) or lambda pattern index (position of the -2).
  int pattern = 0;
  /// The exact 2*Re value of the combination (equals 2 * 3^n for spectral witnesses).
  std::int64_t two_re_sum = 0;
};

struct MinimalityVerdict {
  Method method = Method::theorem3;
  Verdict verdict = Verdict::inconclusive;
  std::optional<Witness> witness;
  /// Sampled covering only.
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;

  [[nodiscard]] bool minimal() const { return verdict == Verdict::minimal; }
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A scalar spectrum row in 2*Re form with cached extremes.
struct TwoReRow {
  std::vector<std::int64_t> values;
  std::int64_t max = 0;
  std::int64_t min = 0;

  TwoReRow() = default;
  explicit TwoReRow(std::vector<std::int64_t> v);
  explicit TwoReRow(const WalshRow& row) : TwoReRow(two_re_row(row)) {}
};

/// theta in {1, -2}
inline constexpr std::array<int, 2> kThetas = {1, -2};
/// Lambda patterns with a single -2; pattern p puts the -2 at position p.
inline constexpr std::array<std::array<int, 4>, 4> kLambdaPatterns = {{
    {-2, 1, 1, 1},
    {1, -2, 1, 1},
    {1, 1, -2, 1},
    {1, 1, 1, -2},
}};

struct SingleRowHit {
  Rank nu, nu2, nu3;
  int theta_index;
  std::int64_t value;
};

/// First (nu, nu2, theta) in lexicographic order with nu != nu2, nu3 = -(nu + nu2) and
/// t[nu] + t[nu2] + theta t[nu3] == target.
[[nodiscard]] std::optional<SingleRowHit> search_single_row(int n, const TwoReRow& t, std::int64_t target);

struct FourTermBlock {
  Rank label;
  const TwoReRow* second;  // indexed by nu2
  const TwoReRow* sum;     // indexed by nu + nu2
  const TwoReRow* diff;    // indexed by nu - nu2
};

struct FourTermHit {
  Rank nu;
  Rank label;
  Rank nu2;
  int pattern;
  std::int64_t value;
};

/// First (nu, block, nu2, pattern) in lexicographic order with
///   c0 first[nu] + c1 second[nu2] + c2 sum[nu + nu2] + c3 diff[nu - nu2] == target
/// where (c0..c3) = patterns[pattern]. Blocks whose bounds exclude the target are skipped.
[[nodiscard]] std::optional<FourTermHit> search_four_term(int n, const TwoReRow& first, std::span<const FourTermBlock> blocks,
                                                          std::span<const std::array<int, 4>> patterns, std::int64_t target);

/// Walsh characterization for C_F with F(0) = 0 and no affine component:
/// (1) Re(W(mu,nu) + W(mu,nu') + theta W(mu,nu'')) != 3^n, nu, nu', nu'' pairwise distinct summing to 0;
/// (2) Re(W(mu,nu) + W(mu',nu') + W(mu+mu',nu+nu') - 2 W(mu-mu',nu-nu')) != 3^n for mu != +-mu'.
/// Condition (1) is scanned over all mu before condition (2). Throws PreconditionError.
[[nodiscard]] MinimalityVerdict theorem3_check(const WalshSpectrum& spectrum, unsigned threads = 0);

/// Minimal when 25 |W(mu,nu)|^2 < 3^(2n) for every mu != 0; otherwise inconclusive.
[[nodiscard]] MinimalityVerdict corollary1_bound(const WalshSpectrum& spectrum);

/// Exhaustive covering search is limited to codes with at most 3^8 codewords.
inline constexpr int kExhaustiveCoveringMaxDim = 8;

/// Support-inclusion search over one representative per codeword line.
[[nodiscard]] MinimalityVerdict covering_oracle_exhaustive(const FunctionTable& F, unsigned threads = 0);
/// Tests `pairs` random pairs of independent lines (both inclusion directions) drawn with `seed`.
/// Finding no covering pair yields "inconclusive".
[[nodiscard]] MinimalityVerdict covering_oracle_sampled(const FunctionTable& F, std::uint64_t pairs, std::uint64_t seed,
                                                        unsigned threads = 0);

struct CoveringMode {
  bool exhaustive = true;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
};

[[nodiscard]] MinimalityVerdict covering_oracle(const FunctionTable& F, const CoveringMode& mode, unsigned threads = 0);

/// Pairwise weight criterion: minimal iff wt(c1+c2) + wt(c2-c1) != 2 wt(c2) - wt(c1) whenever
/// c1, c2, c1+c2, c1-c2 are all nonzero. Weights are counted directly from codewords.
[[nodiscard]] MinimalityVerdict weight_identity_check(const FunctionTable& F, unsigned threads = 0);

/// Re-checks a witness independently of the method that produced it.
[[nodiscard]] bool covering_witness_holds(const FunctionTable& F, const Witness& w);

}  // namespace tcode
