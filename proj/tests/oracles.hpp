#pragma once

// Reference computations for the tests. Deliberately slow and written without the library's
// fast paths: exponents are tallied per x, supports are compared coordinate by coordinate,
// and the spectral conditions are enumerated without pruning.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tcode/function_table.hpp"
#include "tcode/gf3.hpp"

namespace oracle {

using tcode::FunctionTable;
using tcode::Rank;

inline std::vector<int> digits(Rank r, int n) {
  std::vector<int> d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i, r /= 3) d[static_cast<std::size_t>(i)] = static_cast<int>(r % 3);
  return d;
}

inline Rank undigits(const std::vector<int>& d) {
  Rank r = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) r = r * 3 + static_cast<Rank>(((*it % 3) + 3) % 3);
  return r;
}

inline int dot(Rank a, Rank b, int n) {
  const auto x = digits(a, n), y = digits(b, n);
  int s = 0;
  for (int i = 0; i < n; ++i) s += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
  return s % 3;
}

inline Rank lin(int c1, Rank a, int c2, Rank b, int n) {
  auto x = digits(a, n);
  const auto y = digits(b, n);
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = c1 * x[static_cast<std::size_t>(i)] + c2 * y[static_cast<std::size_t>(i)];
  return undigits(x);
}

/// (mu . F(x)) mod 3 from the digits of F(x).
inline int component(const FunctionTable& F, Rank mu, Rank x) { return dot(mu, F[x], F.m()); }

/// W(mu, nu) as the (a, b) of a + b w: tally how often each exponent j occurs and use
/// c0 + c1 w + c2 w^2 = (c0 - c2) + (c1 - c2) w.
inline std::pair<std::int64_t, std::int64_t> walsh(const FunctionTable& F, Rank mu, Rank nu) {
  std::array<std::int64_t, 3> c{};
  for (Rank x = 0; x < F.domain_size(); ++x) ++c[static_cast<std::size_t>(((component(F, mu, x) - dot(nu, x, F.n())) % 3 + 3) % 3)];
  return {c[0] - c[2], c[1] - c[2]};
}

inline std::int64_t two_re(const FunctionTable& F, Rank mu, Rank nu) {
  const auto [a, b] = walsh(F, mu, nu);
  return 2 * a - b;
}

/// Codeword c(mu, nu) as values at x = 1 .. 3^n - 1.
inline std::vector<int> codeword(const FunctionTable& F, Rank mu, Rank nu) {
  std::vector<int> c;
  for (Rank x = 1; x < F.domain_size(); ++x) c.push_back((component(F, mu, x) + dot(nu, x, F.n())) % 3);
  return c;
}

inline int weight(const std::vector<int>& c) {
  int w = 0;
  for (int v : c) w += v != 0;
  return w;
}

inline std::map<std::int64_t, std::uint64_t> weight_distribution(const FunctionTable& F) {
  std::map<std::int64_t, std::uint64_t> d;
  for (Rank mu = 0; mu < tcode::pow3(F.m()); ++mu)
    for (Rank nu = 0; nu < F.domain_size(); ++nu) ++d[weight(codeword(F, mu, nu))];
  return d;
}

/// c1 covers only its multiples? Checks every ordered pair of codewords.
inline bool minimal_by_covering(const FunctionTable& F) {
  std::vector<std::vector<int>> words;
  for (Rank mu = 0; mu < tcode::pow3(F.m()); ++mu)
    for (Rank nu = 0; nu < F.domain_size(); ++nu) words.push_back(codeword(F, mu, nu));
  for (const auto& c1 : words) {
    if (weight(c1) == 0) continue;
    for (const auto& c2 : words) {
      bool covered = true, same = true, neg = true;
      for (std::size_t i = 0; i < c1.size(); ++i) {
        if (c1[i] != 0 && c2[i] == 0) covered = false;
        same &= c1[i] == c2[i];
        neg &= c1[i] == (3 - c2[i]) % 3;
      }
      if (covered && !same && !neg) return false;
    }
  }
  return true;
}

/// Both spectral conditions over their full ranges, no pruning.
inline bool minimal_by_spectrum(const FunctionTable& F) {
  const int n = F.n(), m = F.m();
  const Rank N = F.domain_size(), M = tcode::pow3(m);
  const std::int64_t target = 2 * tcode::ipow3(n);
  std::vector<std::vector<std::int64_t>> t(M, std::vector<std::int64_t>(N));
  for (Rank mu = 0; mu < M; ++mu)
    for (Rank nu = 0; nu < N; ++nu) t[mu][nu] = two_re(F, mu, nu);
  for (Rank mu = 1; mu < M; ++mu)
    for (Rank a = 0; a < N; ++a)
      for (Rank b = 0; b < N; ++b) {
        if (a == b) continue;
        const Rank c = lin(-1, a, -1, b, n);
        for (int theta : {1, -2})
          if (t[mu][a] + t[mu][b] + theta * t[mu][c] == target) return false;
      }
  for (Rank mu = 1; mu < M; ++mu)
    for (Rank mu2 = 1; mu2 < M; ++mu2) {
      if (mu2 == mu || mu2 == lin(-1, mu, 0, 0, m)) continue;
      const Rank sum = lin(1, mu, 1, mu2, m), diff = lin(1, mu, -1, mu2, m);
      for (Rank a = 0; a < N; ++a)
        for (Rank b = 0; b < N; ++b)
          if (t[mu][a] + t[mu2][b] + t[sum][lin(1, a, 1, b, n)] - 2 * t[diff][lin(1, a, -1, b, n)] == target) return false;
    }
  return true;
}

}  // namespace oracle
