#include <gtest/gtest.h>

#include <map>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "tcode/classify.hpp"
#include "tcode/constructions.hpp"
#include "tcode/tft_io.hpp"
#include "tcode/verify.hpp"
#include "tcode/walsh.hpp"

using namespace tcode;

namespace {

// 2Re multiset of W_f for f = 1_E + x0 x1 + 2 with E spanned by the first r unit vectors.
std::map<std::int64_t, std::uint64_t> indicator_multiset(int n, int r) {
  const std::int64_t t = ipow3(n - 1), e = ipow3(r), off = ipow3(n - r) - 1;
  std::map<std::int64_t, std::uint64_t> m;
  auto add = [&](std::int64_t v, std::int64_t c) {
    if (c > 0) m[v] += static_cast<std::uint64_t>(c);
  };
  add(-t + e, 5);
  add(2 * t - e, 2);
  add(-t, 2);
  add(e, 5 * off);
  add(-e, 2 * off);
  add(0, ipow3(n) - 9 - 7 * off);
  return m;
}

std::map<std::int64_t, std::uint64_t> observed_multiset(const FunctionTable& f) {
  std::map<std::int64_t, std::uint64_t> m;
  for (Rank nu = 0; nu < f.domain_size(); ++nu) ++m[oracle::two_re(f, 1, nu)];
  return m;
}

}  // namespace

TEST(IndicatorQuadratic, ValuesMatchDefinition) {
  const FunctionTable f = make_indicator_quadratic(5, 2);
  EXPECT_EQ(f[0], 0u);
  for (Rank x = 0; x < f.domain_size(); ++x) {
    const auto d = oracle::digits(x, 5);
    const int in_e = d[2] == 0 && d[3] == 0 && d[4] == 0;
    ASSERT_EQ(f[x], static_cast<std::uint32_t>((in_e + d[0] * d[1] + 2) % 3));
  }
}

TEST(IndicatorQuadratic, SpectrumMultiset) {
  for (auto [n, r] : {std::pair{5, 2}, {6, 2}, {6, 3}, {7, 3}}) {
    const FunctionTable f = make_indicator_quadratic(n, r);
    const auto expected = indicator_multiset(n, r);
    EXPECT_EQ(observed_multiset(f), expected) << n << "," << r;
    EXPECT_EQ(expected_indicator_quadratic_two_re(n, r), expected);
    std::map<std::int64_t, std::uint64_t> fast;
    for (auto v : two_re_row(walsh_fast_row(f, 1))) ++fast[v];
    EXPECT_EQ(fast, expected);
  }
}

TEST(IndicatorQuadratic, RejectsBadParameters) {
  const SubspaceSpec E = SubspaceSpec::coordinate(5, 0, 2);
  const auto e = [](int i) { return TernaryVector::unit(5, i); };
  try {
    (void)make_indicator_quadratic(E, e(0), e(2));
    FAIL() << "expected ConstructionError";
  } catch (const ConstructionError& err) {
    EXPECT_NE(std::string(err.what()).find(" b "), std::string::npos) << err.what();
  }
  EXPECT_THROW((void)make_indicator_quadratic(E, e(0), TernaryVector({2, 0, 0, 0, 0})), ConstructionError);
  EXPECT_THROW((void)make_indicator_quadratic(SubspaceSpec::coordinate(5, 0, 3), e(0), e(1)), ConstructionError);
  EXPECT_THROW((void)make_indicator_quadratic(6, 1), ConstructionError);
  try {
    (void)make_indicator_quadratic(E, TernaryVector({1, 2, 0, 0, 0}), TernaryVector({2, 1, 0, 0, 0}));
    FAIL() << "expected ConstructionError";
  } catch (const ConstructionError& err) {
    EXPECT_NE(std::string(err.what()).find("dependent"), std::string::npos) << err.what();
  }
  try {
    (void)make_indicator_quadratic(E, TernaryVector({1, 1, 0, 0, 0}), TernaryVector({2, 2, 1, 0, 0}));
    FAIL() << "expected ConstructionError";
  } catch (const ConstructionError& err) {
    EXPECT_NE(std::string(err.what()).find("a+b"), std::string::npos) << err.what();
  }
}

TEST(FieldMultBent, IsVectorialBent) {
  for (auto [k, m] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 3}}) {
    const FunctionTable F = make_field_mult_bent(k, m);
    EXPECT_EQ(F.n(), 2 * k);
    EXPECT_EQ(F.m(), m);
    EXPECT_EQ(F[0], 0u);
    const PlateauClassification c = classify(F);
    ASSERT_TRUE(c.uniform_s.has_value());
    EXPECT_EQ(*c.uniform_s, 0);
    EXPECT_TRUE(c.vectorial_regular);
    for (Rank mu = 1; mu < pow3(m); ++mu)
      for (Rank nu = 0; nu < F.domain_size(); nu += 7) {
        const auto [a, b] = oracle::walsh(F, mu, nu);
        ASSERT_EQ(a * a - a * b + b * b, ipow3(2 * k));
      }
  }
  EXPECT_THROW((void)make_field_mult_bent(2, 3), ConstructionError);
  EXPECT_THROW((void)make_field_mult_bent(0, 1), ConstructionError);
}

TEST(DummyExtend, ValuesAndSpectrum) {
  std::mt19937_64 rng(12);
  const FunctionTable G = random_function(3, 2, rng);
  const FunctionTable H = extend_with_dummy(G, 2);
  ASSERT_EQ(H.n(), 5);
  for (Rank x = 0; x < H.domain_size(); ++x) ASSERT_EQ(H[x], G[x % 27]);
  const WalshSpectrum sg = walsh_fast(G), sh = walsh_fast(H);
  for (Rank mu = 0; mu < 9; ++mu)
    for (Rank nu = 0; nu < H.domain_size(); ++nu)
      ASSERT_EQ(sh.at(mu, nu), nu < 27 ? 9 * sg.at(mu, nu) : EisensteinInt()) << mu << " " << nu;
  const FunctionTable bent = make_field_mult_bent(2, 1);
  const PlateauClassification c = classify(extend_with_dummy(bent, 1));
  ASSERT_TRUE(c.uniform_s.has_value());
  EXPECT_EQ(*c.uniform_s, 1);
  EXPECT_TRUE(c.vectorial_regular);
  EXPECT_THROW((void)extend_with_dummy(G, 0), ConstructionError);
}

TEST(Compose, CoordinatesAndProjection) {
  std::mt19937_64 rng(13);
  const FunctionTable f = random_function(3, 1, rng), G = random_function(3, 2, rng);
  const FunctionTable F = compose(f, G);
  ASSERT_EQ(F.m(), 3);
  EXPECT_EQ(F.coordinate(0), f);
  EXPECT_EQ(F.project(1, 2), G);
  for (Rank x = 0; x < 27; ++x) ASSERT_EQ(F[x], f[x] + 3 * G[x]);
  for (Rank mt = 0; mt < 9; ++mt) {
    const FunctionTable A = shifted_component(f, G, mt);
    for (Rank x = 0; x < 27; ++x)
      ASSERT_EQ(static_cast<int>(A[x]), oracle::component(F, 1 + 3 * mt, x));
  }
  EXPECT_THROW((void)compose(G, f), ConstructionError);
  EXPECT_THROW((void)compose(f, random_function(4, 1, rng)), ConstructionError);
}

TEST(Tft, RoundTrip) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 20; ++i) {
    const FunctionTable F = random_function(1 + i % 4, 1 + i % 3, rng, false);
    std::stringstream ss;
    write_tft(ss, F);
    EXPECT_EQ(read_tft(ss), F);
  }
  std::stringstream ss;
  write_tft(ss, FunctionTable::from_function(1, 2, [](const TernaryVector& x) {
              return TernaryVector({x.digit(0), 1});
            }));
  EXPECT_EQ(ss.str(), "tft 1 1 2\n10\n11\n12\n");
}

TEST(Tft, ParseErrors) {
  auto parse = [](const std::string& text) {
    std::istringstream is(text);
    return read_tft(is);
  };
  EXPECT_THROW(parse(""), TftParseError);
  EXPECT_THROW(parse("tft 2 1 1\n0\n1\n2\n"), TftParseError);
  EXPECT_THROW(parse("tft 1 1\n0\n1\n"), TftParseError);
  EXPECT_THROW(parse("tft 1 1 1\n0\n1\n"), TftParseError);
  EXPECT_THROW(parse("tft 1 1 1\n0\n3\n2\n"), TftParseError);
  EXPECT_THROW(parse("tft 1 1 2\n00\n1\n22\n"), TftParseError);
  EXPECT_THROW(parse("tft 1 1 1\n0\n1\n2\n0\n"), TftParseError);
  EXPECT_THROW(parse("tft 1 17 1\n"), TftParseError);
  EXPECT_EQ(parse("tft 1 1 1\n0\n2\n1\n").data(), (std::vector<std::uint32_t>{0, 2, 1}));
}
