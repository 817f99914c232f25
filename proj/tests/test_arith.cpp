#include <gtest/gtest.h>

#include <random>
#include <set>

#include "tcode/eisenstein.hpp"
#include "tcode/ext_field.hpp"
#include "tcode/gf3.hpp"
#include "tcode/subspace.hpp"

using namespace tcode;

TEST(Ranks, Examples) {
  EXPECT_EQ(rank_to_vec(0, 4), TernaryVector({0, 0, 0, 0}));
  EXPECT_EQ(rank_to_vec(5, 3), TernaryVector({2, 1, 0}));
  EXPECT_EQ(rank_to_vec(26, 3), TernaryVector({2, 2, 2}));
  EXPECT_THROW((void)rank_to_vec(27, 3), std::out_of_range);
}

TEST(Ranks, RoundTripAndArithmetic) {
  for (int n = 1; n <= 5; ++n) {
    for (Rank r = 0; r < pow3(n); ++r) {
      const auto v = rank_to_vec(r, n);
      ASSERT_EQ(vec_to_rank(v), r);
      ASSERT_TRUE((v + (-v)).is_zero());
      ASSERT_EQ(rank_neg(r, n), (-v).rank());
      ASSERT_EQ(rank_scale(r, 2, n), (Trit(2) * v).rank());
    }
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Rank a = rng() % pow3(n), b = rng() % pow3(n);
    const auto va = rank_to_vec(a, n), vb = rank_to_vec(b, n);
    ASSERT_EQ(rank_add(a, b, n), (va + vb).rank());
    ASSERT_EQ(rank_sub(a, b, n), (va - vb).rank());
    ASSERT_EQ(rank_dot(a, b, n), dot(va, vb).value());
  }
}

TEST(Dot, Examples) {
  EXPECT_EQ(dot(TernaryVector({1, 2}), TernaryVector({2, 2})), Trit(0));
  EXPECT_EQ(dot(TernaryVector({0, 0, 0}), TernaryVector({1, 2, 1})), Trit(0));
  EXPECT_EQ(dot(TernaryVector({1, 0, 1}), TernaryVector({1, 1, 1})), Trit(2));
  EXPECT_THROW((void)dot(TernaryVector({1, 0}), TernaryVector({1, 1, 1})), std::invalid_argument);
}

TEST(Dot, TableMatchesPointwise) {
  const auto v = TernaryVector({2, 0, 1, 1});
  const auto d = dot_table(v);
  for (Rank x = 0; x < pow3(4); ++x) ASSERT_EQ(d[x], dot(v, rank_to_vec(x, 4)).value());
}

TEST(LinearFormWalker, TracksForms) {
  const int n = 4;
  const LinearFormWalker::Form forms[] = {{1, 1}, {-1, 1}, {-1, -1}, {2, 0}};
  for (Rank b : {Rank{0}, Rank{5}, Rank{80}, Rank{41}}) {
    LinearFormWalker w(n, b, forms);
    Rank count = 0;
    do {
      const Rank a = w.a();
      ASSERT_EQ(a, count);
      ASSERT_EQ(w.form(0), rank_add(a, b, n));
      ASSERT_EQ(w.form(1), rank_sub(b, a, n));
      ASSERT_EQ(w.form(2), rank_neg(rank_add(a, b, n), n));
      ASSERT_EQ(w.form(3), rank_scale(a, 2, n));
      ++count;
    } while (w.next());
    EXPECT_EQ(count, pow3(n));
  }
}

TEST(Eisenstein, Examples) {
  const EisensteinInt w(0, 1);
  EXPECT_EQ(eis_mul(w, w), EisensteinInt(-1, -1));
  EXPECT_EQ(w * w * w, EisensteinInt(1, 0));
  EXPECT_EQ(EisensteinInt(1, 1).norm(), 1);
  EXPECT_EQ(EisensteinInt(1, 0) + w + w * w, EisensteinInt(0, 0));
  EXPECT_EQ(EisensteinInt(3, 1).two_re(), 5);
  EXPECT_EQ(EisensteinInt(3, 1).conj(), EisensteinInt(2, -1));
  for (int j = 0; j < 3; ++j) EXPECT_EQ(EisensteinInt::zeta_pow(j) * EisensteinInt::zeta_pow(3 - j), EisensteinInt(1, 0));
}

TEST(Eisenstein, RingLaws) {
  std::mt19937_64 rng(11);
  auto rnd = [&] {
    return EisensteinInt(static_cast<std::int64_t>(rng() % 2001) - 1000, static_cast<std::int64_t>(rng() % 2001) - 1000);
  };
  for (int i = 0; i < 1000; ++i) {
    const auto x = rnd(), y = rnd(), z = rnd();
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ((x * y).conj(), x.conj() * y.conj());
    ASSERT_EQ((x * y).norm(), x.norm() * y.norm());
    ASSERT_EQ((x + y).two_re(), x.two_re() + y.two_re());
    ASSERT_EQ(x.conj().two_re(), x.two_re());
    ASSERT_EQ(x * x.conj(), EisensteinInt(x.norm(), 0));
    ASSERT_GE(x.norm(), 0);
    for (int j = 0; j < 3; ++j) ASSERT_EQ(x.rotate(j), x * EisensteinInt::zeta_pow(j));
  }
}

TEST(Eisenstein, OverflowIsDetected) {
  const EisensteinInt big(std::int64_t{1} << 62, 0);
  EXPECT_THROW((void)(big + big), std::overflow_error);
  EXPECT_THROW((void)(big * EisensteinInt(4, 0)), std::overflow_error);
}

TEST(Subspace, DualExamples) {
  EXPECT_EQ(dual_subspace(SubspaceSpec(4)).dim(), 4);
  EXPECT_EQ(dual_subspace(SubspaceSpec::full(4)).dim(), 0);
  const SubspaceSpec E(4, {TernaryVector({1, 0, 0, 0}), TernaryVector({0, 1, 0, 0})});
  const SubspaceSpec D = dual_subspace(E);
  EXPECT_EQ(D.dim(), 2);
  EXPECT_TRUE(D.contains(TernaryVector({0, 0, 1, 0})));
  EXPECT_TRUE(D.contains(TernaryVector({0, 0, 0, 1})));
  EXPECT_FALSE(D.contains(TernaryVector({1, 0, 0, 0})));
}

TEST(Subspace, RandomDuals) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<TernaryVector> basis;
    const int want = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    while (static_cast<int>(basis.size()) < want) {
      auto cand = basis;
      cand.push_back(rank_to_vec(rng() % pow3(n), n));
      if (linearly_independent(cand)) basis = cand;
    }
    const SubspaceSpec E(n, basis);
    const SubspaceSpec D = dual_subspace(E);
    ASSERT_EQ(D.dim(), n - E.dim());
    for (const auto& u : E.basis())
      for (const auto& v : D.basis()) ASSERT_TRUE(dot(u, v).is_zero());
    const SubspaceSpec DD = dual_subspace(D);
    ASSERT_EQ(DD.dim(), E.dim());
    for (const auto& u : E.basis()) ASSERT_TRUE(DD.contains(u));
    ASSERT_EQ(E.elements().size(), pow3(E.dim()));
    std::size_t members = 0;
    for (auto v : E.indicator()) members += v;
    ASSERT_EQ(members, pow3(E.dim()));
  }
  EXPECT_THROW(SubspaceSpec(2, {TernaryVector({1, 1}), TernaryVector({2, 2})}), std::invalid_argument);
}

TEST(ExtField, TraceExamples) {
  const ExtField f2(2), f3(3);
  EXPECT_EQ(f2.trace(0), Trit(0));
  EXPECT_EQ(f2.trace(1), Trit(2));
  EXPECT_EQ(f3.trace(1), Trit(0));
}

TEST(ExtField, AxiomsAndTrace) {
  for (int k = 1; k <= 5; ++k) {
    const ExtField F(k);
    const Rank q = F.order();
    std::set<int> traces;
    // X generates the multiplicative group (primitive modulus).
    const Rank X = k == 1 ? 2 : 3;
    std::set<Rank> powers;
    for (Rank e = 0; e + 1 < q; ++e) powers.insert(F.pow(X, e));
    EXPECT_EQ(powers.size(), q - 1) << "k=" << k;
    for (Rank x = 0; x < q; ++x) {
      traces.insert(F.trace(x).value());
      ASSERT_EQ(F.trace(x), F.trace_linear(x));
      ASSERT_EQ(F.mul(x, 1), x);
      if (x != 0) {
        ASSERT_EQ(F.pow(x, q - 1), 1u);
      }
    }
    EXPECT_EQ(traces.size(), 3u);
    std::mt19937_64 rng(k);
    for (int i = 0; i < 300; ++i) {
      const Rank a = rng() % q, b = rng() % q, c = rng() % q;
      ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
      ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      ASSERT_EQ(F.trace(F.add(a, b)), F.trace(a) + F.trace(b));
    }
  }
  EXPECT_THROW(ExtField(0), std::invalid_argument);
  EXPECT_THROW(ExtField(9), std::invalid_argument);
}
