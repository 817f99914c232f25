#include "tcode/composite.hpp"

#include <string>

#include "tcode/classify.hpp"
#include "tcode/constructions.hpp"
#include "tcode/parallel.hpp"

namespace tcode {

namespace {

void require_composite(const CompositeSpec& spec) {
  if (spec.f.m() != 1) throw PreconditionError("composite: f must be scalar");
  if (spec.f.n() != spec.G.n()) throw PreconditionError("composite: f and G have different input dimensions");
  if (!spec.f.zero_at_origin() || !spec.G.zero_at_origin()) throw PreconditionError("composite: requires f(0) = 0 and G(0) = 0");
}

TwoReRow scalar_row(SpectrumCache& cache, const FunctionTable& h) { return TwoReRow(*cache.row(h, 1)); }

}  // namespace

Construction2Report construction2_premises(const CompositeSpec& spec, SpectrumCache& cache, unsigned threads) {
  require_composite(spec);
  const int n = spec.n();
  const std::int64_t target = 2 * ipow3(n);
  Construction2Report rep;

  const TwoReRow tf = scalar_row(cache, spec.f);
  rep.f_max_two_re = tf.max;
  rep.f_min_two_re = tf.min;
  if (auto h = search_single_row(n, tf, target)) {
    rep.cond_a_witness = Witness{WitnessKind::single_row, 1, 1, h->nu, 0, h->nu2, h->nu3, h->theta_index, h->value};
  }
  rep.cond_a = !rep.cond_a_witness;
  rep.cond_b = tf.max >= 0 && tf.min <= 0 && 3 * tf.max - 2 * tf.min >= target;

  try {
    rep.G_minimal = theorem3_check(walsh_fast(spec.G, threads, &cache), threads).minimal();
  } catch (const PreconditionError&) {
    rep.G_minimal = false;
  }

  const WalshSpectrum sf = walsh_fast(compose(spec.f, spec.G), threads, &cache);
  rep.components_nonaffine = !first_affine_component(sf);
  rep.ab_violated = !ab_status(weight_distribution(sf, threads)).satisfies_ab;
  return rep;
}

Theorem5Result theorem5_check(const CompositeSpec& spec, SpectrumCache& cache, unsigned threads,
                              const Construction2Report* premises) {
  require_composite(spec);
  Construction2Report computed;
  if (!premises) {
    computed = construction2_premises(spec, cache, threads);
    premises = &computed;
  }
  if (!premises->premises_hold()) {
    std::string failed;
    if (!premises->cond_a) failed += " (a)";
    if (!premises->cond_b) failed += " (b)";
    if (!premises->G_minimal) failed += " G-minimal";
    if (!premises->components_nonaffine) failed += " non-affine";
    throw PreconditionError("theorem5_check: premises fail:" + failed);
  }

  const int n = spec.n();
  const int mg = spec.G.m();
  const Rank q = pow3(mg);
  const std::int64_t target = 2 * ipow3(n);

  // A[mu~] = f + mu~ . G (A[0] = f) and the rows of G.
  std::vector<TwoReRow> A(q), Grow(q);
  parallel_for(q, threads, [&](std::size_t mt) {
    A[mt] = mt == 0 ? scalar_row(cache, spec.f) : scalar_row(cache, shifted_component(spec.f, spec.G, mt));
    Grow[mt] = TwoReRow(*cache.row(spec.G, mt));
  });

  Theorem5Result res;
  res.verdict.method = Method::theorem5;
  std::array<std::optional<Witness>, 3> hits;

  hits[0] = first_hit<Witness>(q - 1, threads, [&](std::size_t i) -> std::optional<Witness> {
    const Rank mt = i + 1;
    auto h = search_single_row(n, A[mt], target);
    if (!h) return std::nullopt;
    return Witness{WitnessKind::single_row, 1, mt, h->nu, 0, h->nu2, h->nu3, h->theta_index, h->value};
  });

  hits[1] = first_hit<Witness>(q - 1, threads, [&](std::size_t i) -> std::optional<Witness> {
    const Rank mt = i + 1;
    const FourTermBlock block{mt, &Grow[mt], &A[mt], &A[rank_scale(mt, 2, mg)]};
    auto h = search_four_term(n, A[0], std::span(&block, 1), kLambdaPatterns, target);
    if (!h) return std::nullopt;
    return Witness{WitnessKind::four_term, 2, mt, h->nu, h->label, h->nu2, 0, h->pattern, h->value};
  });

  res.condition3_vacuous = mg < 2;
  if (!res.condition3_vacuous) {
    hits[2] = first_hit<Witness>(q - 1, threads, [&](std::size_t i) -> std::optional<Witness> {
      const Rank mt = i + 1;
      std::vector<FourTermBlock> blocks;
      for (Rank mt2 = 1; mt2 < q; ++mt2) {
        if (mt2 == mt || mt2 == rank_neg(mt, mg)) continue;
        blocks.push_back({mt2, &Grow[mt2], &A[rank_add(mt, mt2, mg)], &A[rank_sub(mt, mt2, mg)]});
      }
      auto h = search_four_term(n, A[mt], blocks, kLambdaPatterns, target);
      if (!h) return std::nullopt;
      return Witness{WitnessKind::four_term, 3, mt, h->nu, h->label, h->nu2, 0, h->pattern, h->value};
    });
  }

  for (std::size_t c = 0; c < 3; ++c) res.conditions[c] = !hits[c];
  res.verdict.verdict = Verdict::minimal;
  for (const auto& h : hits) {
    if (h) {
      res.verdict.verdict = Verdict::not_minimal;
      res.verdict.witness = h;
      break;
    }
  }
  return res;
}

std::optional<Prop3Mismatch> prop3_blocks(const FunctionTable& f, const FunctionTable& G, SpectrumCache& cache,
                                          unsigned threads) {
  require_composite(CompositeSpec{f, G, {}, {}, {}, 0, 0});
  const int n = f.n();
  const int mg = G.m();
  const WalshSpectrum sF = walsh_fast(compose(f, G), threads, &cache);
  auto A = [&](Rank mt) { return mt == 0 ? cache.row(f, 1) : cache.row(shifted_component(f, G, mt), 1); };

  return first_hit<Prop3Mismatch>(sF.num_rows(), threads, [&](std::size_t mu) -> std::optional<Prop3Mismatch> {
    const Rank mu1 = mu % 3, mt = mu / 3;
    const WalshRow& got = sF.row(mu);
    const auto base = mu1 == 0 ? cache.row(G, mt) : A(mu1 == 1 ? mt : rank_scale(mt, 2, mg));
    for (Rank nu = 0; nu < got.size(); ++nu) {
      const EisensteinInt want = mu1 == 2 ? (*base)[rank_neg(nu, n)].conj() : (*base)[nu];
      if (got[nu] != want) return Prop3Mismatch{mu, nu};
    }
    return std::nullopt;
  });
}

std::optional<Rank> three_function_identity_mismatch(const FunctionTable& p1, const FunctionTable& p2, const FunctionTable& p3) {
  const int n = p1.n();
  for (const auto* p : {&p1, &p2, &p3}) {
    if (p->m() != 1 || p->n() != n) throw std::invalid_argument("three_function_identity: need scalar functions on one space");
  }
  const Rank size = pow3(n);
  auto walsh_of = [&](int c1, int c2, int c3) {
    std::vector<std::uint8_t> t(size);
    for (Rank x = 0; x < size; ++x) t[x] = mod3(c1 * p1[x] + c2 * p2[x] + c3 * p3[x]);
    return walsh_fast_component(t, n);
  };
  std::vector<std::uint8_t> ft(size);
  for (Rank x = 0; x < size; ++x) {
    const int a = static_cast<int>(p1[x]), b = static_cast<int>(p2[x]), c = static_cast<int>(p3[x]);
    ft[x] = mod3(a + (b - a) * (c - a));
  }
  const WalshRow wf = walsh_fast_component(ft, n);

  const EisensteinInt w1 = EisensteinInt::zeta_pow(1), w2 = EisensteinInt::zeta_pow(2);
  const WalshRow t0 = walsh_of(1, 0, 0), t1 = walsh_of(0, 1, 0), t2 = walsh_of(2, 2, 0), t3 = walsh_of(0, 0, 1),
                 t4 = walsh_of(2, 0, 2), t5 = walsh_of(1, 2, 1), t6 = walsh_of(1, 1, 2), t7 = walsh_of(2, 1, 1),
                 t8 = walsh_of(0, 2, 2);
  for (Rank nu = 0; nu < size; ++nu) {
    const EisensteinInt rhs = t0[nu] + t1[nu] + t2[nu] + t3[nu] + t4[nu] + w1 * (t5[nu] + t6[nu]) + w2 * (t7[nu] + t8[nu]);
    if (3 * wf[nu] != rhs) return nu;
  }
  return std::nullopt;
}

bool plateau_indicator_bound_holds(const FunctionTable& g, const SubspaceSpec& E, int s) {
  const int n = g.n();
  if (g.m() != 1 || E.ambient_n() != n) throw std::invalid_argument("plateau_indicator_bound: dimension mismatch");
  if ((n + s) % 2 != 0) throw std::invalid_argument("plateau_indicator_bound: n + s must be even");
  const std::vector<std::uint8_t> ind = E.indicator();
  std::vector<std::uint8_t> phi(g.domain_size());
  for (Rank x = 0; x < phi.size(); ++x) phi[x] = mod3(g[x] + ind[x] + 2);
  const std::int64_t bound = ipow3((n + s) / 2) + 2 * ipow3(E.dim());
  for (const auto& z : walsh_fast_component(phi, n))
    if (z.norm() > bound * bound) return false;
  return true;
}

Theorem6Result theorem6_build_and_verify(int n, int r, int s, int m, const Theorem6Options& options) {
  auto reject = [&](const std::string& why) {
    throw ConstructionError("theorem6: (n, r, s, m) = (" + std::to_string(n) + ", " + std::to_string(r) + ", " +
                            std::to_string(s) + ", " + std::to_string(m) + ") rejected: " + why);
  };
  if (n <= 6) reject("n > 6 required");
  if (n > kMaxInputDim) reject("n exceeds the supported maximum " + std::to_string(kMaxInputDim));
  if (m < 2) reject("m >= 2 required");
  if (r < 2) reject("r >= 2 required so that a, b stay independent modulo the dual of E");
  if (n - r <= 3) reject("n - r > 3 required");
  if (s < 0 || s > n - 6) reject("0 <= s <= n - 6 required");
  if ((n + s) % 2 != 0) reject("n + s must be even for a regular plateaued G");
  if (m - 1 > (n - s) / 2) reject("m - 1 <= (n - s) / 2 required for the bent seed");

  const IndicatorQuadraticParams p = default_indicator_quadratic_params(n, r);
  FunctionTable f = make_indicator_quadratic(p.E, p.a, p.b);
  FunctionTable G = make_field_mult_bent((n - s) / 2, m - 1);
  if (s > 0) G = extend_with_dummy(G, s);
  const PlateauClassification cls = classify(G, options.threads);
  if (!cls.vectorial_regular || cls.uniform_s != s) {
    throw ConstructionError("theorem6: G is not vectorial regular " + std::to_string(s) + "-plateaued");
  }

  Theorem6Result res{CompositeSpec{std::move(f), std::move(G), p.E, p.a, p.b, r, s}, FunctionTable(n, m), {}, {}, {}, 0};
  res.F = compose(res.spec.f, res.spec.G);
  res.expected_d = ipow3(n - 1) + ipow3(n - 2) + ipow3(r - 1);

  SpectrumCache cache;
  AnalysisOptions ao;
  ao.mode = MinimalityMode::walsh;
  ao.threads = options.threads;
  res.analysis = analyze(res.F, ao, &cache);

  res.construction2 = construction2_premises(res.spec, cache, options.threads);
  res.theorem5 = theorem5_check(res.spec, cache, options.threads, &res.construction2);
  res.construction2.theorem5_conditions = res.theorem5.conditions;
  res.analysis.verdicts.push_back(res.theorem5.verdict);
  if (res.theorem5.verdict.verdict != res.analysis.verdicts.front().verdict) {
    throw OracleDisagreement("theorem6: composite conditions and Walsh characterization disagree");
  }
  if (options.covering_samples > 0) {
    res.analysis.verdicts.push_back(covering_oracle_sampled(res.F, options.covering_samples, options.seed, options.threads));
    if (res.analysis.verdicts.back().verdict == Verdict::not_minimal && res.theorem5.verdict.minimal()) {
      throw OracleDisagreement("theorem6: sampled covering found a covering pair in a code proven minimal");
    }
  }
  return res;
}

}  // namespace tcode
