#include "tcode/report.hpp"

namespace tcode {

using nlohmann::json;

namespace {

const char* kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::covering: return "covering";
    case WitnessKind::weight_identity: return "weight_identity";
    case WitnessKind::single_row: return "single_row";
    case WitnessKind::four_term: return "four_term";
  }
  return "?";
}

}  // namespace

json to_json(const RunManifest& m) {
  json j = {{"command", m.command}, {"parameters", m.parameters}, {"tool_version", m.tool_version}};
  if (m.rng_seed) j["rng_seed"] = *m.rng_seed;
  if (m.wall_time_ms) j["wall_time_ms"] = *m.wall_time_ms;
  return j;
}

json to_json(const Witness& w) {
  json j = {{"kind", kind_name(w.kind)}};
  switch (w.kind) {
    case WitnessKind::covering:
    case WitnessKind::weight_identity:
      j["c1"] = {{"mu", w.mu}, {"nu", w.nu}};
      j["c2"] = {{"mu", w.mu2}, {"nu", w.nu2}};
      break;
    case WitnessKind::single_row:
      j["condition"] = w.condition;
      j["mu"] = w.mu;
      j["nu"] = w.nu;
      j["nu_prime"] = w.nu2;
      j["nu_double_prime"] = w.nu3;
      j["theta"] = kThetas[static_cast<std::size_t>(w.pattern)];
      j["two_re_sum"] = w.two_re_sum;
      break;
    case WitnessKind::four_term: {
      const auto& lam = kLambdaPatterns[static_cast<std::size_t>(w.pattern)];
      j["condition"] = w.condition;
      j["mu"] = w.mu;
      j["nu"] = w.nu;
      j["mu_prime"] = w.mu2;
      j["nu_prime"] = w.nu2;
      j["coefficients"] = lam;
      j["two_re_sum"] = w.two_re_sum;
      break;
    }
  }
  return j;
}

json to_json(const MinimalityVerdict& v) {
  json j = {{"method", to_string(v.method)}, {"verdict", to_string(v.verdict)}};
  j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  if (v.seed) j["seed"] = *v.seed;
  if (v.samples) j["samples"] = *v.samples;
  if (v.method == Method::theorem5) j["lambda_patterns"] = kLambdaPatterns;
  if (v.method == Method::theorem3) j["theta_values"] = kThetas;
  return j;
}

json to_json(const Construction2Report& r) {
  json j = {
      {"cond_a", r.cond_a},
      {"cond_b", r.cond_b},
      {"G_minimal", r.G_minimal},
      {"components_nonaffine", r.components_nonaffine},
      {"theorem5_conditions", r.theorem5_conditions},
      {"ab_violated", r.ab_violated},
      {"f_max_two_re", r.f_max_two_re},
      {"f_min_two_re", r.f_min_two_re},
  };
  if (r.cond_a_witness) j["cond_a_witness"] = to_json(*r.cond_a_witness);
  return j;
}

json analysis_report(const CodeAnalysis& a, const RunManifest& manifest) {
  json dist = json::array();
  for (const auto& [w, c] : a.distribution.freq) dist.push_back({w, c});
  json verdicts = json::array();
  for (const auto& v : a.verdicts) verdicts.push_back(to_json(v));
  return {
      {"schema", kReportSchema},
      {"manifest", to_json(manifest)},
      {"n", a.n},
      {"m", a.m},
      {"length", a.length},
      {"dimension", a.dimension},
      {"weight_distribution", dist},
      {"w_min", a.ab.w_min},
      {"w_max", a.ab.w_max},
      {"ab_satisfied", a.ab.satisfies_ab},
      {"spectral", {{"max_two_re", a.extremes.max_two_re},
                    {"min_two_re", a.extremes.min_two_re},
                    {"ab_violation_certified", a.extremes.ab_violation_certified}}},
      {"minimality", {{"overall", to_string(a.overall())}, {"verdicts", verdicts}}},
  };
}

json theorem6_report(const Theorem6Result& r, const RunManifest& manifest) {
  json j = analysis_report(r.analysis, manifest);
  j["construction2"] = to_json(r.construction2);
  j["construction2"]["condition3_vacuous"] = r.theorem5.condition3_vacuous;
  j["expected_d"] = r.expected_d;
  j["r"] = r.spec.r;
  j["s"] = r.spec.s;
  return j;
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

}  // namespace tcode
