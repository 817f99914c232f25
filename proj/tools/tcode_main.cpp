#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tcode/analysis.hpp"
#include "tcode/classify.hpp"
#include "tcode/composite.hpp"
#include "tcode/constructions.hpp"
#include "tcode/report.hpp"
#include "tcode/tft_io.hpp"
#include "tcode/verify.hpp"

using namespace tcode;

namespace {

enum Exit : int {
  kOk = 0,
  kParse = 1,
  kPrecondition = 2,
  kNotMinimal = 3,
  kInconclusive = 4,
  kDisagreement = 5,
  kVerifyFailed = 6,
};

void print_classification(const FunctionTable& F) {
  const PlateauClassification c = classify(F);
  std::cout << "n=" << F.n() << " m=" << F.m() << " F(0)=" << (F.zero_at_origin() ? "0" : "nonzero");
  if (c.uniform_s) {
    std::cout << " plateaued s=" << *c.uniform_s;
  } else {
    std::cout << " not uniformly plateaued";
  }
  std::cout << " vectorial_regular=" << (c.vectorial_regular ? "true" : "false") << '\n';
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os << text;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::minimal: return kOk;
    case Verdict::not_minimal: return kNotMinimal;
    case Verdict::inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ternary linear codes from vectorial functions: spectra, weights and minimality"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "Build a function table (TFT/1)");
  construct->require_subcommand(1);
  std::string out_path;
  int n = 0, r = 0, k = 0, m = 0, extra = 0;
  std::string f_path, g_path;

  auto* iq = construct->add_subcommand("indicator-quadratic", "f = 1_E + (a.x)(b.x) + 2 with E = span(e_0..e_{r-1})");
  iq->add_option("--n", n)->required();
  iq->add_option("--r", r)->required();
  iq->add_option("--out", out_path)->required();

  auto* fmb = construct->add_subcommand("field-mult-bent", "F(x, y) = trace coordinates of x*y in GF(3^k)");
  fmb->add_option("--k", k)->required();
  fmb->add_option("--m", m)->required();
  fmb->add_option("--out", out_path)->required();

  auto* dummy = construct->add_subcommand("dummy-extend", "G'(x, z) = G(x)");
  dummy->add_option("--g", g_path)->required();
  dummy->add_option("--extra", extra)->required();
  dummy->add_option("--out", out_path)->required();

  auto* comp = construct->add_subcommand("compose", "F = (f, G)");
  comp->add_option("--f", f_path)->required();
  comp->add_option("--g", g_path)->required();
  comp->add_option("--out", out_path)->required();

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Weights, AB status and minimality of C_F");
  std::string table_path, mode_name = "walsh";
  unsigned threads = 0;
  std::uint64_t seed = 1, samples = 1'000'000;
  bool record_time = false;
  analyze_cmd->add_option("table", table_path, "TFT/1 file")->required();
  analyze_cmd->add_option("--minimality", mode_name)->check(CLI::IsMember({"walsh", "brute", "both", "bound"}));
  analyze_cmd->add_option("--out", out_path, "report path (default stdout)");
  analyze_cmd->add_option("--threads", threads, "0 = available parallelism");
  analyze_cmd->add_option("--seed", seed, "seed for sampled covering");
  analyze_cmd->add_option("--samples", samples, "pairs for sampled covering");
  analyze_cmd->add_flag("--record-time", record_time, "add wall time to the manifest");

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper", "Run the reproduction suites");
  std::vector<std::string> suites;
  VerifyOptions vo;
  verify->add_option("--suite", suites)->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-n", vo.max_n);
  verify->add_option("--threads", vo.threads);
  verify->add_option("--seed", vo.seed);
  verify->add_option("--samples", vo.covering_samples);

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Export every W_F(mu, nu) as CSV");
  spectrum->add_option("table", table_path)->required();
  spectrum->add_option("--out", out_path);
  spectrum->add_option("--threads", threads);

  // theorem6
  auto* t6 = app.add_subcommand("theorem6", "Build and verify the AB-violating minimal code for (n, r, s, m)");
  int s = 0;
  t6->add_option("--n", n)->required();
  t6->add_option("--r", r)->required();
  t6->add_option("--s", s)->required();
  t6->add_option("--m", m)->required();
  t6->add_option("--samples", samples, "sampled covering pairs (0 skips)")->default_val(0);
  t6->add_option("--seed", seed);
  t6->add_option("--threads", threads);
  t6->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) {
      try {
        FunctionTable F(1, 1);
        if (iq->parsed()) {
          F = make_indicator_quadratic(n, r);
        } else if (fmb->parsed()) {
          F = make_field_mult_bent(k, m);
        } else if (dummy->parsed()) {
          F = extend_with_dummy(load_tft(g_path), extra);
        } else {
          F = compose(load_tft(f_path), load_tft(g_path));
        }
        save_tft(out_path, F);
        print_classification(F);
        return kOk;
      } catch (const TftParseError&) {
        throw;
      } catch (const std::invalid_argument& e) {
        std::cerr << "construct: " << e.what() << '\n';
        return kPrecondition;
      }
    }

    if (analyze_cmd->parsed()) {
      const FunctionTable F = load_tft(table_path);
      AnalysisOptions ao;
      ao.mode = mode_name == "brute" ? MinimalityMode::brute
                : mode_name == "both" ? MinimalityMode::both
                : mode_name == "bound" ? MinimalityMode::bound
                                       : MinimalityMode::walsh;
      ao.threads = threads;
      ao.seed = seed;
      ao.covering_samples = samples;
      const auto start = std::chrono::steady_clock::now();
      const CodeAnalysis a = analyze(F, ao);
      RunManifest manifest;
      manifest.command = "analyze";
      manifest.parameters = {{"table", table_path}, {"minimality", mode_name}};
      const bool sampled = (ao.mode == MinimalityMode::brute || ao.mode == MinimalityMode::both) &&
                           F.n() + F.m() > kExhaustiveCoveringMaxDim;
      if (sampled) {
        manifest.rng_seed = seed;
        manifest.parameters["samples"] = samples;
      }
      if (record_time) {
        manifest.wall_time_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      }
      write_text(out_path, render(analysis_report(a, manifest)));
      const Verdict v = a.overall();
      std::cerr << "minimality: " << to_string(v) << '\n';
      return verdict_exit(v);
    }

    if (verify->parsed()) {
      if (suites.empty()) suites = suite_names();
      int failed = 0, total = 0;
      for (const auto& name : suites) {
        std::cout << "== " << name << '\n';
        for (const Check& c : run_suite(name, vo)) {
          ++total;
          failed += !c.passed;
          std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": observed " << c.observed << ", expected " << c.expected
                    << '\n';
        }
      }
      std::cout << (total - failed) << "/" << total << " checks passed\n";
      return failed == 0 ? kOk : kVerifyFailed;
    }

    if (spectrum->parsed()) {
      const FunctionTable F = load_tft(table_path);
      std::ostringstream os;
      write_spectrum_csv(os, walsh_fast(F, threads));
      write_text(out_path, os.str());
      return kOk;
    }

    if (t6->parsed()) {
      Theorem6Options o;
      o.threads = threads;
      o.covering_samples = samples;
      o.seed = seed;
      Theorem6Result res = [&] {
        try {
          return theorem6_build_and_verify(n, r, s, m, o);
        } catch (const ConstructionError& e) {
          std::cerr << e.what() << '\n';
          std::exit(kPrecondition);
        }
      }();
      RunManifest manifest;
      manifest.command = "theorem6";
      manifest.parameters = {{"n", n}, {"r", r}, {"s", s}, {"m", m}, {"samples", samples}};
      if (samples > 0) manifest.rng_seed = seed;
      write_text(out_path, render(theorem6_report(res, manifest)));
      return verdict_exit(res.analysis.overall());
    }
  } catch (const TftParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const OracleDisagreement& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDisagreement;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
  return kOk;
}
