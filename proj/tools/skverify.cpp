// Command-line front end. Talks to the engine only through the C API.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skverify/skverify.h"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kIo = 3, kInternal = 4 };

int exit_for(skv_status s) {
  switch (s) {
    case SKV_OK: return kPass;
    case SKV_ERR_IO: return kIo;
    case SKV_ERR_INVALID_ARGUMENT:
    case SKV_ERR_PARSE:
    case SKV_ERR_CONFIG:
    case SKV_ERR_PARAMETER:
    case SKV_ERR_DEGREE:
      return kUsage;
    default:
      return kInternal;
  }
}

int report_error(skv_status s) {
  std::cerr << "skverify: " << skv_last_error() << "\n";
  return exit_for(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of centers of Sklyanin algebras"};
  app.set_version_flag("--version", std::string(skv_version()));
  app.require_subcommand(1);

  std::string suite;
  std::vector<std::string> abc, alpha;
  std::size_t samples = 3, max_degree = 6, jobs = 0;
  std::uint64_t seed = 1;
  std::string format = "json", out, cache_dir;

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "s3 | s2 | s4 | quotient | reps | all")
      ->required()
      ->check(CLI::IsMember({"s3", "s2", "s4", "quotient", "reps", "all"}));
  verify->add_option("--abc", abc, "Projective parameters a,b,c (repeatable)")
      ->allow_extra_args(false);
  verify->add_option("--alpha", alpha, "Pair a1,a2 for the 4-generator family (repeatable)")
      ->allow_extra_args(false);
  verify->add_option("--samples", samples, "Sampled parameter sets per family")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "64-bit PRNG seed");
  verify->add_option("--max-degree", max_degree, "Hilbert cutoff (4 generators capped at 5)")
      ->check(CLI::Range(1, 6));
  verify->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out, "Report path (default stdout)");
  verify->add_option("--cache-dir", cache_dir, "Directory for cached ideal slices");
  verify->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  skv_config* cfg = nullptr;
  skv_status s = skv_config_new(suite.c_str(), &cfg);
  if (s != SKV_OK) return report_error(s);
  auto cleanup_cfg = [&] { skv_config_free(cfg); };

  for (const auto& t : abc) {
    if ((s = skv_config_add_abc(cfg, t.c_str())) != SKV_OK) {
      cleanup_cfg();
      return report_error(s);
    }
  }
  for (const auto& t : alpha) {
    if ((s = skv_config_add_alpha(cfg, t.c_str())) != SKV_OK) {
      cleanup_cfg();
      return report_error(s);
    }
  }
  if ((s = skv_config_set_samples(cfg, samples)) != SKV_OK ||
      (s = skv_config_set_seed(cfg, seed)) != SKV_OK ||
      (s = skv_config_set_max_degree(cfg, max_degree)) != SKV_OK ||
      (s = skv_config_set_cache_dir(cfg, cache_dir.c_str())) != SKV_OK ||
      (s = skv_config_set_jobs(cfg, jobs)) != SKV_OK) {
    cleanup_cfg();
    return report_error(s);
  }

  skv_report* report = nullptr;
  s = skv_run(cfg, &report);
  cleanup_cfg();
  if (s != SKV_OK) return report_error(s);

  if (out.empty()) {
    char* text = nullptr;
    s = skv_report_render(report, format.c_str(), &text);
    if (s == SKV_OK) {
      std::fputs(text, stdout);
      skv_string_free(text);
    }
  } else {
    s = skv_report_write(report, format.c_str(), out.c_str());
  }
  if (s != SKV_OK) {
    skv_report_free(report);
    return report_error(s);
  }

  std::size_t pass = 0, fail = 0, skipped = 0;
  skv_report_counts(report, &pass, &fail, &skipped);
  std::cerr << "skverify: " << pass << " pass, " << fail << " fail, " << skipped
            << " skipped-degenerate\n";
  const int code = skv_report_passed(report) ? kPass : kFail;
  skv_report_free(report);
  return code;
}
