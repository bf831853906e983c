#pragma once

// Batch verification: parameter sampling, the check suites and the report.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "skfamilies.hpp"

namespace skv::suite {

using skfamilies::AbcParams;
using skfamilies::AlphaTriple;
using skfamilies::LambdaTriple;

enum class SuiteKind { S3, S2, S4, Quotient, Reps, All };

/// Throws Error(Config) on unknown names.
SuiteKind parse_suite(const std::string& name);
const char* suite_name(SuiteKind s);

struct RunConfig {
  SuiteKind suite = SuiteKind::All;
  std::vector<AbcParams> abc;
  /// (a1, a2) pairs; a3 is completed onto the Sklyanin locus.
  std::vector<std::pair<exactfield::Rational, exactfield::Rational>> alpha;
  std::size_t samples = 3;
  std::uint64_t seed = 1;
  /// Hilbert cutoff; the 4-generator family is capped at 5.
  std::size_t max_degree = 6;
  std::string cache_dir;
  /// 0 picks the hardware concurrency.
  std::size_t jobs = 0;

  /// Throws Error(Config) when a field is out of range.
  void validate() const;
};

enum class SampleKind { S3, S2, S4, Quotient, Lambda };

const char* sample_kind_name(SampleKind k);

struct SampleLog {
  std::size_t draws = 0;
  std::vector<std::string> rejections;
};

/// Draws from the seeded stream of `kind`. Rationals have numerator in
/// [-9, 9] \ {0} and denominator in [1, 9]. Throws Error(SamplingExhausted)
/// when more than 99% of at least 1000 draws are rejected.
std::vector<AbcParams> sample_abc(SampleKind kind, std::size_t count, std::uint64_t seed,
                                  SampleLog* log = nullptr);
std::vector<AlphaTriple> sample_alpha(std::size_t count, std::uint64_t seed,
                                      SampleLog* log = nullptr);
std::vector<LambdaTriple> sample_lambda(std::size_t count, std::uint64_t seed,
                                        SampleLog* log = nullptr);

/// The reason a parameter set is outside the sampling filter of `kind`, or
/// nullopt when it passes.
std::optional<std::string> abc_rejection(SampleKind kind, const AbcParams& p);
std::optional<std::string> alpha_rejection(const AlphaTriple& t);
std::optional<std::string> lambda_rejection(const LambdaTriple& t);

enum class Status { Pass, Fail, SkippedDegenerate };

const char* status_name(Status s);

struct CheckRecord {
  std::string id;
  nlohmann::json params;
  Status status = Status::Pass;
  nlohmann::json data;
  std::vector<std::string> notes;
  double seconds = 0;

  /// Canonical sort key.
  std::string key() const;
};

struct Report {
  nlohmann::json config;
  nlohmann::json sampling;
  std::vector<CheckRecord> checks;
  double seconds = 0;

  std::size_t count(Status s) const;
  bool passed() const { return count(Status::Fail) == 0; }

  /// Timing lives in its own top-level section.
  nlohmann::json to_json() const;
  std::string to_text() const;
};

const char* engine_version();

/// Runs the selected suites; checks come out sorted by key.
Report run_suite(const RunConfig& config);

}  // namespace skv::suite
