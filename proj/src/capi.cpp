#include "skverify/skverify.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "gradedalgebra.hpp"
#include "skfamilies.hpp"
#include "suite.hpp"

struct skv_config {
  skv::suite::RunConfig cfg;
};

struct skv_report {
  skv::suite::Report report;
};

struct skv_presentation {
  std::unique_ptr<skv::gradedalgebra::Presentation> pres;
};

namespace {

thread_local std::string last_error;

skv_status fail(skv_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

skv_status map_code(skv::ErrorCode c) {
  using skv::ErrorCode;
  switch (c) {
    case ErrorCode::Parse: return SKV_ERR_PARSE;
    case ErrorCode::Config: return SKV_ERR_CONFIG;
    case ErrorCode::Degree: return SKV_ERR_DEGREE;
    case ErrorCode::SamplingExhausted: return SKV_ERR_SAMPLING_EXHAUSTED;
    case ErrorCode::Io: return SKV_ERR_IO;
    case ErrorCode::Parameter:
    case ErrorCode::DivisionByZero:
    case ErrorCode::DegenerateElement:
    case ErrorCode::Precondition:
      return SKV_ERR_PARAMETER;
    default:
      return SKV_ERR_INTERNAL;
  }
}

template <class F>
skv_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return SKV_OK;
  } catch (const skv::Error& e) {
    return fail(map_code(e.code()), std::string(skv::error_code_name(e.code())) + ": " + e.what());
  } catch (const std::bad_alloc&) {
    return fail(SKV_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SKV_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string render(const skv::suite::Report& r, const char* format) {
  const std::string f = format ? format : "json";
  if (f == "json") return r.to_json().dump(2) + "\n";
  if (f == "text") return r.to_text();
  throw skv::Error(skv::ErrorCode::Config, "unknown format '" + f + "'");
}

}  // namespace

extern "C" {

const char* skv_version(void) { return skv::suite::engine_version(); }

const char* skv_last_error(void) { return last_error.c_str(); }

const char* skv_status_name(skv_status status) {
  switch (status) {
    case SKV_OK: return "ok";
    case SKV_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case SKV_ERR_PARSE: return "parse";
    case SKV_ERR_CONFIG: return "config";
    case SKV_ERR_PARAMETER: return "parameter";
    case SKV_ERR_DEGREE: return "degree";
    case SKV_ERR_SAMPLING_EXHAUSTED: return "sampling-exhausted";
    case SKV_ERR_IO: return "io";
    case SKV_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void skv_string_free(char* s) { std::free(s); }

skv_status skv_config_new(const char* suite, skv_config** out) {
  if (!suite || !out) return fail(SKV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto cfg = std::make_unique<skv_config>();
    cfg->cfg.suite = skv::suite::parse_suite(suite);
    *out = cfg.release();
  });
}

void skv_config_free(skv_config* cfg) { delete cfg; }

skv_status skv_config_add_abc(skv_config* cfg, const char* text) {
  if (!cfg || !text) return fail(SKV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { cfg->cfg.abc.push_back(skv::skfamilies::AbcParams::parse(text)); });
}

skv_status skv_config_add_alpha(skv_config* cfg, const char* text) {
  if (!cfg || !text) return fail(SKV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::string s(text);
    const auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos) {
      throw skv::Error(skv::ErrorCode::Parse, "expected a1,a2 but got '" + s + "'");
    }
    cfg->cfg.alpha.emplace_back(skv::exactfield::parse_rational(s.substr(0, comma)),
                                skv::exactfield::parse_rational(s.substr(comma + 1)));
  });
}

skv_status skv_config_set_samples(skv_config* cfg, size_t samples) {
  if (!cfg) return fail(SKV_ERR_INVALID_ARGUMENT, "null argument");
  if (samples < 1) return fail(SKV_ERR_CONFIG, "config: samples must be at least 1");
  cfg->cfg.samples = samples;
  return SKV_OK;
}

skv_status skv_config_set_seed(skv_config* cfg, uint64_t seed) {
  if (!cfg) return fail(SKV_ERR_INVALID_ARGUMENT, "null argument");
  cfg->cfg.seed = seed;
  return SKV_OK;
}

skv_status skv_config_set_max_degree(skv_config* cfg, size_t degree) {
  if (!cfg) return fail(SKV_ERR_INVALID_ARGUMENT, "null argument");
  if (degree < 1 || degree > 6) return fail(SKV_ERR_CONFIG, "config: max degree must lie in [1, 6]");
  cfg->cfg.max_degree = degree;
  return SKV_OK;
}

skv_status skv_config_set_cache_dir(skv_config* cfg, const char* dir) {
  if (!cfg || !dir) return fail(SKV_ERR_INVALID_ARGUMENT, "null argument");
  cfg->cfg.cache_dir = dir;
  return SKV_OK;
}

skv_status skv_config_set_jobs(skv_config* cfg, size_t jobs) {
  if (!cfg) return fail(SKV_ERR_INVALID_ARGUMENT, "null argument");
  cfg->cfg.jobs = jobs;
  return SKV_OK;
}

skv_status skv_run(const skv_config* cfg, skv_report** out) {
  if (!cfg || !out) return fail(SKV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto r = std::make_unique<skv_report>();
    r->report = skv::suite::run_suite(cfg->cfg);
    *out = r.release();
  });
}

void skv_report_free(skv_report* report) { delete report; }

skv_status skv_report_counts(const skv_report* report, size_t* pass, size_t* fail_count,
                             size_t* skipped) {
  if (!report) return fail(SKV_ERR_INVALID_ARGUMENT, "null argument");
  using skv::suite::Status;
  if (pass) *pass = report->report.count(Status::Pass);
  if (fail_count) *fail_count = report->report.count(Status::Fail);
  if (skipped) *skipped = report->report.count(Status::SkippedDegenerate);
  return SKV_OK;
}

int skv_report_passed(const skv_report* report) {
  return report && report->report.passed() ? 1 : 0;
}

skv_status skv_report_render(const skv_report* report, const char* format, char** out) {
  if (!report || !out) return fail(SKV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = dup_string(render(report->report, format)); });
}

skv_status skv_report_write(const skv_report* report, const char* format, const char* path) {
  if (!report || !path) return fail(SKV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::string text = render(report->report, format);
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw skv::Error(skv::ErrorCode::Io, std::string("cannot open ") + path);
    os << text;
    os.flush();
    if (!os) throw skv::Error(skv::ErrorCode::Io, std::string("write failed: ") + path);
  });
}

skv_status skv_presentation_new(skv_family family, const char* params, skv_presentation** out) {
  if (!params || !out) return fail(SKV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    namespace sf = skv::skfamilies;
    auto h = std::make_unique<skv_presentation>();
    switch (family) {
      case SKV_FAMILY_S3:
        h->pres = std::make_unique<skv::gradedalgebra::Presentation>(
            sf::build_s3(sf::AbcParams::parse(params)));
        break;
      case SKV_FAMILY_S2:
        h->pres = std::make_unique<skv::gradedalgebra::Presentation>(
            sf::build_s2(sf::AbcParams::parse(params)));
        break;
      case SKV_FAMILY_S4: {
        const std::string s(params);
        const auto comma = s.find(',');
        if (comma == std::string::npos) {
          throw skv::Error(skv::ErrorCode::Parse, "expected a1,a2 but got '" + s + "'");
        }
        const auto t = sf::AlphaTriple::from_pair(
            skv::exactfield::parse_rational(s.substr(0, comma)),
            skv::exactfield::parse_rational(s.substr(comma + 1)));
        h->pres = std::make_unique<skv::gradedalgebra::Presentation>(
            sf::build_s4(sf::SextupleParams::from_alpha(t)));
        break;
      }
      default:
        throw skv::Error(skv::ErrorCode::Config, "unknown family");
    }
    *out = h.release();
  });
}

void skv_presentation_free(skv_presentation* p) { delete p; }

skv_status skv_presentation_hilbert(const skv_presentation* p, size_t N, size_t* dims) {
  if (!p || !dims) return fail(SKV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto rec = skv::gradedalgebra::hilbert_dims(*p->pres, N);
    for (std::size_t k = 0; k <= N; ++k) dims[k] = rec.dims[k];
  });
}

skv_status skv_presentation_centralizer_dim(const skv_presentation* p, size_t degree,
                                            size_t* out) {
  if (!p || !out) return fail(SKV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = skv::gradedalgebra::centralizer_slice(*p->pres, degree).dim(); });
}

skv_status skv_presentation_in_ideal(const skv_presentation* p, const char* poly, int* out) {
  if (!p || !poly || !out) return fail(SKV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto f = skv::freealg::NcPoly::parse(poly, p->pres->names());
    *out = skv::gradedalgebra::in_ideal(*p->pres, f) ? 1 : 0;
  });
}

skv_status skv_presentation_is_central(const skv_presentation* p, const char* poly, int* out) {
  if (!p || !poly || !out) return fail(SKV_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto f = skv::freealg::NcPoly::parse(poly, p->pres->names());
    *out = skv::gradedalgebra::is_central(*p->pres, f) ? 1 : 0;
  });
}

}  // extern "C"
