// Runs `skverify verify all --samples 3 --seed 7` twice and grades the
// report against the ten acceptance criteria. Expected values below are
// literals, not read back from the engine.
//
// usage: acceptance <path-to-skverify> [work-dir]

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "json.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::size_t kMinSets = 3;

struct Verdict {
  bool ok = true;
  std::vector<std::string> why;
  void require(bool cond, const std::string& msg) {
    if (!cond) {
      ok = false;
      why.push_back(msg);
    }
  }
};

std::vector<json> records(const json& report, const std::string& id) {
  std::vector<json> out;
  for (const auto& c : report["checks"]) {
    if (c["id"] == id) out.push_back(c);
  }
  return out;
}

// Every record of `id` must pass and at least kMinSets must be non-skipped.
// `extra` inspects each passing record's data.
void sampled(Verdict& v, const json& report, const std::string& id,
             const std::function<void(Verdict&, const json&)>& extra = nullptr) {
  std::size_t live = 0;
  for (const auto& c : records(report, id)) {
    const std::string status = c["status"];
    if (status == "skipped-degenerate") continue;
    ++live;
    v.require(status == "pass", id + " " + c["params"].dump() + " is " + status);
    if (extra && status == "pass") extra(v, c["data"]);
  }
  v.require(live >= kMinSets, id + ": only " + std::to_string(live) + " live parameter sets");
}

void single(Verdict& v, const json& report, const std::string& id,
            const std::function<void(Verdict&, const json&)>& extra = nullptr) {
  const auto recs = records(report, id);
  v.require(recs.size() == 1, id + ": expected one record");
  for (const auto& c : recs) {
    v.require(c["status"] == "pass", id + " is " + c["status"].get<std::string>());
    if (extra) extra(v, c["data"]);
  }
}

std::function<void(Verdict&, const json&)> dims_equal(const std::string& key,
                                                      const std::vector<std::size_t>& want) {
  return [key, want](Verdict& v, const json& d) {
    v.require(d.contains(key) && d[key].get<std::vector<std::size_t>>() == want,
              key + " = " + (d.contains(key) ? d[key].dump() : "missing"));
  };
}

bool run_cli(const std::string& cli, const fs::path& out) {
  const std::string cmd = "\"" + cli + "\" verify all --samples 3 --seed 7 --format json --out \"" +
                          out.string() + "\" 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  return rc != -1 && WIFEXITED(rc) && (WEXITSTATUS(rc) == 0 || WEXITSTATUS(rc) == 1);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-skverify> [work-dir]\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path dir = argc > 2 ? fs::path(argv[2]) : fs::temp_directory_path() / "skverify-acceptance";
  fs::create_directories(dir);
  const fs::path first = dir / "run1.json", second = dir / "run2.json";

  if (!run_cli(cli, first) || !run_cli(cli, second)) {
    std::cout << "FAIL all: could not run " << cli << "\n";
    return 1;
  }
  const std::string text1 = slurp(first), text2 = slurp(second);
  json report, report2;
  try {
    report = json::parse(text1);
    report2 = json::parse(text2);
  } catch (const std::exception& e) {
    std::cout << "FAIL all: unparsable report: " << e.what() << "\n";
    return 1;
  }

  std::vector<std::pair<std::string, Verdict>> results;

  {
    Verdict v;
    sampled(v, report, "s3.hilbert", dims_equal("observed", {1, 3, 6, 10, 15, 21, 28}));
    sampled(v, report, "s2.hilbert", dims_equal("observed", {1, 2, 4, 6, 9, 12, 16}));
    sampled(v, report, "s4.hilbert", dims_equal("observed", {1, 4, 10, 20, 35, 56}));
    results.emplace_back("1 Hilbert functions", v);
  }
  {
    Verdict v;
    sampled(v, report, "s3.relation_geometry", [](Verdict& w, const json& d) {
      w.require(d["sum_dim"] == 17, "sum_dim = " + d["sum_dim"].dump());
      w.require(d["intersection_dim"] == 1, "intersection_dim = " + d["intersection_dim"].dump());
      w.require(d["intersection_is_abc_f"] == true, "intersection is not a f1 + b f2 + c f3");
    });
    results.emplace_back("2 degree-3 relation geometry", v);
  }
  {
    Verdict v;
    const std::size_t counts[] = {5, 11, 22}, squares[] = {8, 27, 64};
    for (int n = 2; n <= 4; ++n) {
      single(v, report, "reps.irreps.H" + std::to_string(n), [&](Verdict& w, const json& d) {
        w.require(d["count"] == counts[n - 2], "H" + std::to_string(n) + " count " + d["count"].dump());
        w.require(d["square_sum"] == squares[n - 2], "H" + std::to_string(n) + " square sum");
        w.require(d["orthonormal"] == true, "H" + std::to_string(n) + " characters");
      });
    }
    auto decomp = [](const std::string& want) {
      return [want](Verdict& w, const json& d) {
        w.require(d["decomposition"] == want, "decomposition " + d["decomposition"].dump());
      };
    };
    single(v, report, "reps.tensor_square.H3:V1", decomp("3*H3:V2"));
    single(v, report, "reps.tensor_square.H4:V1",
           decomp("2*H4:V_{0,0} + 2*H4:V_{0,1} + 2*H4:V_{1,0} + 2*H4:V_{1,1}"));
    single(v, report, "reps.antisymmetric_square.H4:V1",
           decomp("H4:V_{0,1} + H4:V_{1,0} + H4:V_{1,1}"));
    single(v, report, "reps.twist_equivalence",
           [](Verdict& w, const json& d) { w.require(d["mismatches"] == 0, "twist table mismatches"); });
    single(v, report, "reps.invariants.H3:V1^3", [](Verdict& w, const json& d) {
      w.require(d["dim"] == 3 && d["equals_span_f"] == true, "cubic invariants " + d.dump());
    });
    sampled(v, report, "s3.relation_geometry", [](Verdict& w, const json& d) {
      w.require(d["sum_invariant_dim"] == 1, "invariants of R V + V R: " + d["sum_invariant_dim"].dump());
    });
    results.emplace_back("3 representation suite", v);
  }
  {
    Verdict v;
    sampled(v, report, "s3.c3", [](Verdict& w, const json& d) {
      w.require(d["centralizer_dim"] == 1, "centralizer_dim = " + d["centralizer_dim"].dump());
      w.require(d["in_span_f"] == true, "c3 outside span f");
      w.require(d["triple_matches"] == true, "coefficient triple");
      w.require(d["sigma_identity"] == true, "normality automorphism");
    });
    results.emplace_back("4 c3", v);
  }
  {
    Verdict v;
    sampled(v, report, "s2.c4", [](Verdict& w, const json& d) {
      w.require(d["h2_invariant"] == true && d["central"] == true && d["in_centralizer"] == true,
                "c4 " + d.dump());
      w.require(d.contains("centralizer_dim"), "centralizer dimension not recorded");
    });
    results.emplace_back("5 c4", v);
  }
  {
    Verdict v;
    sampled(v, report, "s4.centralizer", [](Verdict& w, const json& d) {
      w.require(d["centralizer_dim"] == 2, "centralizer_dim = " + d["centralizer_dim"].dump());
    });
    sampled(v, report, "s4.centralizer", dims_equal("quotient_observed", {1, 4, 8, 12, 16, 20}));
    sampled(v, report, "quotient.omega", [](Verdict& w, const json& d) {
      w.require(d["independent"] == true && d["omega1_central"] == true && d["omega2_central"] == true,
                "omega " + d.dump());
    });
    results.emplace_back("6 Omega1 and Omega2", v);
  }
  {
    Verdict v;
    sampled(v, report, "quotient.map", [](Verdict& w, const json& d) {
      for (const auto& [name, ok] : d["relation_images"].items()) w.require(ok == true, "relation image " + name);
      w.require(d["relation_images"].size() == 6, "six relation images");
      w.require(d["n_image_in_ideal"] == true, "n_abc image");
      w.require(d["alpha_matches"] == true, "alpha");
      w.require(d["fivefold"] == true, "fivefold");
      for (const auto& [name, ok] : d["equivariance"].items()) w.require(ok == true, "equivariance " + name);
    });
    sampled(v, report, "quotient.c4_image", [](Verdict& w, const json& d) {
      w.require(d["matches_printed_c4"] == true, "image of e1 Omega1 vs printed c4");
      w.require(d["mu"] != "" && d["mu"] != "0", "mu = " + d["mu"].dump());
    });
    results.emplace_back("7 quotient map", v);
  }
  {
    Verdict v;
    sampled(v, report, "s3.point_scheme", [](Verdict& w, const json& d) {
      w.require(d["next_is_tau"] == true, "next point of O");
      w.require(d["two_steps_match_group_law"] == true, "two-step iteration");
    });
    sampled(v, report, "s2.point_determinant", [](Verdict& w, const json& d) {
      w.require(d["proportional_to_printed_curve"] == true, "determinant vs printed form");
    });
    sampled(v, report, "s4.minors", [](Verdict& w, const json& d) {
      w.require(d["minors_in_ideal"] == 15, "minors in ideal: " + d["minors_in_ideal"].dump());
      w.require(d["perturbed_minors_in_ideal"] < 15, "perturbed lambda still passes");
    });
    results.emplace_back("8 point schemes", v);
  }
  {
    Verdict v;
    sampled(v, report, "s3.group_law", [](Verdict& w, const json& d) {
      w.require(d["multiples"] >= 10, "fewer than 10 multiples");
      w.require(d["tau_on_curve"] == true, "tau off the curve");
      for (const char* k : {"identity", "inverse", "multiple_consistency"}) {
        w.require(d[k] == d["multiples"], std::string(k) + " holds for " + d[k].dump());
      }
      for (const char* k : {"commutative", "associative"}) {
        const std::string frac = d[k];
        const auto slash = frac.find('/');
        w.require(slash != std::string::npos && frac.substr(0, slash) == frac.substr(slash + 1) &&
                      frac.substr(0, slash) != "0",
                  std::string(k) + " " + frac);
      }
    });
    results.emplace_back("9 group-law properties", v);
  }
  {
    Verdict v;
    json a = report, b = report2;
    a.erase("timing");
    b.erase("timing");
    v.require(a.dump() == b.dump(), "reports differ outside timing");
    // Byte-level: the text before the timing key must match.
    const auto cut1 = text1.rfind("\"timing\""), cut2 = text2.rfind("\"timing\"");
    v.require(cut1 != std::string::npos && text1.substr(0, cut1) == text2.substr(0, cut2),
              "byte prefix before timing differs");
    results.emplace_back("10 determinism", v);
  }

  bool all = true;
  for (const auto& [name, v] : results) {
    std::cout << (v.ok ? "PASS " : "FAIL ") << name << "\n";
    for (const auto& w : v.why) std::cout << "    " << w << "\n";
    all = all && v.ok;
  }
  std::cout << "total_seconds " << report["timing"]["total_seconds"] << "\n";
  return all ? 0 : 1;
}
