// Acceptance checks, one pass/fail line each. Takes the path of the CLI
// binary as its only argument (used by the end-to-end check).
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nsp/enumerate.hpp"
#include "nsp/verify.hpp"

using namespace nsp;

namespace {

int failures = 0;

void report(int k, bool pass, const std::string& what, const std::string& detail = "") {
  std::printf("criterion %2d: %s - %s%s%s\n", k, pass ? "pass" : "FAIL", what.c_str(),
              detail.empty() ? "" : ": ", detail.c_str());
  if (!pass) ++failures;
}

long long closedForm(int n) {
  // 2 (3n)! / ((2n+1)! (n+1)!)
  __int128 num = 2, den = 1;
  for (int k = 2; k <= 3 * n; ++k) num *= k;
  for (int k = 2; k <= 2 * n + 1; ++k) den *= k;
  for (int k = 2; k <= n + 1; ++k) den *= k;
  return static_cast<long long>(num / den);
}

// Laws of the full report indexed by "suite/name".
std::map<std::string, const LawResult*> lawIndex(const VerifyReport& r) {
  std::map<std::string, const LawResult*> idx;
  for (const auto& l : r.laws) idx[l.name] = &l;
  return idx;
}

bool lawsPass(const std::map<std::string, const LawResult*>& idx,
              const std::vector<std::string>& names, std::string& detail) {
  for (const auto& n : names) {
    auto it = idx.find(n);
    if (it == idx.end()) {
      detail = "missing law " + n;
      return false;
    }
    if (!it->second->pass) {
      detail = n + " failed at " + it->second->counterexample;
      return false;
    }
  }
  return true;
}

std::string shellQuote(const std::string& s) { return "'" + s + "'"; }

bool runCmd(const std::string& cmd) { return std::system(cmd.c_str()) == 0; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::string detail;

  // 1: all four classes are equinumerous with the expected sequence, against
  // the brute-force oracles and the closed form.
  {
    const long long want[] = {1, 2, 6, 22, 91, 408, 1938};
    bool ok = true;
    detail.clear();
    for (int n = 1; n <= 7 && ok; ++n) {
      if (closedForm(n) != want[n - 1]) {
        ok = false;
        detail = "closed form disagrees at n=" + std::to_string(n);
        break;
      }
      for (Cls c : {Cls::Beta, Cls::Deco, Cls::Map, Cls::Interval}) {
        if (static_cast<long long>(generate(c, n).size()) != want[n - 1]) {
          ok = false;
          detail = clsName(c) + " generator count at n=" + std::to_string(n);
          break;
        }
        if (n <= bruteForceCeiling(c) &&
            static_cast<long long>(bruteForce(c, n).size()) != want[n - 1]) {
          ok = false;
          detail = clsName(c) + " oracle count at n=" + std::to_string(n);
          break;
        }
      }
    }
    report(1, ok, "equinumerosity 1, 2, 6, 22, 91, 408, 1938 across all classes", detail);
  }

  VerifyReport all = runSuite("all", 7, 4);
  auto idx = lawIndex(all);

  detail.clear();
  report(2, lawsPass(idx, {"decomp/compose-of-decompose", "decomp/decompose-of-compose"}, detail),
         "decomposition round-trips in both directions, both map schemes", detail);

  detail.clear();
  report(3,
         lawsPass(idx,
                  {"diagram/exploration-canonical", "diagram/interval-canonical",
                   "diagram/relabeling-canonical"},
                  detail),
         "direct bijections equal canonical transport everywhere", detail);

  detail.clear();
  report(4,
         lawsPass(idx,
                  {"involutions/dual-conjugate-hT", "involutions/hT-conjugate-h",
                   "involutions/mir-conjugate-hT", "involutions/series-to-parallel"},
                  detail),
         "duality conjugacy chain and the series-to-parallel theorem", detail);

  detail.clear();
  report(5,
         lawsPass(idx,
                  {"involutions/dual-involution", "involutions/h-involution",
                   "involutions/hT-involution", "involutions/mir-involution"},
                  detail),
         "dual, h, hT, mir are involutions and root = rpath after h", detail);

  detail.clear();
  report(6, lawsPass(idx, {"fixed-points/fixed-point-counts"}, detail),
         "fixed points of h = self-dual maps = fixed points of mir", detail);

  {
    detail.clear();
    bool ok = lawsPass(idx,
                       {"stats-transfer/relabeling-stat-transfer",
                        "stats-transfer/exploration-stat-transfer",
                        "stats-transfer/vertex-column-corrected", "stats-transfer/dsub-pcomp-transfer",
                        "stats-transfer/dual-stat-exchange", "stats-transfer/h-stat-exchange"},
                       detail);
    if (ok) {
      const LawResult* v = idx.at("stats-transfer/vertex-column-corrected");
      if (v->note.find("2 + dblu") == std::string::npos ||
          v->note.find("[uudd,uudd]") == std::string::npos) {
        ok = false;
        detail = "vertex correction is not flagged with its witness";
      }
    }
    report(7, ok, "all statistic transfer laws, vertex column in corrected form", detail);
  }

  detail.clear();
  report(8,
         lawsPass(idx,
                  {"involutions/mir-order-reversing", "involutions/mir-involution",
                   "involutions/mir-trailing-descent"},
                  detail),
         "mir reverses the Tamari order and keeps intervals synchronized", detail);

  detail.clear();
  report(9, lawsPass(idx, {"oracle/generator-matches-oracle", "oracle/generator-valid-unique"}, detail),
         "generator matches the independent oracle, no canonical collisions", detail);

  // 10: the CLI end to end.
  {
    bool ok = true;
    detail.clear();
    if (argc < 2) {
      ok = false;
      detail = "CLI path not provided";
    } else {
      std::string cli = shellQuote(argv[1]);
      std::string dir = "acceptance_tmp";
      runCmd("rm -rf " + dir + " && mkdir -p " + dir);
      if (!runCmd(cli + " verify --suite all --max-size 6 --jobs 4 > " + dir + "/verify.txt")) {
        ok = false;
        detail = "verify --suite all --max-size 6 exited nonzero";
      }
      const std::pair<std::string, std::string> pipes[] = {
          {"beta", "h"}, {"deco", "hT"}, {"map", "dual"}, {"interval", "mir"}};
      for (const auto& [cls, fn] : pipes) {
        if (!ok) break;
        std::string a = dir + "/" + cls + ".txt", b = dir + "/" + cls + ".rt.txt";
        if (!runCmd(cli + " enumerate --class " + cls + " --size 5 > " + a) ||
            !runCmd(cli + " apply --fn " + fn + " < " + a + " | " + cli + " apply --fn " + fn +
                    " > " + b)) {
          ok = false;
          detail = cls + " pipeline exited nonzero";
          break;
        }
        std::string orig = slurp(a), round = slurp(b);
        if (orig.empty() || orig != round) {
          ok = false;
          detail = cls + " corpus not byte-identical after " + fn + " twice";
        }
      }
      if (ok) runCmd("rm -rf " + dir);
    }
    report(10, ok, "CLI verify exits 0 and involutions pipe byte-identically", detail);
  }

  if (failures == 0) std::printf("all 10 criteria pass\n");
  return failures == 0 ? 0 : 1;
}
