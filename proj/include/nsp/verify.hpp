#pragma once

#include <string>
#include <vector>

#include "nsp/decomp.hpp"

namespace nsp {

struct LawResult {
  std::string name;
  bool pass = true;
  std::string counterexample;  // first witness, empty when passing
  std::string note;            // documented deviations and remarks
};

struct VerifyReport {
  std::string suite;
  int maxSize = 0;
  double seconds = 0;
  std::vector<LawResult> laws;

  bool ok() const;
};

// Known suite names, "all" last.
const std::vector<std::string>& suiteNames();

// Runs every law of the suite over the exhaustive corpora up to maxSize
// (clamped per law: maps cap at 6, everything else at 7). Laws may fan out
// over `jobs` workers; the report is deterministic regardless. `seed` drives
// the random relabeling trials only.
VerifyReport runSuite(const std::string& suite, int maxSize, int jobs = 1,
                      unsigned seed = 0);

std::string reportText(const VerifyReport& r);
std::string reportJson(const VerifyReport& r);

}  // namespace nsp
