#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nsp/bijections.hpp"
#include "nsp/enumerate.hpp"
#include "nsp/involutions.hpp"
#include "nsp/stats.hpp"
#include "nsp/verify.hpp"

namespace {

using namespace nsp;

Obj canonicalized(Obj y) {
  if (const auto* m = std::get_if<RootedMap>(&y)) return Obj{canonicalForm(*m)};
  return y;
}

struct Fn {
  Cls in;
  std::function<Obj(const Obj&)> apply;
};

// Map outputs are canonicalized so involutions pipe byte-identically.
Fn resolveFn(const std::string& name) {
  auto viaMap = [](auto f) {
    return [f](const Obj& x) { return canonicalized(Obj{f(std::get<RootedMap>(x))}); };
  };
  if (name == "T") return {Cls::Map, [](const Obj& x) { return Obj{mapToDeco(std::get<RootedMap>(x))}; }};
  if (name == "T-inv")
    return {Cls::Deco, [](const Obj& x) { return canonicalized(Obj{decoToMap(std::get<DecoTree>(x))}); }};
  if (name == "I") return {Cls::Deco, [](const Obj& x) { return Obj{decoToInterval(std::get<DecoTree>(x))}; }};
  if (name == "I-inv")
    return {Cls::Interval, [](const Obj& x) { return Obj{intervalToDeco(std::get<SyncInterval>(x))}; }};
  if (name == "varphiT")
    return {Cls::Deco, [](const Obj& x) { return Obj{decoToBetaDirect(std::get<DecoTree>(x))}; }};
  if (name == "dual") return {Cls::Map, viaMap([](const RootedMap& m) { return dualMap(m); })};
  if (name == "NR") return {Cls::Map, viaMap([](const RootedMap& m) { return nextRoot(m); })};
  if (name == "h") return {Cls::Beta, [](const Obj& x) { return Obj{hBeta(std::get<BetaTree>(x))}; }};
  if (name == "hT") return {Cls::Deco, [](const Obj& x) { return Obj{hDeco(std::get<DecoTree>(x))}; }};
  if (name == "mir")
    return {Cls::Interval, [](const Obj& x) { return Obj{mirInterval(std::get<SyncInterval>(x))}; }};
  if (name.rfind("transport:", 0) == 0) {
    std::string rest = name.substr(10);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("transport needs SRC:DST");
    std::string src = rest.substr(0, colon), tail = rest.substr(colon + 1);
    Scheme scheme = Scheme::Parallel;
    if (auto c2 = tail.find(':'); c2 != std::string::npos) {
      std::string mode = tail.substr(c2 + 1);
      tail = tail.substr(0, c2);
      if (mode == "series")
        scheme = Scheme::Series;
      else if (mode != "parallel")
        throw std::invalid_argument("unknown scheme: " + mode);
    }
    Cls from = clsFromName(src), to = clsFromName(tail);
    return {from, [to, scheme](const Obj& x) { return canonicalized(transport(x, to, scheme)); }};
  }
  throw std::invalid_argument("unknown function: " + name);
}

int forEachLine(Cls c, const std::function<void(const Obj&)>& f) {
  std::string line;
  long lineNo = 0;
  while (std::getline(std::cin, line)) {
    ++lineNo;
    if (line.empty()) continue;
    try {
      Obj x = decodeObj(c, line);
      auto errs = validateObj(x);
      if (!errs.empty()) throw std::runtime_error(errs.front());
      f(x);
    } catch (const std::exception& e) {
      std::cerr << "line " << lineNo << ": " << e.what() << "\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equinumerous classes of non-separable planar maps: enumeration, "
               "bijections, dualities, statistics, verification"};
  app.require_subcommand(1);

  std::string clsArg = "beta", fnArg, suiteArg = "all";
  int sizeArg = 1, maxSizeArg = 6, jobsArg = 1;
  unsigned seedArg = 0;
  bool oracleFlag = false, jsonFlag = false;

  auto* cEnum = app.add_subcommand("enumerate", "Write all objects of a class and size, one per line");
  cEnum->add_option("--class", clsArg, "beta|deco|map|interval")->required();
  cEnum->add_option("--size", sizeArg, "object size, >= 1")->required();
  cEnum->add_flag("--oracle", oracleFlag, "use the brute-force oracle instead of the generator");

  auto* cApply = app.add_subcommand("apply", "Map each input line through a bijection or involution");
  cApply
      ->add_option("--fn", fnArg,
                   "T|T-inv|I|I-inv|varphiT|transport:SRC:DST[:series]|dual|NR|h|hT|mir")
      ->required();

  auto* cStats = app.add_subcommand("stats", "Statistics of each input line as JSON");
  cStats->add_option("--class", clsArg, "beta|deco|map|interval")->required();

  auto* cCount = app.add_subcommand("count", "Cardinalities and fixed-point counts per size");
  cCount->add_option("--max-size", maxSizeArg, "largest size, <= 7")->required();
  cCount->add_flag("--json", jsonFlag, "JSON instead of TSV");

  auto* cVerify = app.add_subcommand("verify", "Run a verification suite over exhaustive corpora");
  cVerify->add_option("--suite", suiteArg,
                      "codecs|decomp|diagram|involutions|fixed-points|stats-transfer|oracle|all");
  cVerify->add_option("--max-size", maxSizeArg, "largest size (maps cap at 6, others at 7)");
  cVerify->add_option("--jobs", jobsArg, "worker threads; the report does not depend on it");
  cVerify->add_option("--seed", seedArg, "seed for the random relabeling trials");
  cVerify->add_flag("--json", jsonFlag, "JSON report instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cEnum->parsed()) {
      Cls c = clsFromName(clsArg);
      if (oracleFlag) {
        for (const Obj& x : bruteForce(c, sizeArg)) std::cout << encodeObj(x) << "\n";
      } else {
        for (const Obj& x : generate(c, sizeArg)) std::cout << encodeObj(x) << "\n";
      }
      return 0;
    }
    if (cApply->parsed()) {
      Fn fn = resolveFn(fnArg);
      return forEachLine(fn.in, [&](const Obj& x) { std::cout << encodeObj(fn.apply(x)) << "\n"; });
    }
    if (cStats->parsed()) {
      return forEachLine(clsFromName(clsArg), [](const Obj& x) { std::cout << statsJson(x) << "\n"; });
    }
    if (cCount->parsed()) {
      CountTable t = countReport(maxSizeArg);
      std::cout << (jsonFlag ? countTableJson(t) : countTableTsv(t));
      if (!jsonFlag && !t.failures.empty()) return 1;
      return t.failures.empty() ? 0 : 1;
    }
    // verify
    VerifyReport r = runSuite(suiteArg, maxSizeArg, jobsArg, seedArg);
    std::cout << (jsonFlag ? reportJson(r) + "\n" : reportText(r));
    return r.ok() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
