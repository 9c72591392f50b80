#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nsp/involutions.hpp"

#include "nsp/bijections.hpp"
#include "nsp/enumerate.hpp"

using namespace nsp;

namespace {

const RootedMap C3{3, {5, 3, 4, 1, 2, 0}, 4};
const RootedMap Band3{3, {2, 4, 5, 1, 3, 0}, 0};

}  // namespace

TEST_CASE("worked examples") {
  CHECK(printBeta(hBeta(parseBeta("(2 1 1)"))) == "(1 (1 1))");
  CHECK(printBeta(hBeta(parseBeta("(1 (1 1))"))) == "(2 1 1)");
  CHECK(printDeco(hDeco(parseDeco("(* -1 -1)"))) == "(* (* -1))");
  CHECK(printInterval(mirInterval(parseInterval("[udud,udud]"))) == "[uudd,uudd]");
}

TEST_CASE("involutivity and the root-rpath exchange") {
  for (int n = 1; n <= 5; ++n) {
    for (const Obj& x : generate(Cls::Beta, n)) {
      const auto& b = std::get<BetaTree>(x);
      CHECK(hBeta(hBeta(b)) == b);
      CHECK(rootLabel(b) == rpathLen(hBeta(b).root));
    }
    for (const Obj& x : generate(Cls::Deco, n)) {
      const auto& t = std::get<DecoTree>(x);
      CHECK(hDeco(hDeco(t)) == t);
    }
    for (const Obj& x : generate(Cls::Interval, n)) {
      const auto& iv = std::get<SyncInterval>(x);
      CHECK(mirInterval(mirInterval(iv)) == iv);
      CHECK(validateInterval(mirInterval(iv)).empty());
    }
    for (const Obj& x : generate(Cls::Map, n)) {
      const auto& m = std::get<RootedMap>(x);
      CHECK(canonicalForm(dualMap(dualMap(m))) == m);
    }
  }
}

TEST_CASE("the three conjugacy theorems") {
  for (int n = 1; n <= 5; ++n) {
    for (const Obj& x : generate(Cls::Map, n)) {
      const auto& m = std::get<RootedMap>(x);
      CHECK(mapToDeco(dualMap(m)) == hDeco(mapToDeco(m)));
    }
    for (const Obj& x : generate(Cls::Deco, n)) {
      const auto& t = std::get<DecoTree>(x);
      CHECK(decoToBetaDirect(hDeco(t)) == hBeta(decoToBetaDirect(t)));
      CHECK(mirInterval(decoToInterval(t)) == decoToInterval(hDeco(t)));
    }
  }
}

TEST_CASE("series transport factors through dual and next-root") {
  CHECK(canonicalForm(dualMap(Band3)) == canonicalForm(C3));
  for (int n = 1; n <= 5; ++n)
    for (const Obj& x : generate(Cls::Map, n)) {
      const auto& m = std::get<RootedMap>(x);
      CHECK(transport(x, Cls::Beta, Scheme::Series) ==
            transport(Obj{dualMap(nextRoot(m))}, Cls::Beta, Scheme::Parallel));
    }
}

TEST_CASE("mir reverses the Tamari order and pins the trailing descent") {
  for (int n = 1; n <= 4; ++n)
    for (const DyckWord& a : allDyckWords(n))
      for (const DyckWord& b : allDyckWords(n))
        CHECK(tamariLeq(a, b) == tamariLeq(mirDyck(b), mirDyck(a)));
  for (int n = 1; n <= 6; ++n)
    for (const DyckWord& p : allDyckWords(n)) {
      CHECK(mirDyck(mirDyck(p)) == p);
      const std::string& q = mirDyck(p).steps;
      int run = 0;
      for (auto it = q.rbegin(); it != q.rend() && *it == 'd'; ++it) ++run;
      CHECK(run == dyckContacts(p));
    }
}
