#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nsp/bijections.hpp"

#include "nsp/enumerate.hpp"

using namespace nsp;

namespace {

const RootedMap M2bond{2, {2, 3, 0, 1}, 0};
const RootedMap C3{3, {5, 3, 4, 1, 2, 0}, 4};
const RootedMap Band3{3, {2, 4, 5, 1, 3, 0}, 0};

bool sameMap(const RootedMap& a, const RootedMap& b) {
  return canonicalForm(a) == canonicalForm(b);
}

}  // namespace

TEST_CASE("exploration bijection on the worked maps") {
  CHECK(printDeco(mapToDeco(M2bond)) == "(* -1)");
  CHECK(printDeco(mapToDeco(Band3)) == "(* -1 -1)");
  CHECK(printDeco(mapToDeco(C3)) == "(* (* -1))");
}

TEST_CASE("relabeling and interval bijections on the worked trees") {
  DecoTree band = parseDeco("(* -1 -1)");
  DecoTree path = parseDeco("(* (* -1))");
  CHECK(printBeta(decoToBetaDirect(band)) == "(2 1 1)");
  CHECK(printBeta(decoToBetaDirect(path)) == "(1 (1 1))");
  CHECK(printInterval(decoToInterval(band)) == "[udud,udud]");
  CHECK(printInterval(decoToInterval(path)) == "[uudd,uudd]");
}

TEST_CASE("direct bijections equal canonical transport") {
  for (int n = 1; n <= 5; ++n) {
    for (const Obj& x : generate(Cls::Map, n)) {
      const auto& m = std::get<RootedMap>(x);
      CHECK(Obj{mapToDeco(m)} == transport(x, Cls::Deco));
      CHECK(transport(x, Cls::Beta) == transport(Obj{mapToDeco(m)}, Cls::Beta));
    }
    for (const Obj& x : generate(Cls::Deco, n)) {
      const auto& t = std::get<DecoTree>(x);
      CHECK(Obj{decoToBetaDirect(t)} == transport(x, Cls::Beta));
      CHECK(Obj{decoToInterval(t)} == transport(x, Cls::Interval));
      CHECK(transport(x, Cls::Beta) == transport(Obj{decoToInterval(t)}, Cls::Beta));
    }
  }
}

TEST_CASE("round trips through the transported inverses") {
  for (int n = 1; n <= 5; ++n) {
    for (const Obj& x : generate(Cls::Map, n))
      CHECK(sameMap(decoToMap(mapToDeco(std::get<RootedMap>(x))), std::get<RootedMap>(x)));
    for (const Obj& x : generate(Cls::Deco, n)) {
      const auto& t = std::get<DecoTree>(x);
      CHECK(intervalToDeco(decoToInterval(t)) == t);
      CHECK(mapToDeco(decoToMap(t)) == t);
    }
  }
}

TEST_CASE("degree transfers to free leaves") {
  for (int n = 1; n <= 5; ++n)
    for (const Obj& x : generate(Cls::Map, n)) {
      const auto& m = std::get<RootedMap>(x);
      CHECK(degStat(m) == flCount(mapToDeco(m)));
      CHECK(flCount(mapToDeco(m)) == contStat(decoToInterval(mapToDeco(m))));
    }
}
