#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nsp/decomp.hpp"

#include <map>
#include <tuple>

using namespace nsp;

namespace {

const RootedMap M2bond{2, {2, 3, 0, 1}, 0};
const RootedMap C3{3, {5, 3, 4, 1, 2, 0}, 4};
const RootedMap Band3{3, {2, 4, 5, 1, 3, 0}, 0};

std::string keyOf(const Obj& x) {
  if (const auto* m = std::get_if<RootedMap>(&x)) return encodeMap(canonicalForm(*m));
  return encodeObj(x);
}

std::string stepKey(const DecompStep& s) {
  std::string k = std::to_string(static_cast<int>(s.kind)) + ":" + std::to_string(s.i);
  for (const auto& p : s.parts) k += "|" + keyOf(p);
  return k;
}

// All objects of the class with the given size, built bottom-up through
// compose. Duplicate results would mean two distinct steps yield the same
// object, which the decomposition forbids.
const std::vector<Obj>& genAll(Cls c, int n, Scheme sch) {
  static std::map<std::tuple<int, int, int>, std::vector<Obj>> memo;
  auto key = std::make_tuple(static_cast<int>(c), n, static_cast<int>(sch));
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<Obj> out;
  if (n == 1) {
    out.push_back(baseObject(c));
  } else {
    std::map<std::string, Obj> seen;
    auto add = [&](Obj o) {
      auto k = keyOf(o);
      CHECK(seen.find(k) == seen.end());
      seen.emplace(std::move(k), std::move(o));
    };
    for (const auto& x : genAll(c, n - 1, sch)) {
      for (int i = 1; i <= sizeStat(x, sch); ++i)
        add(compose(DecompStep{DecompStep::Wrap, i, {x}}, c, sch));
      add(compose(DecompStep{DecompStep::Graft, 0, {x}}, c, sch));
    }
    for (int n1 = 1; n1 <= n - 2; ++n1)
      for (const auto& h : genAll(c, n1, sch))
        for (const auto& t : genAll(c, n - 1 - n1, sch))
          for (int i = 1; i <= sizeStat(h, sch); ++i)
            add(compose(DecompStep{DecompStep::Join, i, {h, t}}, c, sch));
    for (auto& [k, o] : seen) out.push_back(std::move(o));
  }
  return memo.emplace(key, std::move(out)).first->second;
}

void checkClass(Cls c, Scheme sch, int maxN) {
  const int counts[] = {0, 1, 2, 6, 22, 91};
  for (int n = 1; n <= maxN; ++n) {
    const auto& all = genAll(c, n, sch);
    CHECK(static_cast<int>(all.size()) == counts[n]);
    for (const auto& x : all) {
      CHECK(objSize(x) == n);
      CHECK(validateObj(x).empty());
      if (n == 1) continue;
      DecompStep s = decompose(x, sch);
      // Decompose inverts compose.
      CHECK(keyOf(compose(s, c, sch)) == keyOf(x));
      // Parts are valid, smaller, and the parameter is in range.
      for (const auto& p : s.parts) {
        CHECK(validateObj(p).empty());
        CHECK(objSize(p) < n);
      }
      switch (s.kind) {
        case DecompStep::Base: CHECK(n == 1); break;
        case DecompStep::Wrap:
          CHECK(sizeStat(x, sch) == s.i);
          CHECK(s.i >= 1);
          CHECK(s.i <= sizeStat(s.parts[0], sch));
          CHECK(objSize(s.parts[0]) == n - 1);
          break;
        case DecompStep::Graft:
          CHECK(sizeStat(x, sch) == sizeStat(s.parts[0], sch) + 1);
          CHECK(objSize(s.parts[0]) == n - 1);
          break;
        case DecompStep::Join:
          CHECK(sizeStat(x, sch) == s.i + sizeStat(s.parts[1], sch));
          CHECK(s.i >= 1);
          CHECK(s.i <= sizeStat(s.parts[0], sch));
          CHECK(objSize(s.parts[0]) + objSize(s.parts[1]) == n - 1);
          break;
      }
    }
  }
}

}  // namespace

TEST_CASE("base objects") {
  CHECK(encodeObj(baseObject(Cls::Beta)) == "(1 1)");
  CHECK(encodeObj(baseObject(Cls::Deco)) == "(* -1)");
  CHECK(encodeObj(baseObject(Cls::Interval)) == "[ud,ud]");
  CHECK(canonicalForm(std::get<RootedMap>(baseObject(Cls::Map))) == canonicalForm(M2bond));
  for (Cls c : {Cls::Beta, Cls::Deco, Cls::Map, Cls::Interval}) {
    CHECK(objSize(baseObject(c)) == 1);
    CHECK(sizeStat(baseObject(c), Scheme::Parallel) == 1);
    CHECK(sizeStat(baseObject(c), Scheme::Series) == 1);
    CHECK(classify(baseObject(c)) == TypeTag::I);
    CHECK(decompose(baseObject(c)).kind == DecompStep::Base);
  }
}

TEST_CASE("class and type names") {
  CHECK(clsName(clsFromName("beta")) == "beta");
  CHECK(clsName(clsFromName("interval")) == "interval");
  CHECK_THROWS(clsFromName("nope"));
  CHECK(typeName(TypeTag::III) == "III");
  CHECK(clsOf(baseObject(Cls::Deco)) == Cls::Deco);
}

TEST_CASE("labeled tree steps") {
  DecompStep s = decompose(Obj{parseBeta("(1 (1 1))")});
  CHECK(s.kind == DecompStep::Wrap);
  CHECK(s.i == 1);
  CHECK(encodeObj(s.parts[0]) == "(1 1)");

  DecompStep g{DecompStep::Graft, 0, {Obj{parseBeta("(1 1)")}}};
  CHECK(encodeObj(compose(g, Cls::Beta)) == "(2 1 1)");
  CHECK(stepKey(decompose(compose(g, Cls::Beta))) == stepKey(g));
}

TEST_CASE("decorated tree steps") {
  DecompStep s = decompose(Obj{parseDeco("(* (* -1) -1)")});
  CHECK(s.kind == DecompStep::Join);
  CHECK(s.i == 1);
  CHECK(encodeObj(s.parts[0]) == "(* -1)");
  CHECK(encodeObj(s.parts[1]) == "(* -1)");

  DecompStep w = decompose(Obj{parseDeco("(* (* -1 -1))")});
  CHECK(w.kind == DecompStep::Wrap);
  CHECK(w.i == flCount(parseDeco("(* (* -1 -1))")));
}

TEST_CASE("map steps, parallel scheme") {
  Obj c3 = compose(DecompStep{DecompStep::Wrap, 1, {Obj{M2bond}}}, Cls::Map);
  CHECK(std::get<RootedMap>(c3) == C3);

  Obj band = compose(DecompStep{DecompStep::Graft, 0, {Obj{M2bond}}}, Cls::Map);
  CHECK(std::get<RootedMap>(band).sigma == Band3.sigma);
  CHECK(std::get<RootedMap>(band).root == Band3.root);

  Obj join = compose(DecompStep{DecompStep::Join, 1, {Obj{M2bond}, Obj{M2bond}}}, Cls::Map);
  CHECK(std::get<RootedMap>(join).sigma == std::vector<int>{2, 4, 6, 1, 3, 7, 0, 5});
  CHECK(std::get<RootedMap>(join).root == 0);
  DecompStep s = decompose(join);
  CHECK(s.kind == DecompStep::Join);
  CHECK(s.i == 1);
  CHECK(canonicalForm(std::get<RootedMap>(s.parts[0])) == canonicalForm(M2bond));
  CHECK(canonicalForm(std::get<RootedMap>(s.parts[1])) == canonicalForm(M2bond));

  CHECK(classify(Obj{C3}) == TypeTag::II);
  CHECK(classify(Obj{Band3}) == TypeTag::III);
}

TEST_CASE("map steps, series scheme") {
  Obj band = compose(DecompStep{DecompStep::Wrap, 1, {Obj{M2bond}}}, Cls::Map, Scheme::Series);
  CHECK(std::get<RootedMap>(band).sigma == std::vector<int>{4, 3, 0, 5, 2, 1});
  CHECK(std::get<RootedMap>(band).root == 4);
  CHECK(canonicalForm(std::get<RootedMap>(band)) == canonicalForm(Band3));

  DecompStep s = decompose(Obj{Band3}, Scheme::Series);
  CHECK(s.kind == DecompStep::Wrap);
  CHECK(s.i == 1);
  CHECK(canonicalForm(std::get<RootedMap>(s.parts[0])) == canonicalForm(M2bond));

  // The series scheme subdivides the root edge where the parallel one
  // duplicates it, so the triangle is the series graft of the double edge.
  Obj tri = compose(DecompStep{DecompStep::Graft, 0, {Obj{M2bond}}}, Cls::Map, Scheme::Series);
  CHECK(canonicalForm(std::get<RootedMap>(tri)) == canonicalForm(C3));
  CHECK(classify(Obj{C3}, Scheme::Series) == TypeTag::III);
  DecompStep g = decompose(Obj{C3}, Scheme::Series);
  CHECK(g.kind == DecompStep::Graft);
  CHECK(canonicalForm(std::get<RootedMap>(g.parts[0])) == canonicalForm(M2bond));
}

TEST_CASE("interval steps") {
  Obj join = compose(
      DecompStep{DecompStep::Join, 1,
                 {Obj{parseInterval("[ud,ud]")}, Obj{parseInterval("[ud,ud]")}}},
      Cls::Interval);
  CHECK(encodeObj(join) == "[uuddud,uuddud]");
  DecompStep s = decompose(join);
  CHECK(s.kind == DecompStep::Join);
  CHECK(s.i == 1);
  CHECK(encodeObj(s.parts[0]) == "[ud,ud]");
  CHECK(encodeObj(s.parts[1]) == "[ud,ud]");

  CHECK(encodeObj(compose(DecompStep{DecompStep::Wrap, 1, {Obj{parseInterval("[ud,ud]")}}},
                          Cls::Interval)) == "[uudd,uudd]");
  CHECK(encodeObj(compose(DecompStep{DecompStep::Graft, 0, {Obj{parseInterval("[ud,ud]")}}},
                          Cls::Interval)) == "[udud,udud]");
}

TEST_CASE("exhaustive round trips and counts") {
  checkClass(Cls::Beta, Scheme::Parallel, 5);
  checkClass(Cls::Deco, Scheme::Parallel, 5);
  checkClass(Cls::Interval, Scheme::Parallel, 5);
  checkClass(Cls::Map, Scheme::Parallel, 5);
  checkClass(Cls::Map, Scheme::Series, 5);
}

TEST_CASE("step json") {
  CHECK(stepToJson(DecompStep{}) == "{\"kind\":\"base\"}");
  DecompStep w{DecompStep::Wrap, 2, {Obj{parseBeta("(1 1)")}}};
  CHECK(stepToJson(w) == "{\"kind\":\"wrap\",\"i\":2,\"inner\":\"(1 1)\"}");
  DecompStep j{DecompStep::Join, 1, {Obj{parseInterval("[ud,ud]")}, Obj{parseInterval("[ud,ud]")}}};
  CHECK(stepToJson(j) == "{\"kind\":\"join\",\"i\":1,\"head\":\"[ud,ud]\",\"tail\":\"[ud,ud]\"}");
}
