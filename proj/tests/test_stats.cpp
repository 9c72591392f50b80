#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nsp/stats.hpp"

#include "nsp/bijections.hpp"
#include "nsp/enumerate.hpp"
#include "nsp/involutions.hpp"

using namespace nsp;

namespace {

const RootedMap C3{3, {5, 3, 4, 1, 2, 0}, 4};

}  // namespace

TEST_CASE("frozen worked examples") {
  CHECK(statsToJson(statsBeta(parseBeta("(2 1 1)"))) ==
        R"({"root":2,"rpath":1,"leaf":2,"int":1,"sub":2,"stem":0,"rsub":1,"gamma":1})");
  CHECK(statsToJson(statsDeco(parseDeco("(* (* -1))"))) ==
        R"({"fl":1,"leaf":1,"int":2,"sub":1,"rpath":2,"stem":1,"dsub":1,"rfl":0})");
  CHECK(statsToJson(statsMap(C3)) ==
        R"({"deg":1,"fdeg":2,"face":2,"vertex":3,"pcomp":1,"scomp":2,"ejoin":1,"ecut":0})");
  CHECK(statsToJson(statsInterval(parseInterval("[uudd,uudd]"))) ==
        R"({"cont":1,"contStar":1,"peak":1,"dblu":1,"desc":2,"level":1,"teeth":0})");
  CHECK(statsToJson(statsInterval(parseInterval("[ud,ud]"))) ==
        R"({"cont":1,"contStar":1,"peak":1,"dblu":0,"desc":1,"level":0,"teeth":0})");
  CHECK(dyckContacts(DyckWord{"uduududduudd"}) == 3);
}

TEST_CASE("statistics travel along the relabeling bijection") {
  for (int n = 1; n <= 5; ++n)
    for (const Obj& x : generate(Cls::Deco, n)) {
      DecoStats st = statsDeco(std::get<DecoTree>(x));
      BetaStats sb = statsBeta(decoToBetaDirect(std::get<DecoTree>(x)));
      CHECK(st.fl == sb.root);
      CHECK(1 + st.dsub == sb.rsub);
      CHECK(st.rfl == sb.gamma);
      CHECK(st.leaf == sb.leaf);
      CHECK(st.inner == sb.inner);
      CHECK(st.sub == sb.sub);
      CHECK(st.rpath == sb.rpath);
      CHECK(st.stem == sb.stem);
    }
}

TEST_CASE("statistics travel along the exploration and interval bijections") {
  for (int n = 1; n <= 5; ++n)
    for (const Obj& x : generate(Cls::Map, n)) {
      const auto& m = std::get<RootedMap>(x);
      DecoTree t = mapToDeco(m);
      MapStats sm = statsMap(m);
      DecoStats st = statsDeco(t);
      IntervalStats si = statsInterval(decoToInterval(t));
      CHECK(sm.deg == st.fl);
      CHECK(st.fl == si.cont);
      CHECK(sm.face == 1 + st.leaf);
      CHECK(sm.face == 1 + si.peak);
      // The vertex column: one more than the stated 1 + dblu (see C3 above,
      // vertex 3 against dblu 1).
      CHECK(sm.vertex == 1 + st.inner);
      CHECK(sm.vertex == 2 + si.dblu);
      CHECK(sm.pcomp == st.sub);
      CHECK(st.sub == si.contStar);
      CHECK(sm.fdeg == st.rpath);
      CHECK(st.rpath == si.desc);
      CHECK(sm.ejoin == st.stem);
      CHECK(st.stem == si.level);
      CHECK(sm.ecut == st.rfl);
      CHECK(st.rfl == si.teeth);
      CHECK(statsDeco(mapToDeco(dualMap(m))).dsub + 1 == sm.pcomp);
    }
}

TEST_CASE("dual and h exchange statistic pairs") {
  for (int n = 1; n <= 5; ++n) {
    for (const Obj& x : generate(Cls::Map, n)) {
      MapStats a = statsMap(std::get<RootedMap>(x));
      MapStats b = statsMap(dualMap(std::get<RootedMap>(x)));
      CHECK(a.deg == b.fdeg);
      CHECK(a.fdeg == b.deg);
      CHECK(a.face == b.vertex);
      CHECK(a.vertex == b.face);
      CHECK(a.ejoin == b.ecut);
      CHECK(a.ecut == b.ejoin);
    }
    for (const Obj& x : generate(Cls::Beta, n)) {
      BetaStats a = statsBeta(std::get<BetaTree>(x));
      BetaStats b = statsBeta(hBeta(std::get<BetaTree>(x)));
      CHECK(a.leaf == b.inner);
      CHECK(a.root == b.rpath);
      CHECK(a.gamma == b.stem);
      CHECK(a.sub == b.rsub);
    }
  }
}
