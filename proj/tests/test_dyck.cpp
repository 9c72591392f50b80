#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nsp/dyck.hpp"

#include <algorithm>
#include <set>

using namespace nsp;

TEST_CASE("validation") {
  CHECK(isDyck("ud"));
  CHECK(isDyck("uudd"));
  CHECK(isDyck("uduududduudd"));
  CHECK(!isDyck(""));
  CHECK(!isDyck("du"));
  CHECK(!isDyck("uu"));
  CHECK(!isDyck("uxd"));
  CHECK(isDyckFactor(""));
  CHECK(validateDyck(DyckWord("uudd")).empty());
  CHECK(!validateDyck(DyckWord("uudduu")).empty());
}

TEST_CASE("type word") {
  CHECK(dyckType(DyckWord("ud")) == "");
  CHECK(dyckType(DyckWord("uudd")) == "E");
  CHECK(dyckType(DyckWord("udud")) == "N");
  CHECK(dyckType(DyckWord("uduududduudd")) == "NENNE");
}

TEST_CASE("covering relation") {
  auto cov = tamariCoversDown(DyckWord("uudd"));
  REQUIRE(cov.size() == 1);
  CHECK(cov[0] == DyckWord("udud"));
  CHECK(tamariCoversDown(DyckWord("udud")).empty());
  CHECK(tamariCoversDown(DyckWord("ud")).empty());
}

TEST_CASE("tamari order basics") {
  CHECK(tamariLeq(DyckWord("udud"), DyckWord("uudd")));
  CHECK(!tamariLeq(DyckWord("uudd"), DyckWord("udud")));
  CHECK(tamariLeq(DyckWord("uudd"), DyckWord("uudd")));
  // Bottom and top of each size.
  for (int n = 1; n <= 5; ++n) {
    std::string bot, top;
    for (int i = 0; i < n; ++i) bot += "ud";
    top = std::string(n, 'u') + std::string(n, 'd');
    for (const auto& w : allDyckWords(n)) {
      CHECK(tamariLeq(DyckWord(bot), w));
      CHECK(tamariLeq(w, DyckWord(top)));
    }
  }
}

TEST_CASE("tamari order matches independent closure") {
  for (int n = 1; n <= 5; ++n) {
    const auto& words = allDyckWords(n);
    for (const auto& a : words)
      for (const auto& b : words) CHECK(tamariLeq(a, b) == tamariLeqNaive(a, b));
  }
}

TEST_CASE("enumeration counts are Catalan") {
  int expect[] = {1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) {
    const auto& words = allDyckWords(n);
    CHECK(static_cast<int>(words.size()) == expect[n - 1]);
    std::set<std::string> uniq;
    for (const auto& w : words) {
      CHECK(isDyck(w.steps));
      CHECK(w.size() == n);
      uniq.insert(w.steps);
    }
    CHECK(static_cast<int>(uniq.size()) == expect[n - 1]);
    CHECK(std::is_sorted(words.begin(), words.end()));
  }
}

TEST_CASE("contacts") {
  CHECK(dyckContacts(DyckWord("ud")) == 1);
  CHECK(dyckContacts(DyckWord("uudd")) == 1);
  CHECK(dyckContacts(DyckWord("udud")) == 2);
  CHECK(dyckContacts(DyckWord("uduududduudd")) == 3);
}

TEST_CASE("mirror") {
  CHECK(mirDyck(DyckWord("ud")) == DyckWord("ud"));
  CHECK(mirDyck(DyckWord("uudd")) == DyckWord("udud"));
  CHECK(mirDyck(DyckWord("udud")) == DyckWord("uudd"));
  CHECK(mirDyck(DyckWord("ududud")) == DyckWord("uuuddd"));
  CHECK(mirDyck(DyckWord("uuuddd")) == DyckWord("ududud"));
}

TEST_CASE("mirror is an order-reversing involution") {
  for (int n = 1; n <= 5; ++n) {
    const auto& words = allDyckWords(n);
    for (const auto& w : words) {
      DyckWord m = mirDyck(w);
      CHECK(isDyck(m.steps));
      CHECK(mirDyck(m) == w);
    }
    for (const auto& a : words)
      for (const auto& b : words)
        CHECK(tamariLeq(a, b) == tamariLeq(mirDyck(b), mirDyck(a)));
  }
}
