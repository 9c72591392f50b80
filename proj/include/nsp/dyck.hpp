#pragma once

#include <compare>
#include <string>
#include <vector>

namespace nsp {

// Balanced word over {u, d}: as many u's as d's, every prefix has #u >= #d.
// Size n is the number of u steps; the empty word is allowed only as an
// intermediate value (factors of decompositions), never as a standalone object.
struct DyckWord {
  std::string steps;

  DyckWord() = default;
  explicit DyckWord(std::string s) : steps(std::move(s)) {}

  int size() const { return static_cast<int>(steps.size()) / 2; }
  bool empty() const { return steps.empty(); }
  bool operator==(const DyckWord&) const = default;
  auto operator<=>(const DyckWord&) const = default;
};

// True iff s is a balanced u/d word with non-negative prefixes (empty allowed).
bool isDyckFactor(const std::string& s);
// True iff s is a valid non-empty Dyck word.
bool isDyck(const std::string& s);

std::vector<std::string> validateDyck(const DyckWord& d);

// N/E word of length n-1: letter k is E iff the k-th up step is immediately
// followed by an up step.
std::string dyckType(const DyckWord& d);

// All D' covered by D: rewrite D = V D1 d W -> D' = V d D1 W with D1 a
// non-empty Dyck factor. The covering goes downward: D' is smaller than D.
std::vector<DyckWord> tamariCoversDown(const DyckWord& d);

// a <= b in the Tamari order (a reachable from b by repeated downward covers).
// Backed by a per-size memoized closure table.
bool tamariLeq(const DyckWord& a, const DyckWord& b);

// Independent closure computation (plain BFS, no shared table). Used by the
// verification suites to cross-check tamariLeq.
bool tamariLeqNaive(const DyckWord& a, const DyckWord& b);

// All Dyck words of size n in lexicographic order.
const std::vector<DyckWord>& allDyckWords(int n);

// Number of non-initial returns to the x-axis.
int dyckContacts(const DyckWord& d);

// mir(D1 u D2 d) = mir(D2) u mir(D1) d, splitting at the last non-initial
// contact. Involution; reverses the Tamari order.
DyckWord mirDyck(const DyckWord& d);

}  // namespace nsp
