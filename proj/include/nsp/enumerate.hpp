#pragma once

#include <string>
#include <vector>

#include "nsp/decomp.hpp"

namespace nsp {

// All objects of the class with the given size, built through the recursive
// decomposition, deduplicated (maps by canonicalForm) and sorted
// lexicographically on their encodings. Memoized; the returned reference
// stays valid. The scheme only changes how maps are built, not the set.
const std::vector<Obj>& generate(Cls c, int n, Scheme scheme = Scheme::Parallel);

// Ceiling for the independent generators below.
int bruteForceCeiling(Cls c);

// The same sets built without the recursive decomposition: trees are all
// plane-tree shapes with all label assignments filtered by validation,
// intervals all Dyck pairs filtered by validation, maps all rotation systems
// over 2(n+1) darts with root dart 0 filtered by validation and deduplicated
// by canonicalForm. Throws std::invalid_argument above the ceiling.
std::vector<Obj> bruteForce(Cls c, int n);

struct CountRow {
  int n = 0;
  long long beta = 0, deco = 0, map = 0, interval = 0;
  long long fixH = 0, selfDual = 0, fixMir = 0;
};

struct CountTable {
  std::vector<CountRow> rows;
  // First witness per violated equality; empty when all rows are consistent.
  std::vector<std::string> failures;
};

// Cardinalities and fixed-point counts for n = 1..maxN, with the cross-class
// equalities and the fixed-point equalities asserted into `failures`.
CountTable countReport(int maxN);

std::string countTableTsv(const CountTable& t);
std::string countTableJson(const CountTable& t);

}  // namespace nsp
