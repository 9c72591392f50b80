#pragma once

#include <string>

#include "nsp/decomp.hpp"

namespace nsp {

struct BetaStats {
  int root = 0;   // root label
  int rpath = 0;  // edges on the rightmost path
  int leaf = 0;
  int inner = 0;  // internal nodes
  int sub = 0;    // children of the root
  int stem = 0;   // single-child nodes heading the longest chain from the root
  int rsub = 0;   // label-1 nodes on the rightmost path, root excluded
  int gamma = 0;  // leaves processed by the right-to-left decrement scan

  bool operator==(const BetaStats&) const = default;
};

struct DecoStats {
  int fl = 0;  // free leaves
  int leaf = 0;
  int inner = 0;
  int sub = 0;
  int rpath = 0;
  int stem = 0;
  int dsub = 0;  // internal nodes with exactly one certificate candidate
  int rfl = 0;   // free leaves removable right to left

  bool operator==(const DecoStats&) const = default;
};

struct MapStats {
  int deg = 0;
  int fdeg = 0;
  int face = 0;
  int vertex = 0;
  int pcomp = 0;  // components of the parallel decomposition
  int scomp = 0;  // components of the series decomposition
  int ejoin = 0;  // successive root contractions staying non-separable
  int ecut = 0;   // successive root-vertex edge deletions staying non-separable

  bool operator==(const MapStats&) const = default;
};

struct IntervalStats {
  int cont = 0;      // non-initial contacts of the lower path
  int contStar = 0;  // non-initial contacts of the upper path
  int peak = 0;
  int dblu = 0;  // up steps followed by an up step
  int desc = 0;  // length of the last descent of the upper path
  int level = 0; // largest k with Q = u^k Q' d^k, Q' a Dyck word
  int teeth = 0; // trailing ud blocks removable without emptying the lower path

  bool operator==(const IntervalStats&) const = default;
};

BetaStats statsBeta(const BetaTree& b);
DecoStats statsDeco(const DecoTree& t);
MapStats statsMap(const RootedMap& m);
IntervalStats statsInterval(const SyncInterval& i);

// Flat JSON objects keyed by statistic name.
std::string statsToJson(const BetaStats& s);
std::string statsToJson(const DecoStats& s);
std::string statsToJson(const MapStats& s);
std::string statsToJson(const IntervalStats& s);

// Dispatches on the class of the object.
std::string statsJson(const Obj& x);

}  // namespace nsp
