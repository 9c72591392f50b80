#pragma once

#include <string>
#include <variant>
#include <vector>

#include "nsp/interval.hpp"
#include "nsp/map.hpp"
#include "nsp/tree.hpp"

namespace nsp {

enum class Cls { Beta, Deco, Map, Interval };
enum class Scheme { Parallel, Series };
enum class TypeTag { I, II, III, IV };

using Obj = std::variant<BetaTree, DecoTree, RootedMap, SyncInterval>;

Cls clsOf(const Obj& x);
std::string clsName(Cls c);
Cls clsFromName(const std::string& name);
std::string typeName(TypeTag t);

// Edge count for trees and maps is n+1 edges at size n for maps; the shared
// size parameter: trees = edge count, maps = E - 1, intervals = Dyck size.
int objSize(const Obj& x);
// The statistic driving the decomposition parameter: root label / free
// leaves / deg (fdeg under the series scheme) / contacts of the lower path.
int sizeStat(const Obj& x, Scheme scheme);
std::vector<std::string> validateObj(const Obj& x);

std::string encodeObj(const Obj& x);
Obj decodeObj(Cls c, const std::string& text);
// The unique size-1 object of a class.
Obj baseObject(Cls c);

// One level of the shared four-type recursion.
struct DecompStep {
  enum Kind { Base, Wrap, Graft, Join } kind = Base;
  int i = 0;               // Wrap and Join parameter
  std::vector<Obj> parts;  // Wrap/Graft: {inner}; Join: {head, tail}

  bool operator==(const DecompStep&) const = default;
};

TypeTag classify(const Obj& x, Scheme scheme = Scheme::Parallel);
DecompStep decompose(const Obj& x, Scheme scheme = Scheme::Parallel);
Obj compose(const DecompStep& step, Cls c, Scheme scheme = Scheme::Parallel);

// Non-separable components of the map with the root edge removed, as
// biconnected components of the remaining multigraph.
struct SeriesBlocks {
  std::vector<int> edgeBlock;  // per edge id; root edge and unused get -1
  int nBlocks = 0;
};
SeriesBlocks seriesBlocks(const RootedMap& m);

std::string stepToJson(const DecompStep& s);

}  // namespace nsp
